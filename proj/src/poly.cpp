#include "glsm/poly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace glsm {

namespace {

struct Parser {
    const std::string& text;
    const std::vector<std::string>& vars;
    std::size_t pos = 0;

    explicit Parser(const std::string& t, const std::vector<std::string>& v)
        : text(t), vars(v) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("polynomial parse error at position " +
                                    std::to_string(pos) + ": " + msg);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos;
        return true;
    }

    Int integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return Int(text.substr(start, pos - start));
    }

    Polynomial expr() {
        Polynomial acc = accept('-') ? constant(Rat(-1)) * factor_chain() : factor_chain();
        while (true) {
            if (accept('+')) acc = acc + factor_chain();
            else if (accept('-')) acc = acc - factor_chain();
            else break;
        }
        return acc;
    }

    Polynomial factor_chain() {
        Polynomial acc = factor();
        while (accept('*')) acc = acc * factor();
        return acc;
    }

    Polynomial factor() {
        Polynomial base = primary();
        if (accept('^')) {
            if (peek('-')) fail("negative exponent");
            Int e = integer();
            Polynomial pow = constant(Rat(1));
            for (Int k = 0; k < e; ++k) pow = pow * base;
            return pow;
        }
        return base;
    }

    Polynomial primary() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            Polynomial inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = integer();
            if (accept('/')) {
                Int den = integer();
                if (den == 0) fail("zero denominator");
                return constant(Rat(num, den));
            }
            return constant(Rat(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            std::string name = text.substr(start, pos - start);
            for (std::size_t i = 0; i < vars.size(); ++i) {
                if (vars[i] == name) {
                    Polynomial p{std::vector<std::string>(vars)};
                    Polynomial::Exponents e(vars.size(), 0);
                    e[i] = 1;
                    p.add_term(e, Rat(1));
                    return p;
                }
            }
            fail("unknown variable '" + name + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    Polynomial constant(const Rat& r) {
        Polynomial p{std::vector<std::string>(vars)};
        p.add_term(Polynomial::Exponents(vars.size(), 0), r);
        return p;
    }
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text, const std::vector<std::string>& variables) {
    Parser parser(text, variables);
    Polynomial p = parser.expr();
    parser.skip_ws();
    if (parser.pos != text.size()) parser.fail("trailing input");
    return p;
}

void Polynomial::add_term(const Exponents& e, const Rat& coeff) {
    if (e.size() != vars_.size()) throw std::invalid_argument("exponent vector length mismatch");
    if (coeff == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("variable list mismatch");
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("variable list mismatch");
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("variable list mismatch");
    Polynomial r{std::vector<std::string>(vars_)};
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e(vars_.size());
            for (std::size_t i = 0; i < vars_.size(); ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

Polynomial Polynomial::partial(std::size_t var_index) const {
    if (var_index >= vars_.size()) throw std::out_of_range("variable index out of range");
    Polynomial r{std::vector<std::string>(vars_)};
    for (const auto& [e, c] : terms_) {
        if (e[var_index] == 0) continue;
        Exponents d = e;
        d[var_index] -= 1;
        r.add_term(d, c * Rat(e[var_index]));
    }
    return r;
}

unsigned Polynomial::max_exponent(std::size_t var_index) const {
    unsigned m = 0;
    for (const auto& [e, c] : terms_) m = std::max(m, e[var_index]);
    return m;
}

Polynomial Polynomial::restrict_zero(const std::vector<std::size_t>& zeroed) const {
    Polynomial r{std::vector<std::string>(vars_)};
    for (const auto& [e, c] : terms_) {
        bool killed = false;
        for (std::size_t i : zeroed)
            if (e[i] > 0) { killed = true; break; }
        if (!killed) r.add_term(e, c);
    }
    return r;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // std::map gives a deterministic (lex ascending) order already; print
    // descending so leading terms come first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat coeff = c;
        if (first) {
            if (coeff < 0) { os << "-"; coeff = -coeff; }
        } else {
            os << (coeff < 0 ? " - " : " + ");
            if (coeff < 0) coeff = -coeff;
        }
        first = false;
        bool any_var = false;
        std::ostringstream mono;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            if (any_var) mono << "*";
            mono << vars_[i];
            if (e[i] > 1) mono << "^" << e[i];
            any_var = true;
        }
        if (!any_var) {
            os << rat_to_string(coeff);
        } else if (coeff == 1) {
            os << mono.str();
        } else {
            os << rat_to_string(coeff) << "*" << mono.str();
        }
    }
    return os.str();
}

Polynomial::WeightedDegree Polynomial::weighted_degree(const RatVector& weights) const {
    if (weights.size() != vars_.size())
        throw std::invalid_argument("weight vector length mismatch");
    if (terms_.empty()) return {WeightedDegree::ZeroPolynomial, Rat(0)};
    bool have = false;
    Rat deg = 0;
    for (const auto& [e, c] : terms_) {
        Rat d = 0;
        for (std::size_t i = 0; i < vars_.size(); ++i) d += Rat(e[i]) * weights[i];
        if (!have) {
            deg = d;
            have = true;
        } else if (d != deg) {
            return {WeightedDegree::NotQuasihomogeneous, Rat(0)};
        }
    }
    return {WeightedDegree::Quasihomogeneous, deg};
}

}  // namespace glsm
