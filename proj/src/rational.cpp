#include "glsm/rational.hpp"

#include <sstream>

namespace glsm {

std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

Rat rat_from_string(const std::string& s) {
    auto trim = [](const std::string& t) {
        size_t a = t.find_first_not_of(" \t");
        size_t b = t.find_last_not_of(" \t");
        if (a == std::string::npos) return std::string();
        return t.substr(a, b - a + 1);
    };
    std::string body = trim(s);
    if (body.empty()) throw std::invalid_argument("empty rational literal");
    auto parse_int = [&](const std::string& t) -> Int {
        std::string u = trim(t);
        if (u.empty()) throw std::invalid_argument("malformed rational literal: '" + s + "'");
        size_t i = (u[0] == '+' || u[0] == '-') ? 1 : 0;
        if (i == u.size()) throw std::invalid_argument("malformed rational literal: '" + s + "'");
        for (size_t j = i; j < u.size(); ++j)
            if (!isdigit(static_cast<unsigned char>(u[j])))
                throw std::invalid_argument("malformed rational literal: '" + s + "'");
        return Int(u);
    };
    size_t slash = body.find('/');
    if (slash == std::string::npos) return Rat(parse_int(body));
    Int num = parse_int(body.substr(0, slash));
    Int den = parse_int(body.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in rational literal: '" + s + "'");
    return Rat(num, den);
}

std::string ratvec_to_string(const RatVector& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += rat_to_string(v[i]);
    }
    return out + ")";
}

Int common_denominator(const RatVector& v) {
    Int l = 1;
    for (const auto& r : v) l = int_lcm(l, denominator(r));
    return l;
}

}  // namespace glsm
