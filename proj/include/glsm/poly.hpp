#ifndef GLSM_POLY_HPP
#define GLSM_POLY_HPP

#include "glsm/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace glsm {

/// Sparse multivariate polynomial over Q with a fixed ambient variable list.
/// Exponent vectors are dense (the variable count is always small here) and
/// the monomial order for printing is lexicographic in declared order.
class Polynomial {
public:
    using Exponents = std::vector<unsigned>;

    Polynomial() = default;
    explicit Polynomial(std::vector<std::string> variables)
        : vars_(std::move(variables)) {}

    static Polynomial parse(const std::string& text, const std::vector<std::string>& variables);

    const std::vector<std::string>& variables() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exponents, Rat>& terms() const { return terms_; }

    void add_term(const Exponents& e, const Rat& coeff);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    bool operator==(const Polynomial& o) const {
        return vars_ == o.vars_ && terms_ == o.terms_;
    }

    Polynomial partial(std::size_t var_index) const;

    /// Max exponent of a variable over all terms; 0 when absent.
    unsigned max_exponent(std::size_t var_index) const;
    bool mentions(std::size_t var_index) const { return max_exponent(var_index) > 0; }

    /// Substitutes 0 for every variable in `zeroed` (by index).
    Polynomial restrict_zero(const std::vector<std::size_t>& zeroed) const;

    std::string to_string() const;

    struct WeightedDegree {
        enum Kind { Quasihomogeneous, NotQuasihomogeneous, ZeroPolynomial };
        Kind kind;
        Rat degree;  // meaningful only for Quasihomogeneous
    };
    WeightedDegree weighted_degree(const RatVector& weights) const;

private:
    std::vector<std::string> vars_;
    std::map<Exponents, Rat> terms_;
};

}  // namespace glsm

#endif
