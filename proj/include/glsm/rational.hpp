#ifndef GLSM_RATIONAL_HPP
#define GLSM_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace glsm {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using RatVector = std::vector<Rat>;
using IntVector = std::vector<Int>;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

/// Fractional part normalized to [0, 1).
inline Rat frac_mod1(const Rat& r) {
    Int n = numerator(r), d = denominator(r);  // d > 0
    Int m = n % d;
    if (m < 0) m += d;
    return Rat(m, d);
}

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

/// Renders a rational as "a" or "a/b"; never a float.
std::string rat_to_string(const Rat& r);

/// Parses "a", "-a", "a/b". Throws std::invalid_argument on malformed input.
Rat rat_from_string(const std::string& s);

std::string ratvec_to_string(const RatVector& v);

inline Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

/// lcm of denominators; 1 for the empty vector.
Int common_denominator(const RatVector& v);

}  // namespace glsm

#endif
