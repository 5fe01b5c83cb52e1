#ifndef GLSM_EPSILON_HPP
#define GLSM_EPSILON_HPP

#include <stdexcept>
#include <string>

namespace glsm {

/// Stability parameter; only the two limiting cases are meaningful here.
enum class Epsilon { ZeroPlus, Infinity };

inline std::string epsilon_to_string(Epsilon e) {
    return e == Epsilon::ZeroPlus ? "0+" : "infinity";
}

inline Epsilon epsilon_from_string(const std::string& s) {
    if (s == "0+") return Epsilon::ZeroPlus;
    if (s == "infinity" || s == "inf") return Epsilon::Infinity;
    throw std::invalid_argument("epsilon must be \"0+\" or \"infinity\", got \"" + s + "\"");
}

}  // namespace glsm

#endif
