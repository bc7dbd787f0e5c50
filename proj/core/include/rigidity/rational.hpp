#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace rigidity {

using Rat = boost::rational<long long>;

/// Renders a rational as "a" or "a/b" (lowest terms, positive denominator).
inline std::string to_string(const Rat& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

} // namespace rigidity
