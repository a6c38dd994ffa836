#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace artin {

using Rational = boost::rational<std::int64_t>;

// Always "num/den", with den > 0.
inline std::string to_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace artin
