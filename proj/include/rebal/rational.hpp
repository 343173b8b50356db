#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace rebal {

/// Exact load arithmetic. Every load in this library is a ratio of small
/// integers, so 64-bit numerators never come close to overflowing.
using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& q)
{
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

inline double to_double(const Rational& q)
{
    return boost::rational_cast<double>(q);
}

}  // namespace rebal
