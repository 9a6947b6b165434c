#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace balfam {

// Exact arbitrary-precision arithmetic. Every value is kept in lowest terms
// with a strictly positive denominator; zero is 0/1. No operation rounds.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline int sign_of(const BigRational& value) { return value.sign(); }

}  // namespace balfam
