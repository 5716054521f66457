#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace invsub {

using BigInt = boost::multiprecision::cpp_int;

// Always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

}  // namespace invsub
