#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace bigeven {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// 2^e as an exact integer, e >= 0.
inline BigInt pow2(long e) {
    BigInt r(1);
    return r << e;
}

}  // namespace bigeven
