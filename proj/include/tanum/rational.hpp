#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <vector>

namespace tanum {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;
using RationalVector = std::vector<Rational>;

// Smallest integer >= q.
inline BigInt ceil_rational(const Rational& q) {
    BigInt num = numerator(q), den = denominator(q);
    BigInt quot = num / den; // truncates toward zero
    if (quot * den < num) quot += 1;
    return quot;
}

// Converts exactly, throws if q is not an integer or does not fit in long long.
inline long long to_long_long(const BigInt& z) {
    if (z > std::numeric_limits<long long>::max() || z < std::numeric_limits<long long>::min())
        throw std::overflow_error("integer out of long long range");
    return static_cast<long long>(z);
}

}  // namespace tanum
