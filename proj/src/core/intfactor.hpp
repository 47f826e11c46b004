#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace macias::detail {

// Prime factorization of n (n <= 1 yields an empty list) by trial division
// up to 10^6; a surviving cofactor below 10^12 is necessarily prime, anything
// larger raises SizeLimit.
std::vector<std::pair<mpz_class, long>> factor_positive_integer(mpz_class n);

// Writes q = a^2 + b^2 with a >= b > 0; valid for q = 2 and rational primes
// q = 1 mod 4. Brute force over a, desk scale only.
std::pair<mpz_class, mpz_class> two_square_split(const mpz_class& q);

}  // namespace macias::detail
