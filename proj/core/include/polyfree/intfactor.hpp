#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace polyfree::intfactor {

/// Prime factorization of |n| as (prime, exponent) pairs with ascending
/// primes. n must be nonzero. Trial division for small primes, then
/// Pollard-Brent rho with GMP primality certificates.
std::vector<std::pair<mpz_class, int>> factor(const mpz_class& n);

/// All positive divisors of |n|, ascending. n must be nonzero.
std::vector<mpz_class> divisors(const mpz_class& n);

} // namespace polyfree::intfactor
