#ifndef WIRSING_RATIONAL_HPP
#define WIRSING_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "wirsing/errors.hpp"

namespace wirsing {

//=============================================================================
// Exact integer / rational layer.
//
// GMP's C++ classes carry the arithmetic; this header only adds the
// number-theoretic helpers the rest of the library leans on (valuations,
// primality, factorization, exact powers).  mpq_class is always kept in
// canonical form by GMP itself.
//=============================================================================

using Int = mpz_class;
using Rat = mpq_class;

// a/b as an exact rational; throws ZeroInput on b = 0.
Rat make_rat(const Int& a, const Int& b);

// parse "p", "-p/q", "3.5"-free surface: integers and fractions only.
Rat parse_rat(const std::string& s);

// v_p(n) for n != 0; throws ZeroInput on n = 0, NotPrime unless p is prime.
long valuation(const Int& n, const Int& p);

// v_p extended to rationals: v_p(num) - v_p(den).
long valuation(const Rat& x, const Int& p);

// x^e for integer e (e >= 0).
Int pow_int(const Int& x, unsigned long e);

// x^e for any integer e; throws ZeroInput on 0^negative.
Rat pow_rat(const Rat& x, long e);

// deterministic-for-our-range primality (GMP Miller-Rabin, 40 reps).
bool is_prime(const Int& n);

// prime factorization of |n| (n != 0), as (prime, exponent) sorted by prime.
// Trial division below 10^4, then Pollard rho (Brent) splitting.
std::vector<std::pair<Int, unsigned>> factorize(const Int& n);

// set of primes dividing numerator or denominator of x (x != 0).
std::vector<Int> support(const Rat& x);

// binomial coefficient C(n, k).
Int binomial(unsigned long n, unsigned long k);

// gcd of a whole vector, |.|; 0 for the empty/zero vector.
Int vector_gcd(const std::vector<Int>& v);

} // namespace wirsing

#endif
