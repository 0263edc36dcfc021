#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace aridyn {

using Int = mpz_class;
using Rat = mpq_class;

// Natural log of a positive big integer, accurate to double rounding
// regardless of the integer's size.
double log_int(const Int& z);

// Natural log of a positive rational.
double log_rat(const Rat& q);

double to_double(const Rat& q);

// Bit length of |z|; 0 for z = 0.
std::size_t bit_size(const Int& z);

// C(n, k) for n >= 0.
Int binomial(unsigned long n, unsigned long k);

// Generalized binomial coefficient C(n, k) for any integer n and k >= 0:
// n(n-1)...(n-k+1)/k!. Exact; negative n gives the signed values used by
// negative powers of unipotent matrices.
Rat binomial_general(long n, unsigned long k);

// Exact power q^e for any integer exponent (q != 0 when e < 0).
Rat pow_rat(const Rat& q, long e);

// Prime factorization of |z| by trial division plus a primality check on the
// cofactor. Returns std::nullopt when a composite cofactor larger than the
// trial bound survives (caller decides whether that is a ResourceError).
std::optional<std::map<Int, unsigned>> factorize(const Int& z,
                                                 unsigned long trial_bound = 1000000);

// Deterministic decimal rendering used by the JSON reports.
std::string format_double(double x);

}  // namespace aridyn
