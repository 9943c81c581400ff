#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <set>
#include <string>

namespace csamot {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

bool is_prime(std::int64_t n);

// True iff n = p^e for a prime p and e >= 1.
bool is_prime_power(std::int64_t n);

Integer binomial(std::int64_t n, std::int64_t k);

// Gaussian binomial [n choose k]_q; zero outside 0 <= k <= n.
Integer gaussian_binomial(std::int64_t n, std::int64_t k, const Integer& q);

// Representative of v mod m in [0, m).
Integer mod_floor(const Integer& v, const Integer& m);

// True iff v != 0 and |v| is a product of powers of the given primes.
bool is_unit_over(const Integer& v, const std::set<std::int64_t>& inverted_primes);

// Square root of a rational square, if it is one.
bool rational_sqrt(const Rational& v, Rational& root);

}  // namespace csamot
