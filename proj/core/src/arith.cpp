#include "csamot/arith.hpp"

#include "csamot/error.hpp"

namespace csamot {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::CharTwo: return "CharTwo";
    case ErrorKind::EmptyTuple: return "EmptyTuple";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::OutOfBox: return "OutOfBox";
    case ErrorKind::CodimMismatch: return "CodimMismatch";
    case ErrorKind::CodimOutOfRange: return "CodimOutOfRange";
    case ErrorKind::TopCodim: return "TopCodim";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotSelfDual: return "NotSelfDual";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::RangeError: return "RangeError";
    case ErrorKind::WeightOutOfRange: return "WeightOutOfRange";
    case ErrorKind::UnresolvableDifferential: return "UnresolvableDifferential";
    case ErrorKind::HigherDifferentialPossible: return "HigherDifferentialPossible";
    case ErrorKind::Unclassified: return "Unclassified";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_prime_power(std::int64_t n) {
  if (n < 2) return false;
  std::int64_t p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

Integer binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer gaussian_binomial(std::int64_t n, std::int64_t k, const Integer& q) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer num = 1;
  Integer den = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    Integer a, b;
    mpz_pow_ui(a.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(n - i));
    mpz_pow_ui(b.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(i + 1));
    num *= a - 1;
    den *= b - 1;
  }
  Integer out = num / den;
  if (out * den != num) throw Error(ErrorKind::NotDivisible, "gaussian binomial");
  return out;
}

Integer mod_floor(const Integer& v, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return r;
}

bool is_unit_over(const Integer& v, const std::set<std::int64_t>& inverted_primes) {
  if (v == 0) return false;
  Integer rest = abs(v);
  for (std::int64_t p : inverted_primes) {
    if (p < 2) continue;
    const Integer pp = p;
    while (mpz_divisible_p(rest.get_mpz_t(), pp.get_mpz_t())) rest /= pp;
  }
  return rest == 1;
}

bool rational_sqrt(const Rational& v, Rational& root) {
  if (v < 0) return false;
  const Integer num = v.get_num();
  const Integer den = v.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  root = Rational(rn, rd);
  root.canonicalize();
  return true;
}

}  // namespace csamot
