#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "csamot/poly.hpp"

namespace csamot {

/// Strictly increasing I = {i_1 < ... < i_r} inside {1..n}.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> indices);

  const std::vector<int>& indices() const { return indices_; }
  int weight() const;  // |I|
  int length() const { return static_cast<int>(indices_.size()); }
  bool empty() const { return indices_.empty(); }

  // Renders as "{1,3}"; the empty index is "{}".
  std::string to_string() const;

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> indices_;
};

MultiIndex parse_multi_index(std::string_view text);

// Shortlex order: by length, then lexicographically.
std::vector<MultiIndex> enumerate_multi_indices(int n, std::optional<int> weight = std::nullopt);

/// Multiplicity of each Z(q)[p] in a direct sum of Tate motives.
class TatePattern {
 public:
  using Key = std::pair<int, int>;  // (twist q, shift p)

  TatePattern() = default;
  TatePattern(std::initializer_list<std::pair<const Key, std::int64_t>> entries);

  const std::map<Key, std::int64_t>& entries() const { return entries_; }
  std::int64_t multiplicity(int q, int p) const;
  std::int64_t total() const;

  void add(int q, int p, std::int64_t m = 1);
  TatePattern twisted(int q, int p) const;  // (X)(q)[p]
  TatePattern& operator+=(const TatePattern& o);
  friend TatePattern operator+(TatePattern a, const TatePattern& b) { return a += b; }
  // Removes a sub-pattern; throws if o is not contained in *this.
  TatePattern minus(const TatePattern& o) const;

  friend bool operator==(const TatePattern&, const TatePattern&) = default;

  // "Z + Z(1)[1] + Z(2)[3]"; "0" if empty.
  std::string to_string() const;

 private:
  std::map<Key, std::int64_t> entries_;
};

TatePattern gl_pattern(int n);

// Slice q of M for prime n; empty for q outside the support.
std::map<int, TatePattern> motive_m_slices(int n);

// Pattern of the split projective space P^m: Z + Z(1)[2] + ... + Z(m)[2m].
TatePattern projective_space_pattern(int m);

/// Polynomial in the Chern classes c_1, c_2, ... of alpha with coefficients in Z[lambda].
/// Keys are sorted multisets of subscripts; c_0 = 1 never appears.
class ChernExpr {
 public:
  using Monomial = std::vector<int>;

  ChernExpr() = default;
  static ChernExpr unit();
  static ChernExpr chern(int k);  // c_k, or unit for k = 0

  const std::map<Monomial, Poly>& terms() const { return terms_; }
  void add(Monomial m, const Poly& coeff);

  // Coefficient polynomial (in lambda) of the given monomial.
  Poly coefficient(const Monomial& m) const;
  // Integer coefficient of lambda^e * m.
  Integer coefficient(const Monomial& m, int lambda_power) const;

  ChernExpr substitute_lambda(const Poly& value) const;

  friend ChernExpr operator*(const ChernExpr& a, const ChernExpr& b);
  friend bool operator==(const ChernExpr&, const ChernExpr&) = default;

  std::string to_string() const;

 private:
  std::map<Monomial, Poly> terms_;
};

inline const std::string kLambda = "lambda";

// c_k([L].[alpha]) = sum_{i=0}^{k-1} (-1)^i binom(k-1, i) lambda^i c_{k-i}(alpha)
ChernExpr chern_twist(int k);

// prod_t chern_twist(j_t), with lambda -> -lambda when sign_flip is set.
ChernExpr chern_twist_product(const MultiIndex& j, bool sign_flip);

/// d_2 between slices q and q+1. Entries are residues mod n of the integer
/// multiplying the symbolic unit c.[A].
struct D2Matrix {
  int n = 0;
  int q = 0;
  std::vector<MultiIndex> rows;  // |I| = q
  std::vector<MultiIndex> cols;  // |J| = q + 1
  std::vector<std::int64_t> entries;

  std::int64_t at(std::size_t r, std::size_t c) const { return entries[r * cols.size() + c]; }
  std::int64_t entry(const MultiIndex& i, const MultiIndex& j) const;
};

// Raw integer coefficients (not reduced mod n). Valid for any n >= 1.
// Closed form: i_t when J is I with i_t raised by one, else 0.
std::vector<std::int64_t> d2_coefficients_closed_form(int n, int q);
// Coefficient of lambda^1 c_I in chern_twist_product(J, flipped).
std::vector<std::int64_t> d2_coefficients_from_chern(int n, int q);

// n prime, 1 <= q <= n(n+1)/2. Computes the closed form and cross-checks it
// against the Chern-class expansion.
D2Matrix d2_matrix(int n, int q);

struct PatternCheck {
  std::string name;
  bool passed;
  std::string expected;
  std::string actual;
};

// Split-case consistency checks of the GL_1 / SL_1 / slice decompositions.
std::vector<PatternCheck> pattern_checks(const std::vector<int>& slice_degrees = {2, 3});

}  // namespace csamot
