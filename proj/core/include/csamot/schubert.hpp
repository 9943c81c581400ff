#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "csamot/arith.hpp"
#include "csamot/poly.hpp"

namespace csamot {

struct Grassmannian {
  int k;  // subspace dimension, number of rows of the box
  int n;  // ambient dimension; the box has n - k columns

  int columns() const { return n - k; }
  int dimension() const { return k * (n - k); }
  friend bool operator==(const Grassmannian&, const Grassmannian&) = default;
};

/// A Young diagram inside the k x (n-k) box. Trailing zeros are dropped, so
/// the empty partition has no parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;  // |lambda|
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }
  bool fits(const Grassmannian& gr) const;
  bool empty() const { return parts_.empty(); }

  // Renders as "(3,2,1)"; the empty partition is "()".
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// Parses "(3,2,1)", "(3, 2, 1)" or "()".
Partition parse_partition(std::string_view text);

// All partitions inside the box, optionally restricted to a given size;
// ordered by size, then reverse lexicographically.
std::vector<Partition> box_partitions(const Grassmannian& gr);
std::vector<Partition> box_partitions(const Grassmannian& gr, int size);

// The full k x (n-k) partition (class of a point).
Partition full_box(const Grassmannian& gr);

// Partitions obtained by adding one box, staying inside gr's box.
std::vector<Partition> add_one_box(const Partition& lambda, const Grassmannian& gr);

// Terms ordered "largest first", e.g. (3,3) before (3,2,1) before (2,2,2).
using LabelMap = std::map<Partition, Integer, std::greater<>>;

// Renders c1*(...) + c2*(...) as "(3,3) + 2(3,2,1) - (2,2,2)"; "0" if empty.
std::string render_combination(const LabelMap& terms);

// Parses "(3,3) + 2(3,2,1) - (2,2,2)" (spaces optional). "0" is the empty map.
LabelMap parse_combination(std::string_view text);

/// Homogeneous element of CH^*(Gr(k,n)) in the Schubert basis.
class GrChowClass {
 public:
  GrChowClass(Grassmannian gr, int codim);
  static GrChowClass schubert(Grassmannian gr, const Partition& lambda, const Integer& coeff = 1);
  static GrChowClass from_terms(Grassmannian gr, const LabelMap& terms);

  const Grassmannian& grassmannian() const { return gr_; }
  int codim() const { return codim_; }
  const LabelMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const Partition& lambda) const;

  void add(const Partition& lambda, const Integer& coeff);

  GrChowClass& operator+=(const GrChowClass& o);
  friend GrChowClass operator+(GrChowClass a, const GrChowClass& b) { return a += b; }
  friend GrChowClass operator*(const Integer& s, const GrChowClass& c);
  friend bool operator==(const GrChowClass&, const GrChowClass&) = default;

  std::string to_string() const { return render_combination(terms_); }

 private:
  Grassmannian gr_;
  int codim_;
  LabelMap terms_;
};

// Multiplication by the hyperplane class Delta_(1) via the Pieri rule.
GrChowClass pieri(const GrChowClass& c);

// Schur polynomial s_lambda in k variables x1..xk via the bialternant
// a_{lambda+delta} / a_delta.
Poly schur_polynomial(const Partition& lambda, int k);

// Coefficients of a symmetric polynomial in x1..xk in the Schur basis,
// keeping only partitions that fit into gr's box.
LabelMap schur_expand(const Poly& symmetric, const Grassmannian& gr);

// General product computed through Schur polynomials (Littlewood-Richardson).
GrChowClass schur_product(const GrChowClass& x, const GrChowClass& y);

// Coefficient of the point class in x * y; needs codim(x) + codim(y) = dim Gr.
Integer duality_pairing(const GrChowClass& x, const GrChowClass& y);

// lambda'_i = (n-k) - lambda_{k+1-i}
Partition complement(const Partition& lambda, const Grassmannian& gr);

// Number of F_q-points of Gr(k,n), i.e. the Gaussian binomial [n choose k]_q.
Integer point_count(int k, int n, const Integer& q);

}  // namespace csamot
