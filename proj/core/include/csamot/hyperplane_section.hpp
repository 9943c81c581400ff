#pragma once

// Chow groups of a smooth hyperplane section X of Gr(3,6) (dim X = 8) in the
// split case, written in Schubert labels:
//
//   codim i <= 4 : label lambda with |lambda| = i, the pull-back of Delta_lambda
//   codim i >= 5 : label lambda with |lambda| = i + 1, the class pushing
//                  forward to Delta_lambda
//
// In codim 4 only the rank-3 pulled-back part is modeled; the vanishing cycle
// has no label.

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "csamot/matrix.hpp"
#include "csamot/poly.hpp"
#include "csamot/schubert.hpp"

namespace csamot {

inline constexpr Grassmannian kGr36{3, 6};
inline constexpr int kXDimension = 8;

// |lambda| of the labels used in codim c.
int x_label_size(int codim);

class XClass {
 public:
  explicit XClass(int codim);
  static XClass from_terms(int codim, const LabelMap& terms);
  static XClass label(const Partition& lambda, const Integer& coeff = 1);
  static XClass fundamental() { return label(Partition()); }
  static XClass point() { return label(full_box(kGr36)); }

  int codim() const { return codim_; }
  const LabelMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const Partition& lambda) const;

  void add(const Partition& lambda, const Integer& coeff);

  XClass& operator+=(const XClass& o);
  XClass& operator-=(const XClass& o);
  friend XClass operator+(XClass a, const XClass& b) { return a += b; }
  friend XClass operator-(XClass a, const XClass& b) { return a -= b; }
  friend XClass operator*(const Integer& s, const XClass& c);
  friend bool operator==(const XClass&, const XClass&) = default;

  // Coefficients reduced into [0, m); zero terms dropped.
  XClass reduced_mod(const Integer& m) const;

  // The Gr(3,6) class with the same labels.
  GrChowClass as_gr_labels() const;

  std::string to_string() const { return render_combination(terms_); }

 private:
  int codim_;
  LabelMap terms_;
};

// Codim of a standalone label: |lambda| for |lambda| <= 4, |lambda| - 1 for
// |lambda| >= 6. |lambda| = 5 never labels a class on X.
int x_codim_of_label(const Partition& lambda);

XClass restrict_from_gr(const GrChowClass& c);

// Multiplication by the hyperplane class; from codim 4 to 5 the Pieri rule is
// applied twice in Gr(3,6).
XClass hyperplane_mul(const XClass& x);

// Intersection number on X; codim(x) + codim(y) = 8.
Integer pairing_x(const XClass& x, const XClass& y);

IntMatrix gram_matrix(const std::vector<XClass>& classes);

/// c0 + H c1 + H^2 c2 on P^2 x X, with H^3 = 0.
struct PXClass {
  std::array<XClass, 3> components;
  int total_codim;

  PXClass(int total_codim, std::array<XClass, 3> parts);

  const XClass& at(int h_power) const { return components[static_cast<std::size_t>(h_power)]; }
  PXClass reduced_mod(const Integer& m) const;
  bool is_zero() const;
  std::string to_string() const;

  friend PXClass operator-(const PXClass& a, const PXClass& b);
  friend bool operator==(const PXClass&, const PXClass&) = default;
};

// The hyperplane class of X acting on each component (H commutes through).
PXClass hyperplane_mul(const PXClass& c);

// The five rational cycles alpha_1 .. alpha_5, stored verbatim.
PXClass alpha(int i);

struct RecursionCheck {
  bool holds;
  PXClass residual;  // (next - [] * current) mod modulus
};

RecursionCheck check_recursion(const PXClass& current, const PXClass& next, const Integer& modulus);

// alpha_{i+1} == [] * alpha_i mod 3, for i in 1..4.
RecursionCheck verify_alpha_recursion(int i);

// Block matrix of phi^t o phi for a self-dual collection of classes.
IntMatrix tate_iso_matrix(const std::vector<XClass>& classes);
bool tate_iso_check(const std::vector<XClass>& classes, const std::set<std::int64_t>& inverted_primes);

// The collection {fundamental, components of alpha_1..alpha_5, point}.
std::vector<XClass> alpha_collection();

// Coefficient matrix of `classes` against the Schubert labels of the codim
// (rows: classes, columns: labels in box_partitions order).
IntMatrix label_coefficients(const std::vector<XClass>& classes, int codim);
bool basis_certificate(const std::vector<XClass>& classes, int codim);

// The rational-cycle basis lists by codimension (1,2,3,4,5,6,7); codim 4 is the
// span of the pulled-back part.
std::vector<XClass> alpha_components_in_codim(int codim);

struct ChernTwistIdentity {
  Poly residual;  // prod (x_i + h) - (e3 + h e2 + h^2 e1)
  bool holds;     // residual == h^3
};

ChernTwistIdentity verify_c3_twist_identity();

}  // namespace csamot
