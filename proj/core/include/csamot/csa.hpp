#pragma once

#include <span>
#include <string>
#include <vector>

#include "csamot/arith.hpp"
#include "csamot/error.hpp"
#include "csamot/matrix.hpp"
#include "csamot/poly.hpp"

namespace csamot {

// ---------------------------------------------------------------------------
// Quaternion algebras (a,b)_R with i^2 = a, j^2 = b, ij = -ji = k.
// R is Integer, Rational or Poly; the base ring always has characteristic 0.
// ---------------------------------------------------------------------------

template <class R>
struct QuatAlgebra {
  R a;
  R b;

  QuatAlgebra(R a_, R b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a == R(0) || b == R(0)) throw Error(ErrorKind::InvalidArgument, "quaternion parameters must be nonzero");
  }

  friend bool operator==(const QuatAlgebra& l, const QuatAlgebra& r) { return l.a == r.a && l.b == r.b; }
};

template <class R>
struct QuatElement {
  QuatAlgebra<R> algebra;
  R x, y, z, w;  // x + y i + z j + w k

  static QuatElement scalar(const QuatAlgebra<R>& alg, R s) { return {alg, std::move(s), R(0), R(0), R(0)}; }
  static QuatElement unit_i(const QuatAlgebra<R>& alg) { return {alg, R(0), R(1), R(0), R(0)}; }
  static QuatElement unit_j(const QuatAlgebra<R>& alg) { return {alg, R(0), R(0), R(1), R(0)}; }
  static QuatElement unit_k(const QuatAlgebra<R>& alg) { return {alg, R(0), R(0), R(0), R(1)}; }

  friend bool operator==(const QuatElement& l, const QuatElement& r) {
    return l.algebra == r.algebra && l.x == r.x && l.y == r.y && l.z == r.z && l.w == r.w;
  }
};

template <class R>
void require_same_algebra(const QuatElement<R>& u, const QuatElement<R>& v) {
  if (!(u.algebra == v.algebra)) throw Error(ErrorKind::AlgebraMismatch, "quaternions from different algebras");
}

template <class R>
QuatElement<R> quat_add(const QuatElement<R>& u, const QuatElement<R>& v) {
  require_same_algebra(u, v);
  return {u.algebra, R(u.x + v.x), R(u.y + v.y), R(u.z + v.z), R(u.w + v.w)};
}

template <class R>
QuatElement<R> quat_scale(const R& s, const QuatElement<R>& u) {
  return {u.algebra, R(s * u.x), R(s * u.y), R(s * u.z), R(s * u.w)};
}

template <class R>
QuatElement<R> quat_mul(const QuatElement<R>& u, const QuatElement<R>& v) {
  require_same_algebra(u, v);
  const R& a = u.algebra.a;
  const R& b = u.algebra.b;
  const R ab = a * b;
  R x = R(u.x * v.x) + R(a * R(u.y * v.y)) + R(b * R(u.z * v.z)) - R(ab * R(u.w * v.w));
  R y = R(u.x * v.y) + R(u.y * v.x) - R(b * R(u.z * v.w)) + R(b * R(u.w * v.z));
  R z = R(u.x * v.z) + R(u.z * v.x) + R(a * R(u.y * v.w)) - R(a * R(u.w * v.y));
  R w = R(u.x * v.w) + R(u.w * v.x) + R(u.y * v.z) - R(u.z * v.y);
  return {u.algebra, std::move(x), std::move(y), std::move(z), std::move(w)};
}

// x + yi + zj + wk  ->  x - yi - zj - wk
template <class R>
QuatElement<R> conjugate(const QuatElement<R>& u) {
  return {u.algebra, u.x, R(-u.y), R(-u.z), R(-u.w)};
}

// Nrd(x + yi + zj + wk) = x^2 - a y^2 - b z^2 + ab w^2
template <class R>
R nrd(const QuatElement<R>& u) {
  const R& a = u.algebra.a;
  const R& b = u.algebra.b;
  return R(u.x * u.x) - R(a * R(u.y * u.y)) - R(b * R(u.z * u.z)) + R(R(a * b) * R(u.w * u.w));
}

template <class R>
R trd(const QuatElement<R>& u) {
  return R(R(2) * u.x);
}

// Symbolic quaternion x_s + y_s i + z_s j + w_s k over Z[a, b, coordinates].
QuatAlgebra<Poly> symbolic_quaternion_algebra();
QuatElement<Poly> symbolic_quaternion(const std::string& suffix);

// Left-multiplication matrix of u in the basis (1, i, j, k).
RatMatrix left_regular_representation(const QuatElement<Rational>& u);

// True iff no nonzero lambda has u_t * lambda = 0 for every t.
bool independent(std::span<const QuatElement<Rational>> tuple);

// ---------------------------------------------------------------------------
// Split algebras M_n(F_p) at desk scale.
// ---------------------------------------------------------------------------

struct SplitAlgebra {
  int n;  // degree
  int p;  // prime characteristic of the base field

  SplitAlgebra(int n_, int p_);
};

// Entries are kept reduced into [0, p).
struct SplitElement {
  SplitAlgebra algebra;
  Matrix<long> matrix;

  static SplitElement from_rows(const SplitAlgebra& alg, std::initializer_list<std::initializer_list<long>> rows);
  static SplitElement zero(const SplitAlgebra& alg);
  static SplitElement identity(const SplitAlgebra& alg);
  // Matrix unit E_rs (0-based).
  static SplitElement unit(const SplitAlgebra& alg, int r, int s);
};

SplitElement split_mul(const SplitElement& u, const SplitElement& v);

std::size_t rank_mod_p(Matrix<long> m, int p);

// Rank test: the stacked (l n) x n matrix has rank n, i.e. (u_1, ..., u_l):
// V -> V^l is injective.
bool independent(std::span<const SplitElement> tuple);

// Second route: the left ideal A u_1 + ... + A u_l equals A.
bool independent_via_left_ideal(std::span<const SplitElement> tuple);
std::size_t left_ideal_dimension(std::span<const SplitElement> tuple);

struct RightIdeal {
  Matrix<long> subspace;              // k x n reduced row echelon basis of U
  std::vector<SplitElement> basis;    // basis of V* (x) U = {M : im M in U}
};

struct RightIdealEnumeration {
  std::size_t count = 0;
  std::vector<RightIdeal> ideals;
};

// Enumerates k-dimensional U <= F_p^n and returns the right ideals
// {M : im M in U}, each verified to be a right ideal of dimension k n.
RightIdealEnumeration enumerate_right_ideals(const SplitAlgebra& alg, int k);

// All k-dimensional subspaces of F_p^n as reduced row echelon bases.
std::vector<Matrix<long>> enumerate_subspaces(int n, int k, int p);

}  // namespace csamot
