#include "csamot/csa.hpp"

#include <algorithm>

namespace csamot {

QuatAlgebra<Poly> symbolic_quaternion_algebra() { return {Poly::variable("a"), Poly::variable("b")}; }

QuatElement<Poly> symbolic_quaternion(const std::string& suffix) {
  return {symbolic_quaternion_algebra(), Poly::variable("x" + suffix), Poly::variable("y" + suffix),
          Poly::variable("z" + suffix), Poly::variable("w" + suffix)};
}

RatMatrix left_regular_representation(const QuatElement<Rational>& u) {
  const auto& alg = u.algebra;
  const QuatElement<Rational> basis[4] = {QuatElement<Rational>::scalar(alg, 1), QuatElement<Rational>::unit_i(alg),
                                          QuatElement<Rational>::unit_j(alg), QuatElement<Rational>::unit_k(alg)};
  RatMatrix m(4, 4);
  for (std::size_t c = 0; c < 4; ++c) {
    const auto prod = quat_mul(u, basis[c]);
    m(0, c) = prod.x;
    m(1, c) = prod.y;
    m(2, c) = prod.z;
    m(3, c) = prod.w;
  }
  return m;
}

bool independent(std::span<const QuatElement<Rational>> tuple) {
  if (tuple.empty()) throw Error(ErrorKind::EmptyTuple, "independent()");
  RatMatrix stacked(4 * tuple.size(), 4);
  for (std::size_t t = 0; t < tuple.size(); ++t) {
    require_same_algebra(tuple[0], tuple[t]);
    const RatMatrix l = left_regular_representation(tuple[t]);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) stacked(4 * t + r, c) = l(r, c);
  }
  return field_rank(stacked) == 4;
}

SplitAlgebra::SplitAlgebra(int n_, int p_) : n(n_), p(p_) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "degree must be positive");
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, "base field F_p needs p prime, got " + std::to_string(p));
}

namespace {

long reduce(long v, int p) {
  long r = v % p;
  return r < 0 ? r + p : r;
}

long inverse_mod(long v, int p) {
  // p is small; Fermat would also do.
  for (long x = 1; x < p; ++x)
    if (reduce(v * x, p) == 1) return x;
  throw Error(ErrorKind::NotDivisible, "zero has no inverse mod p");
}

void require_same(const SplitAlgebra& a, const SplitAlgebra& b) {
  if (a.n != b.n || a.p != b.p) throw Error(ErrorKind::AlgebraMismatch, "split algebras differ");
}

}  // namespace

SplitElement SplitElement::from_rows(const SplitAlgebra& alg, std::initializer_list<std::initializer_list<long>> rows) {
  Matrix<long> m(rows);
  if (m.rows() != static_cast<std::size_t>(alg.n) || m.cols() != static_cast<std::size_t>(alg.n))
    throw Error(ErrorKind::DimensionMismatch, "element must be n x n");
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = reduce(m(r, c), alg.p);
  return {alg, std::move(m)};
}

SplitElement SplitElement::zero(const SplitAlgebra& alg) {
  return {alg, Matrix<long>(static_cast<std::size_t>(alg.n), static_cast<std::size_t>(alg.n))};
}

SplitElement SplitElement::identity(const SplitAlgebra& alg) {
  return {alg, Matrix<long>::identity(static_cast<std::size_t>(alg.n))};
}

SplitElement SplitElement::unit(const SplitAlgebra& alg, int r, int s) {
  auto e = zero(alg);
  e.matrix(static_cast<std::size_t>(r), static_cast<std::size_t>(s)) = 1;
  return e;
}

SplitElement split_mul(const SplitElement& u, const SplitElement& v) {
  require_same(u.algebra, v.algebra);
  Matrix<long> m = u.matrix * v.matrix;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = reduce(m(r, c), u.algebra.p);
  return {u.algebra, std::move(m)};
}

std::size_t rank_mod_p(Matrix<long> m, int p) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && reduce(m(pivot, c), p) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(pivot, rank);
    const long inv = inverse_mod(m(rank, c), p);
    for (std::size_t k = 0; k < m.cols(); ++k) m(rank, k) = reduce(m(rank, k) * inv, p);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank) continue;
      const long f = reduce(m(r, c), p);
      if (f == 0) continue;
      for (std::size_t k = 0; k < m.cols(); ++k) m(r, k) = reduce(m(r, k) - f * m(rank, k), p);
    }
    ++rank;
  }
  return rank;
}

bool independent(std::span<const SplitElement> tuple) {
  if (tuple.empty()) throw Error(ErrorKind::EmptyTuple, "independent()");
  const auto n = static_cast<std::size_t>(tuple[0].algebra.n);
  Matrix<long> stacked(n * tuple.size(), n);
  for (std::size_t t = 0; t < tuple.size(); ++t) {
    require_same(tuple[0].algebra, tuple[t].algebra);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) stacked(t * n + r, c) = tuple[t].matrix(r, c);
  }
  return rank_mod_p(stacked, tuple[0].algebra.p) == n;
}

std::size_t left_ideal_dimension(std::span<const SplitElement> tuple) {
  if (tuple.empty()) throw Error(ErrorKind::EmptyTuple, "left_ideal_dimension()");
  const SplitAlgebra& alg = tuple[0].algebra;
  const auto n = static_cast<std::size_t>(alg.n);
  // Spanning set {E_rs u_t}, flattened to vectors of length n^2.
  Matrix<long> span(n * n * tuple.size(), n * n);
  std::size_t row = 0;
  for (const auto& u : tuple) {
    require_same(alg, u.algebra);
    for (int r = 0; r < alg.n; ++r)
      for (int s = 0; s < alg.n; ++s) {
        const auto prod = split_mul(SplitElement::unit(alg, r, s), u);
        for (std::size_t i = 0; i < n * n; ++i) span(row, i) = prod.matrix.entries()[i];
        ++row;
      }
  }
  return rank_mod_p(span, alg.p);
}

bool independent_via_left_ideal(std::span<const SplitElement> tuple) {
  const auto n = static_cast<std::size_t>(tuple.empty() ? 0 : tuple[0].algebra.n);
  return left_ideal_dimension(tuple) == n * n;
}

std::vector<Matrix<long>> enumerate_subspaces(int n, int k, int p) {
  std::vector<Matrix<long>> out;
  if (k < 0 || k > n) return out;
  const auto un = static_cast<std::size_t>(n);
  const auto uk = static_cast<std::size_t>(k);
  // Pivot column sets in lexicographic order, then free entries in base-p order.
  std::vector<int> pivots(uk);
  for (std::size_t i = 0; i < uk; ++i) pivots[i] = static_cast<int>(i);
  while (true) {
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < uk; ++r)
      for (std::size_t c = static_cast<std::size_t>(pivots[r]) + 1; c < un; ++c)
        if (std::find(pivots.begin(), pivots.end(), static_cast<int>(c)) == pivots.end()) free.emplace_back(r, c);
    std::vector<long> digits(free.size(), 0);
    while (true) {
      Matrix<long> m(uk, un);
      for (std::size_t r = 0; r < uk; ++r) m(r, static_cast<std::size_t>(pivots[r])) = 1;
      for (std::size_t f = 0; f < free.size(); ++f) m(free[f].first, free[f].second) = digits[f];
      out.push_back(std::move(m));
      std::size_t f = 0;
      while (f < digits.size() && ++digits[f] == p) digits[f++] = 0;
      if (f == digits.size()) break;
    }
    // Next k-subset of {0..n-1}.
    std::size_t i = uk;
    while (i > 0 && pivots[i - 1] == n - static_cast<int>(uk - i) - 1) --i;
    if (i == 0) break;
    ++pivots[i - 1];
    for (std::size_t j = i; j < uk; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  return out;
}

RightIdealEnumeration enumerate_right_ideals(const SplitAlgebra& alg, int k) {
  if (alg.p > 3 || alg.n > 3)
    throw Error(ErrorKind::TooLarge, "enumeration is limited to q <= 3 and n <= 3");
  if (k < 0 || k > alg.n) throw Error(ErrorKind::InvalidArgument, "k must satisfy 0 <= k <= n");
  const auto n = static_cast<std::size_t>(alg.n);
  const auto uk = static_cast<std::size_t>(k);

  RightIdealEnumeration result;
  for (auto& subspace : enumerate_subspaces(alg.n, k, alg.p)) {
    RightIdeal ideal{subspace, {}};
    // u_i e_j^T: column j equal to the i-th basis vector of U.
    for (std::size_t i = 0; i < uk; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        auto m = SplitElement::zero(alg);
        for (std::size_t r = 0; r < n; ++r) m.matrix(r, j) = subspace(i, r);
        ideal.basis.push_back(std::move(m));
      }

    Matrix<long> flat(ideal.basis.size(), n * n);
    for (std::size_t b = 0; b < ideal.basis.size(); ++b)
      for (std::size_t e = 0; e < n * n; ++e) flat(b, e) = ideal.basis[b].matrix.entries()[e];
    const std::size_t dim = rank_mod_p(flat, alg.p);
    if (dim != uk * n) throw Error(ErrorKind::RankMismatch, "ideal V*(x)U has the wrong dimension");

    // Closure under right multiplication by every matrix unit.
    for (const auto& m : ideal.basis)
      for (int r = 0; r < alg.n; ++r)
        for (int s = 0; s < alg.n; ++s) {
          const auto prod = split_mul(m, SplitElement::unit(alg, r, s));
          Matrix<long> extended(flat.rows() + 1, n * n);
          for (std::size_t b = 0; b < flat.rows(); ++b)
            for (std::size_t e = 0; e < n * n; ++e) extended(b, e) = flat(b, e);
          for (std::size_t e = 0; e < n * n; ++e) extended(flat.rows(), e) = prod.matrix.entries()[e];
          if (rank_mod_p(extended, alg.p) != dim)
            throw Error(ErrorKind::RankMismatch, "V*(x)U is not closed under right multiplication");
        }
    result.ideals.push_back(std::move(ideal));
  }
  std::sort(result.ideals.begin(), result.ideals.end(),
            [](const RightIdeal& l, const RightIdeal& r) { return l.subspace.entries() < r.subspace.entries(); });
  result.count = result.ideals.size();
  return result;
}

}  // namespace csamot
