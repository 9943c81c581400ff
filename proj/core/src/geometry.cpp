#include "csamot/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "csamot/error.hpp"

namespace csamot {

namespace {

template <class R>
QuatElement<R> shifted(const QuatElement<R>& alpha1, const QuatElement<R>& unit, const QuatElement<R>& alpha2) {
  return quat_add(alpha1, quat_mul(unit, alpha2));
}

// Raw norms plus the numerators of u1..u4; `div(num, den)` performs the division.
template <class R, class Div>
PluckerPoint<R> embed(const QuatElement<R>& alpha1, const QuatElement<R>& alpha2, Div div) {
  require_same_algebra(alpha1, alpha2);
  const auto& alg = alpha1.algebra;
  PluckerPoint<R> pt;
  pt.t1 = nrd(alpha1);
  pt.t2 = nrd(alpha2);
  pt.n_sum = nrd(shifted(alpha1, QuatElement<R>::scalar(alg, R(1)), alpha2));
  pt.n_i = nrd(shifted(alpha1, QuatElement<R>::unit_i(alg), alpha2));
  pt.n_j = nrd(shifted(alpha1, QuatElement<R>::unit_j(alg), alpha2));
  pt.n_k = nrd(shifted(alpha1, QuatElement<R>::unit_k(alg), alpha2));
  const R& a = alg.a;
  const R& b = alg.b;
  const R ab = a * b;
  // Nrd(alpha_1 + u alpha_2) = t1 + Nrd(u) t2 + Trd(alpha_1 conj(alpha_2) conj(u)).
  pt.u1 = div(R(pt.n_sum - pt.t1 - pt.t2), R(2));
  pt.u2 = div(R(pt.t1 - pt.n_i - R(a * pt.t2)), R(R(2) * a));
  pt.u3 = div(R(pt.t1 - pt.n_j - R(b * pt.t2)), R(R(2) * b));
  pt.u4 = div(R(pt.n_k - pt.t1 - R(ab * pt.t2)), R(R(2) * ab));
  return pt;
}

template <class R>
R residual_of(const QuatAlgebra<R>& alg, const PluckerPoint<R>& pt) {
  const R& a = alg.a;
  const R& b = alg.b;
  R form = R(pt.u1 * pt.u1) - R(a * R(pt.u2 * pt.u2)) - R(b * R(pt.u3 * pt.u3)) + R(R(a * b) * R(pt.u4 * pt.u4));
  return R(R(pt.t1 * pt.t2) - form);
}

}  // namespace

PluckerPoint<Rational> plucker_embed(const QuatElement<Rational>& alpha1, const QuatElement<Rational>& alpha2) {
  return embed(alpha1, alpha2, [](const Rational& num, const Rational& den) { return Rational(num / den); });
}

PluckerPoint<Poly> plucker_embed(const QuatElement<Poly>& alpha1, const QuatElement<Poly>& alpha2) {
  return embed(alpha1, alpha2, [](const Poly& num, const Poly& den) { return num.divide_exact(den); });
}

Rational quadric_residual(const QuatAlgebra<Rational>& alg, const PluckerPoint<Rational>& pt) {
  return residual_of(alg, pt);
}

Poly quadric_residual(const QuatAlgebra<Poly>& alg, const PluckerPoint<Poly>& pt) { return residual_of(alg, pt); }

bool QuadricReport::holds() const {
  return residual.is_zero() && sample_failures == 0 &&
         std::all_of(product_residual.begin(), product_residual.end(), [](const Poly& p) { return p.is_zero(); });
}

QuadricReport verify_quadric_identity(std::size_t samples, std::uint32_t seed) {
  QuadricReport report;
  const auto alg = symbolic_quaternion_algebra();
  const auto alpha1 = symbolic_quaternion("1");
  const auto alpha2 = symbolic_quaternion("2");
  const auto pt = plucker_embed(alpha1, alpha2);
  report.residual = quadric_residual(alg, pt);

  const auto prod = quat_mul(alpha1, conjugate(alpha2));
  report.product_residual = {prod.x - pt.u1, prod.y - pt.u2, prod.z - pt.u3, prod.w - pt.u4};

  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> odd(-5, 4);
  std::uniform_int_distribution<int> coord(-5, 5);
  for (std::size_t s = 0; s < samples; ++s) {
    const QuatAlgebra<Rational> num_alg(2 * odd(rng) + 1, 2 * odd(rng) + 1);
    auto draw = [&] { return QuatElement<Rational>{num_alg, coord(rng), coord(rng), coord(rng), coord(rng)}; };
    const auto q1 = draw();
    const auto q2 = draw();
    ++report.samples;
    if (quadric_residual(num_alg, plucker_embed(q1, q2)) != 0) ++report.sample_failures;
  }
  return report;
}

// ---------------------------------------------------------------------------

Chart::Chart(int degree_, std::vector<int> pivots_) : degree(degree_), pivots(std::move(pivots_)) {
  if (degree < 1) throw Error(ErrorKind::InvalidArgument, "chart degree must be positive");
  if (static_cast<int>(pivots.size()) != degree)
    throw Error(ErrorKind::InvalidArgument, "a chart needs exactly " + std::to_string(degree) + " pivot rows");
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] < 1 || pivots[i] > 2 * degree || (i > 0 && pivots[i] <= pivots[i - 1]))
      throw Error(ErrorKind::InvalidArgument, "pivot rows must be increasing within 1.." + std::to_string(2 * degree));
  }
}

std::string Chart::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < pivots.size(); ++i) out += (i ? "," : "") + std::to_string(pivots[i]);
  return out + "}";
}

std::vector<Chart> all_charts(int degree) {
  if (degree < 1 || degree > 4) throw Error(ErrorKind::RangeError, "chart sweeps support degrees 1..4");
  std::vector<Chart> out;
  const int rows = 2 * degree;
  std::vector<bool> mask(rows, false);
  std::fill(mask.begin(), mask.begin() + degree, true);
  do {
    std::vector<int> pivots;
    for (int r = 0; r < rows; ++r)
      if (mask[r]) pivots.push_back(r + 1);
    out.emplace_back(degree, std::move(pivots));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

std::string chart_variable(int row, int col) { return "a" + std::to_string(row) + std::to_string(col); }

namespace {

Poly laplace_det(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Poly det;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    const Poly term = m[0][c] * laplace_det(minor);
    if (c % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

// 2n x n matrix with the identity in the pivot rows and named entries elsewhere.
std::vector<std::vector<Poly>> chart_matrix(const Chart& chart) {
  const int n = chart.degree;
  std::vector<std::vector<Poly>> m(2 * n, std::vector<Poly>(n));
  int next_pivot = 0;
  for (int r = 1; r <= 2 * n; ++r) {
    const bool pivot = next_pivot < n && chart.pivots[next_pivot] == r;
    for (int c = 1; c <= n; ++c) {
      if (pivot) {
        m[r - 1][c - 1] = Poly(c - 1 == next_pivot ? 1L : 0L);
      } else {
        m[r - 1][c - 1] = Poly::variable(chart_variable(r, c));
      }
    }
    if (pivot) ++next_pivot;
  }
  return m;
}

}  // namespace

Poly chart_equation(const Chart& chart) {
  const auto m = chart_matrix(chart);
  const std::size_t n = chart.degree;
  std::vector<std::vector<Poly>> top(m.begin(), m.begin() + n);
  std::vector<std::vector<Poly>> bottom(m.begin() + n, m.end());
  return laplace_det(top) - laplace_det(bottom);
}

std::string to_string(ChartKind kind, int degree) {
  return kind == ChartKind::SpecialLinear ? "SL" + std::to_string(degree) + "Type" : "GraphType";
}

ChartClassification classify_chart(const Chart& chart) {
  const int n = chart.degree;
  const Poly eq = chart_equation(chart);

  std::vector<int> first(n), last(n);
  std::iota(first.begin(), first.end(), 1);
  std::iota(last.begin(), last.end(), n + 1);
  if (chart.pivots == first || chart.pivots == last) {
    const auto m = chart_matrix(chart);
    const std::size_t off = chart.pivots == first ? n : 0;
    const std::vector<std::vector<Poly>> free_block(m.begin() + off, m.begin() + off + n);
    const Poly sl = laplace_det(free_block) - Poly(1L);
    if (eq == sl || eq == -sl) return {ChartKind::SpecialLinear, "", eq};
  }

  std::vector<std::string> vars = eq.trimmed().variables();
  std::sort(vars.begin(), vars.end());
  for (const auto& v : vars) {
    if (eq.degree_in(v) != 1) continue;
    const Poly coeff = eq.coefficient_of(v, 1);
    if (coeff.is_constant() && (coeff.constant_term() == 1 || coeff.constant_term() == -1))
      return {ChartKind::Graph, v, eq};
  }
  throw Error(ErrorKind::Unclassified, "chart " + chart.to_string() + " has equation " + eq.to_string());
}

std::vector<ChartSweepEntry> sweep_charts(int degree) {
  std::vector<ChartSweepEntry> out;
  for (const auto& chart : all_charts(degree)) {
    ChartSweepEntry entry{chart, std::nullopt, chart_equation(chart)};
    try {
      entry.classification = classify_chart(chart);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Unclassified) throw;
    }
    out.push_back(std::move(entry));
  }
  return out;
}

// ---------------------------------------------------------------------------

QuadraticForm::QuadraticForm(std::vector<Rational> coeffs) : coefficients(std::move(coeffs)) {
  for (const auto& c : coefficients)
    if (c == 0) throw Error(ErrorKind::InvalidArgument, "diagonal quadratic form coefficients must be nonzero");
}

RatMatrix QuadraticForm::gram() const {
  RatMatrix g(dimension(), dimension());
  for (std::size_t i = 0; i < dimension(); ++i) g(i, i) = coefficients[i];
  return g;
}

std::string QuadraticForm::to_string() const {
  std::string out = "<";
  for (std::size_t i = 0; i < coefficients.size(); ++i) out += (i ? "," : "") + coefficients[i].get_str();
  return out + ">";
}

QuadraticForm parse_quadratic_form(const std::string& text) {
  std::vector<Rational> coeffs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    Rational v;
    if (item.empty() || v.set_str(item, 10) != 0)
      throw Error(ErrorKind::ParseError, "bad quadratic form coefficient '" + item + "'");
    v.canonicalize();
    coeffs.push_back(v);
  }
  if (coeffs.empty()) throw Error(ErrorKind::ParseError, "empty quadratic form");
  return QuadraticForm(std::move(coeffs));
}

std::optional<std::vector<Rational>> find_isotropic_vector(const std::vector<Rational>& diagonal, int bound) {
  const std::size_t m = diagonal.size();
  if (m < 2) return std::nullopt;
  const std::size_t free = m - 1;
  // Search shells of growing max-norm so small vectors come first.
  for (int radius = 1; radius <= bound; ++radius) {
    std::vector<int> x(free, -radius);
    while (true) {
      const bool on_shell = std::any_of(x.begin(), x.end(), [&](int v) { return v == radius || v == -radius; });
      if (on_shell) {
        Rational partial = 0;
        for (std::size_t i = 0; i < free; ++i) partial += diagonal[i] * x[i] * x[i];
        Rational root;
        if (rational_sqrt(Rational(-partial / diagonal[free]), root)) {
          std::vector<Rational> v(x.begin(), x.end());
          v.push_back(root);
          return v;
        }
      }
      std::size_t k = 0;
      while (k < free && x[k] == radius) x[k++] = -radius;
      if (k == free) break;
      ++x[k];
    }
  }
  return std::nullopt;
}

namespace {

using Vec = std::vector<Rational>;

Rational bilinear(const Vec& g, const Vec& x, const Vec& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < g.size(); ++i) s += g[i] * x[i] * y[i];
  return s;
}

Vec axpy(const Vec& x, const Rational& c, const Vec& y) {  // x + c y
  Vec out(x);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += c * y[i];
  return out;
}

bool is_zero_vec(const Vec& x) {
  return std::all_of(x.begin(), x.end(), [](const Rational& r) { return r == 0; });
}

// Orthogonal basis of span(xs) for the nondegenerate form g restricted to it.
std::vector<Vec> orthogonalize(const Vec& g, std::vector<Vec> xs) {
  std::vector<Vec> out;
  while (true) {
    xs.erase(std::remove_if(xs.begin(), xs.end(), is_zero_vec), xs.end());
    if (xs.empty()) break;
    auto it = std::find_if(xs.begin(), xs.end(), [&](const Vec& x) { return bilinear(g, x, x) != 0; });
    if (it == xs.end()) {
      bool fixed = false;
      for (std::size_t i = 0; i < xs.size() && !fixed; ++i)
        for (std::size_t j = i + 1; j < xs.size() && !fixed; ++j)
          if (bilinear(g, xs[i], xs[j]) != 0) {
            xs[i] = axpy(xs[i], 1, xs[j]);
            fixed = true;
          }
      if (!fixed) throw Error(ErrorKind::InvalidArgument, "degenerate subspace during Witt splitting");
      continue;
    }
    const Vec pivot = *it;
    xs.erase(it);
    const Rational qp = bilinear(g, pivot, pivot);
    for (auto& y : xs) y = axpy(y, -bilinear(g, y, pivot) / qp, pivot);
    out.push_back(pivot);
  }
  return out;
}

}  // namespace

WittDecomposition witt_split(const QuadraticForm& form, int bound) {
  const std::size_t dim = form.dimension();
  const Vec& g = form.coefficients;
  std::vector<Vec> planes;
  std::vector<Vec> rest;
  for (std::size_t i = 0; i < dim; ++i) {
    Vec e(dim, 0);
    e[i] = 1;
    rest.push_back(std::move(e));
  }

  WittDecomposition out;
  while (rest.size() >= 2) {
    Vec values;
    for (const auto& r : rest) values.push_back(bilinear(g, r, r));
    const auto c = find_isotropic_vector(values, bound);
    if (!c) {
      out.search_exhausted = true;
      break;
    }
    Vec v(dim, 0);
    for (std::size_t k = 0; k < rest.size(); ++k) v = axpy(v, (*c)[k], rest[k]);
    std::size_t k = 0;
    while ((*c)[k] == 0) ++k;
    const Vec& w = rest[k];
    const Rational bvw = (*c)[k] * values[k];
    // Hyperbolic pair: B(e, e) = B(f, f) = 0, B(e, f) = 1.
    Vec f = axpy(w, -bilinear(g, w, w) / (2 * bvw), v);
    for (auto& x : f) x /= bvw;
    std::vector<Vec> complement;
    for (const auto& r : rest) complement.push_back(axpy(axpy(r, -bilinear(g, r, f), v), -bilinear(g, r, v), f));
    auto next = orthogonalize(g, std::move(complement));
    if (next.size() + 2 != rest.size())
      throw Error(ErrorKind::InvalidArgument, "orthogonal complement has the wrong dimension");
    planes.push_back(std::move(v));
    planes.push_back(std::move(f));
    rest = std::move(next);
  }

  out.hyperbolic_planes = planes.size() / 2;
  Vec residual;
  for (const auto& r : rest) residual.push_back(bilinear(g, r, r));
  out.residual = QuadraticForm(residual);

  out.transform = RatMatrix(dim, dim);
  std::size_t row = 0;
  for (const auto* list : {&planes, &rest})
    for (const auto& vec : *list) {
      for (std::size_t j = 0; j < dim; ++j) out.transform(row, j) = vec[j];
      ++row;
    }

  RatMatrix expected(dim, dim);
  for (std::size_t p = 0; p < out.hyperbolic_planes; ++p) {
    expected(2 * p, 2 * p + 1) = 1;
    expected(2 * p + 1, 2 * p) = 1;
  }
  for (std::size_t i = 0; i < residual.size(); ++i) expected(planes.size() + i, planes.size() + i) = residual[i];
  out.verified = out.transform * form.gram() * out.transform.transposed() == expected && field_det(out.transform) != 0;
  return out;
}

std::optional<RatMatrix> find_congruence(const QuadraticForm& from, const QuadraticForm& to, int bound) {
  const std::size_t dim = from.dimension();
  if (to.dimension() != dim) return std::nullopt;
  const Vec& g = from.coefficients;
  std::vector<Vec> rest;
  for (std::size_t i = 0; i < dim; ++i) {
    Vec e(dim, 0);
    e[i] = 1;
    rest.push_back(std::move(e));
  }
  RatMatrix s(dim, dim);
  for (std::size_t row = 0; row < dim; ++row) {
    const Rational& target = to.coefficients[row];
    Vec values;
    for (const auto& r : rest) values.push_back(bilinear(g, r, r));
    // Search for x in the remaining space with q(x) = target * s^2.
    std::optional<Vec> hit;
    const std::size_t m = rest.size();
    for (int radius = 1; radius <= bound && !hit; ++radius) {
      std::vector<int> x(m, -radius);
      while (!hit) {
        if (std::any_of(x.begin(), x.end(), [&](int v) { return v == radius || v == -radius; })) {
          Rational q = 0;
          for (std::size_t k = 0; k < m; ++k) q += values[k] * x[k] * x[k];
          Rational root;
          if (q != 0 && rational_sqrt(Rational(q / target), root)) {
            Vec vec(dim, 0);
            for (std::size_t k = 0; k < m; ++k) vec = axpy(vec, Rational(x[k]) / root, rest[k]);
            hit = std::move(vec);
          }
        }
        std::size_t k = 0;
        while (k < m && x[k] == radius) x[k++] = -radius;
        if (k == m) break;
        ++x[k];
      }
    }
    if (!hit) return std::nullopt;
    const Vec& x = *hit;
    for (std::size_t j = 0; j < dim; ++j) s(row, j) = x[j];
    std::vector<Vec> complement;
    for (const auto& r : rest) complement.push_back(axpy(r, -bilinear(g, r, x) / target, x));
    rest = orthogonalize(g, std::move(complement));
    if (rest.size() != dim - row - 1) return std::nullopt;
  }
  RatMatrix want(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) want(i, i) = to.coefficients[i];
  if (!(s * from.gram() * s.transposed() == want)) return std::nullopt;
  return s;
}

std::optional<SimilarityCertificate> similarity_certificate(const QuadraticForm& from, const QuadraticForm& to,
                                                            const std::vector<Rational>& scales, int bound) {
  for (const auto& scale : scales) {
    if (scale == 0) continue;
    std::vector<Rational> scaled;
    for (const auto& c : to.coefficients) scaled.push_back(scale * c);
    if (auto s = find_congruence(from, QuadraticForm(scaled), bound)) return SimilarityCertificate{scale, *s};
  }
  return std::nullopt;
}

}  // namespace csamot
