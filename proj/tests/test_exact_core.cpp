#include <random>

#include "csamot/arith.hpp"
#include "csamot/error.hpp"
#include "csamot/matrix.hpp"
#include "csamot/poly.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace csamot;

namespace {

Poly var(const char* name) { return Poly::variable(name); }

Integer eval_at(const Poly& p, std::mt19937& rng, std::map<std::string, Integer>& point) {
  std::uniform_int_distribution<int> d(-7, 7);
  for (const auto& v : p.variables())
    if (!point.count(v)) point[v] = d(rng);
  return p.evaluate(point);
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("poly: basic products") {
  const Poly x = var("x"), y = var("y");
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK(((x + y) * (x - y)).to_string() == "x^2 - y^2");
  const Poly p = pow(x, 3) - Poly(2L) * x * y + Poly(7L);
  CHECK(p * Poly(1L) == p);
  CHECK((p * Poly(0L)).is_zero());
}

TEST_CASE("poly: square of the reduced norm against the schoolbook product") {
  const Poly a = var("a"), b = var("b"), x = var("x"), y = var("y"), z = var("z"), w = var("w");
  const Poly n = x * x - a * y * y - b * z * z + a * b * w * w;
  const Poly sq = n * n;
  CHECK(sq.term_count() == 10);
  CHECK(sq == schoolbook_product(n, n));
  // Third route: numeric evaluation at random points.
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    std::map<std::string, Integer> pt;
    const Integer nv = eval_at(n, rng, pt);
    CHECK(eval_at(sq, rng, pt) == nv * nv);
  }
}

TEST_CASE("poly: commutative ring axioms on random polynomials") {
  std::mt19937 rng(11);
  const std::vector<std::string> vars = {"x", "y", "z"};
  for (int trial = 0; trial < 40; ++trial) {
    const Poly p = oracle::random_poly(rng, vars, 4, 2);
    const Poly q = oracle::random_poly(rng, vars, 3, 2);
    const Poly r = oracle::random_poly(rng, {"y", "t"}, 3, 2);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p + q == q + p);
    CHECK((p - p).is_zero());
    CHECK(p * q == schoolbook_product(p, q));
  }
}

TEST_CASE("poly: exact division") {
  const Poly x = var("x"), y = var("y");
  const Poly f = (x + y) * (x - Poly(3L) * y) * (x * y + Poly(1L));
  CHECK(f.divide_exact(x + y) == (x - Poly(3L) * y) * (x * y + Poly(1L)));
  CHECK((Poly(6L) * f).divide_exact(Integer(6)) == f);
  CHECK_THROWS_AS(f.divide_exact(x + Poly(2L)), Error);
  try {
    (x + Poly(1L)).divide_exact(Integer(2));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotDivisible);
  }
}

TEST_CASE("poly: substitution, coefficients and degrees") {
  const Poly x = var("x"), y = var("y");
  const Poly f = Poly(3L) * x * x * y - y + Poly(5L);
  CHECK(f.total_degree() == 3);
  CHECK(f.degree_in("x") == 2);
  CHECK(f.coefficient({{"x", 2}, {"y", 1}}) == 3);
  CHECK(f.constant_term() == 5);
  CHECK(f.coefficient_of("x", 2) == Poly(3L) * y);
  CHECK(f.substitute("y", Poly(2L)) == Poly(6L) * x * x + Poly(3L));
}

TEST_CASE("det_exact: known values") {
  const IntMatrix gram{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
  CHECK(det_exact(gram) == -2);
  CHECK(oracle::cofactor_det(gram) == -2);
  CHECK(det_exact(IntMatrix::identity(5)) == 1);
  const IntMatrix codim5{{1, -1, 0}, {0, -1, -1}, {-1, 1, -1}};
  const Integer d = det_exact(codim5);
  CHECK(d == oracle::cofactor_det(codim5));
  CHECK((d == 1 || d == -1));
  CHECK_THROWS_AS(det_exact(IntMatrix(2, 3)), Error);
}

TEST_CASE("det_exact: multiplicative and equal to cofactor expansion") {
  std::mt19937 rng(3);
  for (int t = 0; t < 30; ++t) {
    const IntMatrix m = random_matrix(rng, 4, -9, 9);
    const IntMatrix n = random_matrix(rng, 4, -9, 9);
    CHECK(det_exact(m) == oracle::cofactor_det(m));
    CHECK(det_exact(m * n) == det_exact(m) * det_exact(n));
  }
}

TEST_CASE("smith_normal_form: examples and reconstruction") {
  const IntMatrix gram{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
  const auto s = smith_normal_form(gram);
  CHECK(s.diagonal == std::vector<Integer>{1, 1, 2});
  CHECK(s.left * gram * s.right == diagonal_matrix(s.diagonal, 3, 3));

  CHECK(smith_normal_form(IntMatrix(3, 2)).diagonal == std::vector<Integer>{0, 0});
  CHECK(smith_normal_form(IntMatrix::identity(3)).diagonal == std::vector<Integer>{1, 1, 1});

  std::mt19937 rng(5);
  for (int t = 0; t < 40; ++t) {
    std::uniform_int_distribution<int> dim(1, 4);
    std::uniform_int_distribution<int> entry(-6, 6);
    const std::size_t r = dim(rng), c = dim(rng);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = entry(rng);
    const auto f = smith_normal_form(m);
    CHECK(f.left * m * f.right == diagonal_matrix(f.diagonal, r, c));
    CHECK(abs(det_exact(f.left)) == 1);
    CHECK(abs(det_exact(f.right)) == 1);
    for (std::size_t i = 0; i + 1 < f.diagonal.size(); ++i) {
      CHECK(f.diagonal[i] >= 0);
      if (f.diagonal[i] != 0) CHECK(f.diagonal[i + 1] % f.diagonal[i] == 0);
      else CHECK(f.diagonal[i + 1] == 0);
    }
  }
}

TEST_CASE("invertible_over_localization") {
  const IntMatrix gram{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
  CHECK(invertible_over_localization(gram, {2}));
  CHECK_FALSE(invertible_over_localization(gram, {}));
  CHECK(invertible_over_localization(IntMatrix::identity(4), {}));
  CHECK_THROWS_AS(invertible_over_localization(IntMatrix(2, 3), {}), Error);
}

TEST_CASE("arith helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(is_prime_power(8));
  CHECK(is_prime_power(9));
  CHECK_FALSE(is_prime_power(12));
  CHECK(binomial(6, 3) == 20);
  CHECK(gaussian_binomial(6, 3, 2) == 1395);
  CHECK(gaussian_binomial(4, 5, 2) == 0);
  CHECK(mod_floor(-7, 3) == 2);
  Rational root;
  CHECK(rational_sqrt(Rational(9, 4), root));
  CHECK(root == Rational(3, 2));
  CHECK_FALSE(rational_sqrt(Rational(2), root));
  CHECK_FALSE(rational_sqrt(Rational(-4), root));
}
