#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "csamot/csa.hpp"
#include "csamot/matrix.hpp"
#include "csamot/poly.hpp"

namespace csamot {

// ---------------------------------------------------------------------------
// Twisted Pluecker coordinates of a pair (alpha_1, alpha_2) of quaternions.
// ---------------------------------------------------------------------------

template <class R>
struct PluckerPoint {
  R t1, t2;                   // Nrd(alpha_1), Nrd(alpha_2)
  R n_sum, n_i, n_j, n_k;     // Nrd(alpha_1 + u alpha_2), u = 1, i, j, k
  R u1, u2, u3, u4;

  std::vector<R> raw() const { return {t1, t2, n_sum, n_i, n_j, n_k}; }
  std::vector<R> u() const { return {u1, u2, u3, u4}; }
};

PluckerPoint<Rational> plucker_embed(const QuatElement<Rational>& alpha1, const QuatElement<Rational>& alpha2);
// Same formulas; the divisions by 2, 2a, 2b, 2ab are exact polynomial divisions.
PluckerPoint<Poly> plucker_embed(const QuatElement<Poly>& alpha1, const QuatElement<Poly>& alpha2);

// t1 t2 - (u1^2 - a u2^2 - b u3^2 + ab u4^2)
Rational quadric_residual(const QuatAlgebra<Rational>& alg, const PluckerPoint<Rational>& pt);
Poly quadric_residual(const QuatAlgebra<Poly>& alg, const PluckerPoint<Poly>& pt);

struct QuadricReport {
  Poly residual;             // symbolic residual, zero when the identity holds
  std::vector<Poly> product_residual;  // components of alpha_1 conj(alpha_2) - (u1 + u2 i + u3 j + u4 k)
  std::size_t samples = 0;
  std::size_t sample_failures = 0;
  bool holds() const;
};

// Symbolic expansion plus `samples` seeded numeric specializations
// (a, b odd, coordinates in [-5, 5]).
QuadricReport verify_quadric_identity(std::size_t samples = 200, std::uint32_t seed = 20240229);

// ---------------------------------------------------------------------------
// Affine charts of the degree-n compactification inside Gr(n, 2n):
// det(top n x n block) = det(bottom n x n block).
// ---------------------------------------------------------------------------

struct Chart {
  int degree;               // n
  std::vector<int> pivots;  // n rows in 1..2n, increasing

  Chart(int degree, std::vector<int> pivots);
  std::string to_string() const;  // "{1,2,4}"
};

std::vector<Chart> all_charts(int degree);

// Name of the free entry in row r, column c (1-based), e.g. "a33".
std::string chart_variable(int row, int col);

// det(top) - det(bottom) after putting the identity into the pivot rows.
Poly chart_equation(const Chart& chart);

enum class ChartKind { SpecialLinear, Graph };

struct ChartClassification {
  ChartKind kind;
  std::string pivot_variable;  // solved-for variable for Graph charts
  Poly equation;
};

// "SL3Type" / "GraphType"
std::string to_string(ChartKind kind, int degree);

// Throws Error(Unclassified) when neither shape applies.
ChartClassification classify_chart(const Chart& chart);

struct ChartSweepEntry {
  Chart chart;
  std::optional<ChartClassification> classification;  // empty when unclassified
  Poly equation;
};

std::vector<ChartSweepEntry> sweep_charts(int degree);

// ---------------------------------------------------------------------------
// Diagonal rational quadratic forms and Witt splitting.
// ---------------------------------------------------------------------------

struct QuadraticForm {
  std::vector<Rational> coefficients;  // diagonal, all nonzero

  explicit QuadraticForm(std::vector<Rational> coeffs);
  std::size_t dimension() const { return coefficients.size(); }
  RatMatrix gram() const;
  std::string to_string() const;  // "<1,-2,-3>"
};

QuadraticForm parse_quadratic_form(const std::string& text);  // "1,-2,-3"

struct WittDecomposition {
  std::size_t hyperbolic_planes = 0;
  QuadraticForm residual{std::vector<Rational>{}};
  // Rows are the new basis in original coordinates: e_1, f_1, ..., then the
  // residual basis. transform * gram * transform^T = H^planes + residual.
  RatMatrix transform;
  bool search_exhausted = false;  // no isotropic vector in the residual within the bound
  bool verified = false;          // congruence and det != 0 checked exactly
};

inline constexpr int kIsotropicSearchBound = 30;

// Empty when no isotropic vector has entries bounded by `bound`.
std::optional<std::vector<Rational>> find_isotropic_vector(const std::vector<Rational>& diagonal,
                                                           int bound = kIsotropicSearchBound);

WittDecomposition witt_split(const QuadraticForm& form, int bound = kIsotropicSearchBound);

// S with S diag(from) S^T = diag(to), found by representing to[0] by a vector
// with entries bounded by `bound`, splitting it off and recursing.
std::optional<RatMatrix> find_congruence(const QuadraticForm& from, const QuadraticForm& to,
                                         int bound = kIsotropicSearchBound);

struct SimilarityCertificate {
  Rational scale;
  RatMatrix transform;  // transform * diag(from) * transform^T = scale * diag(to)
};

// Tries each scale in turn.
std::optional<SimilarityCertificate> similarity_certificate(const QuadraticForm& from, const QuadraticForm& to,
                                                            const std::vector<Rational>& scales,
                                                            int bound = kIsotropicSearchBound);

}  // namespace csamot
