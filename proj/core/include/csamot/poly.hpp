#pragma once

#include <map>
#include <string>
#include <vector>

#include "csamot/arith.hpp"

namespace csamot {

// Graded lexicographic order, largest monomial first.
struct GrlexGreater {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

/// Multivariate polynomial with arbitrary-precision integer coefficients.
///
/// Variables are named. Binary operations on polynomials over different
/// variable lists first embed both operands into the union of the two lists
/// (left operand's variables first), so callers can freely mix e.g. a
/// polynomial in (a, b) with one in (x, y). No zero coefficient is ever
/// stored and equality ignores unused variables.
class Poly {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Integer, GrlexGreater>;

  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor)
  Poly(const Integer& c);  // NOLINT(google-explicit-constructor)

  static Poly variable(const std::string& name);
  // Monomial c * prod vars[i]^exps[i].
  static Poly monomial(const std::vector<std::string>& vars, const Exponents& exps,
                       const Integer& c = 1);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }
  int total_degree() const;
  int degree_in(const std::string& var) const;

  // Coefficient of the monomial prod var^e (variables not listed have exponent 0).
  Integer coefficient(const std::map<std::string, int>& monomial) const;
  // Collects the terms with var^power and drops that variable.
  Poly coefficient_of(const std::string& var, int power) const;
  // Integer constant term.
  Integer constant_term() const;

  Poly substitute(const std::string& var, const Poly& value) const;
  // Every variable that occurs in a term must be bound.
  Integer evaluate(const std::map<std::string, Integer>& values) const;

  // Re-expresses this polynomial over `vars`, which must contain every
  // variable that actually occurs.
  Poly over(const std::vector<std::string>& vars) const;
  // Drops variables that no term uses.
  Poly trimmed() const;

  // Exact division; throws Error(NotDivisible) when d does not divide *this.
  Poly divide_exact(const Poly& d) const;
  Poly divide_exact(const Integer& d) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Leading monomial and coefficient under grlex; precondition: nonzero.
  const Exponents& leading_exponents() const { return terms_.begin()->first; }
  const Integer& leading_coefficient() const { return terms_.begin()->second; }

  std::string to_string() const;

 private:
  Poly(std::vector<std::string> vars, TermMap terms);
  void add_term(const Exponents& e, const Integer& c);

  friend std::pair<Poly, Poly> unify(const Poly& a, const Poly& b);

  std::vector<std::string> vars_;
  TermMap terms_;
};

Poly pow(const Poly& p, unsigned e);

// Returns copies of a and b expressed over the union of their variable lists.
std::pair<Poly, Poly> unify(const Poly& a, const Poly& b);

// Schoolbook product over unified variables, without any term-map shortcuts;
// kept separate from operator* so tests can cross-check the two.
Poly schoolbook_product(const Poly& a, const Poly& b);

}  // namespace csamot
