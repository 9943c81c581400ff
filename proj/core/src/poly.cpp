#include "csamot/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "csamot/error.hpp"

namespace csamot {

bool GrlexGreater::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return a > b;
}

Poly::Poly(long c) : Poly(Integer(c)) {}

Poly::Poly(const Integer& c) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

Poly::Poly(std::vector<std::string> vars, TermMap terms) : vars_(std::move(vars)), terms_(std::move(terms)) {}

Poly Poly::variable(const std::string& name) { return monomial({name}, {1}); }

Poly Poly::monomial(const std::vector<std::string>& vars, const Exponents& exps, const Integer& c) {
  if (vars.size() != exps.size()) throw Error(ErrorKind::DimensionMismatch, "monomial exponent length");
  Poly p;
  p.vars_ = vars;
  if (c != 0) p.terms_.emplace(exps, c);
  return p;
}

void Poly::add_term(const Exponents& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Poly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 &&
          std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(), [](int e) { return e == 0; }));
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

int Poly::degree_in(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return terms_.empty() ? -1 : 0;
  const auto idx = static_cast<std::size_t>(it - vars_.begin());
  int deg = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) deg = std::max(deg, e[idx]);
  return deg;
}

Integer Poly::coefficient(const std::map<std::string, int>& monomial) const {
  Exponents want(vars_.size(), 0);
  for (const auto& [name, power] : monomial) {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) {
      if (power != 0) return 0;
      continue;
    }
    want[static_cast<std::size_t>(it - vars_.begin())] = power;
  }
  auto it = terms_.find(want);
  return it == terms_.end() ? Integer(0) : it->second;
}

Poly Poly::coefficient_of(const std::string& var, int power) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return power == 0 ? *this : Poly();
  const auto idx = static_cast<std::size_t>(it - vars_.begin());
  std::vector<std::string> rest = vars_;
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(idx));
  Poly out(rest, {});
  for (const auto& [e, c] : terms_) {
    if (e[idx] != power) continue;
    Exponents reduced = e;
    reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(idx));
    out.add_term(reduced, c);
  }
  return out;
}

Integer Poly::constant_term() const {
  return coefficient({});
}

Poly Poly::substitute(const std::string& var, const Poly& value) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return *this;
  const auto idx = static_cast<std::size_t>(it - vars_.begin());
  Poly out;
  int max_power = 0;
  for (const auto& [e, c] : terms_) max_power = std::max(max_power, e[idx]);
  std::vector<Poly> powers{Poly(1)};
  for (int k = 1; k <= max_power; ++k) powers.push_back(powers.back() * value);
  for (int k = 0; k <= max_power; ++k) {
    Poly coeff = coefficient_of(var, k);
    if (!coeff.is_zero()) out += coeff * powers[static_cast<std::size_t>(k)];
  }
  return out;
}

Integer Poly::evaluate(const std::map<std::string, Integer>& values) const {
  Integer total = 0;
  for (const auto& [e, c] : terms_) {
    Integer term = c;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      auto v = values.find(vars_[i]);
      if (v == values.end()) throw Error(ErrorKind::InvalidArgument, "unbound variable " + vars_[i]);
      Integer p;
      mpz_pow_ui(p.get_mpz_t(), v->second.get_mpz_t(), static_cast<unsigned long>(e[i]));
      term *= p;
    }
    total += term;
  }
  return total;
}

Poly Poly::over(const std::vector<std::string>& vars) const {
  std::vector<std::size_t> pos(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), vars_[i]);
    if (it == vars.end()) {
      if (degree_in(vars_[i]) > 0) throw Error(ErrorKind::InvalidArgument, "variable " + vars_[i] + " dropped");
      pos[i] = vars.size();
    } else {
      pos[i] = static_cast<std::size_t>(it - vars.begin());
    }
  }
  Poly out(vars, {});
  for (const auto& [e, c] : terms_) {
    Exponents ne(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (pos[i] < vars.size()) ne[pos[i]] = e[i];
    out.add_term(ne, c);
  }
  return out;
}

Poly Poly::trimmed() const {
  std::vector<std::string> used;
  for (const auto& v : vars_)
    if (degree_in(v) > 0) used.push_back(v);
  return over(used);
}

std::pair<Poly, Poly> unify(const Poly& a, const Poly& b) {
  if (a.vars_ == b.vars_) return {a, b};
  std::vector<std::string> vars = a.vars_;
  for (const auto& v : b.vars_)
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  return {a.over(vars), b.over(vars)};
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (vars_ != o.vars_) {
    auto [a, b] = unify(*this, o);
    *this = std::move(a);
    for (const auto& [e, c] : b.terms_) add_term(e, c);
    return *this;
  }
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  auto [a, b] = unify(lhs, rhs);
  Poly out(a.vars_, {});
  if (a.is_zero() || b.is_zero()) return out;
  Poly::Exponents e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Poly schoolbook_product(const Poly& lhs, const Poly& rhs) {
  // Expands every pair of terms into its own monomial and sums the resulting
  // list of monomials one at a time.
  auto [a, b] = unify(lhs, rhs);
  std::vector<Poly> pieces;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      Poly::Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      pieces.push_back(Poly::monomial(a.variables(), e, ca * cb));
    }
  }
  Poly out = Poly::monomial(a.variables(), Poly::Exponents(a.variables().size(), 0), 0);
  for (const auto& piece : pieces) out = out + piece;
  return out;
}

bool operator==(const Poly& lhs, const Poly& rhs) {
  if (lhs.vars_ == rhs.vars_) return lhs.terms_ == rhs.terms_;
  auto [a, b] = unify(lhs, rhs);
  return a.terms_ == b.terms_;
}

Poly Poly::divide_exact(const Integer& d) const {
  if (d == 0) throw Error(ErrorKind::NotDivisible, "division by zero");
  Poly out = *this;
  for (auto& [e, c] : out.terms_) {
    if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()))
      throw Error(ErrorKind::NotDivisible, to_string() + " by " + d.get_str());
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  }
  return out;
}

Poly Poly::divide_exact(const Poly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::NotDivisible, "division by zero polynomial");
  auto [rem, d] = unify(*this, divisor);
  const auto& vars = rem.vars_;
  const Exponents lead = d.leading_exponents();
  const Integer lead_c = d.leading_coefficient();
  Poly quotient(vars, {});
  while (!rem.is_zero()) {
    const Exponents& e = rem.leading_exponents();
    Exponents shift(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      shift[i] = e[i] - lead[i];
      if (shift[i] < 0) throw Error(ErrorKind::NotDivisible, to_string() + " by " + divisor.to_string());
    }
    const Integer& c = rem.leading_coefficient();
    if (!mpz_divisible_p(c.get_mpz_t(), lead_c.get_mpz_t()))
      throw Error(ErrorKind::NotDivisible, to_string() + " by " + divisor.to_string());
    Integer qc;
    mpz_divexact(qc.get_mpz_t(), c.get_mpz_t(), lead_c.get_mpz_t());
    Poly step = Poly::monomial(vars, shift, qc);
    quotient.add_term(shift, qc);
    rem -= step * d;
  }
  return quotient;
}

Poly pow(const Poly& p, unsigned e) {
  Poly out(1);
  Poly base = p;
  while (e > 0) {
    if (e & 1U) out *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = abs(c);
    const bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool any_var = false;
    std::ostringstream mono;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      if (any_var) mono << "*";
      mono << vars_[i];
      if (e[i] > 1) mono << "^" << e[i];
      any_var = true;
    }
    if (!any_var) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << mono.str();
    }
  }
  return os.str();
}

}  // namespace csamot
