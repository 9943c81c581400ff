#include "csamot/gl_motive.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "csamot/arith.hpp"
#include "csamot/error.hpp"

namespace csamot {

MultiIndex::MultiIndex(std::vector<int> indices) : indices_(std::move(indices)) {
  for (std::size_t t = 0; t < indices_.size(); ++t) {
    if (indices_[t] < 1) throw Error(ErrorKind::InvalidArgument, "multi-index entries start at 1");
    if (t > 0 && indices_[t] <= indices_[t - 1])
      throw Error(ErrorKind::InvalidArgument, "multi-index must be strictly increasing");
  }
}

int MultiIndex::weight() const { return std::accumulate(indices_.begin(), indices_.end(), 0); }

std::string MultiIndex::to_string() const {
  std::string out = "{";
  for (std::size_t t = 0; t < indices_.size(); ++t) {
    if (t) out += ",";
    out += std::to_string(indices_[t]);
  }
  return out + "}";
}

MultiIndex parse_multi_index(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    throw Error(ErrorKind::ParseError, "multi-index must look like {1,3}: '" + std::string(text) + "'");
  std::vector<int> out;
  std::stringstream ss(s.substr(1, s.size() - 2));
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw Error(ErrorKind::ParseError, "bad entry '" + item + "'");
    out.push_back(std::stoi(item));
  }
  try {
    return MultiIndex(std::move(out));
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

std::vector<MultiIndex> enumerate_multi_indices(int n, std::optional<int> weight) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
  if (n > 30) throw Error(ErrorKind::TooLarge, "n too large to enumerate subsets");
  std::vector<MultiIndex> out;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    std::vector<int> idx;
    for (int b = 0; b < n; ++b)
      if (mask & (1U << b)) idx.push_back(b + 1);
    MultiIndex m(std::move(idx));
    if (!weight || m.weight() == *weight) out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(), [](const MultiIndex& a, const MultiIndex& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.indices() < b.indices();
  });
  return out;
}

TatePattern::TatePattern(std::initializer_list<std::pair<const Key, std::int64_t>> entries) {
  for (const auto& [key, m] : entries) add(key.first, key.second, m);
}

std::int64_t TatePattern::multiplicity(int q, int p) const {
  auto it = entries_.find({q, p});
  return it == entries_.end() ? 0 : it->second;
}

std::int64_t TatePattern::total() const {
  std::int64_t t = 0;
  for (const auto& [k, m] : entries_) t += m;
  return t;
}

void TatePattern::add(int q, int p, std::int64_t m) {
  if (q < 0) throw Error(ErrorKind::InvalidArgument, "Tate twist must be nonnegative");
  if (m < 0) throw Error(ErrorKind::InvalidArgument, "multiplicities are nonnegative");
  if (m == 0) return;
  entries_[{q, p}] += m;
}

TatePattern TatePattern::twisted(int q, int p) const {
  TatePattern out;
  for (const auto& [k, m] : entries_) out.add(k.first + q, k.second + p, m);
  return out;
}

TatePattern& TatePattern::operator+=(const TatePattern& o) {
  for (const auto& [k, m] : o.entries_) add(k.first, k.second, m);
  return *this;
}

TatePattern TatePattern::minus(const TatePattern& o) const {
  TatePattern out = *this;
  for (const auto& [k, m] : o.entries_) {
    auto it = out.entries_.find(k);
    if (it == out.entries_.end() || it->second < m)
      throw Error(ErrorKind::InvalidArgument, "pattern " + o.to_string() + " is not contained in " + to_string());
    it->second -= m;
    if (it->second == 0) out.entries_.erase(it);
  }
  return out;
}

std::string TatePattern::to_string() const {
  if (entries_.empty()) return "0";
  std::string out;
  for (const auto& [k, m] : entries_) {
    if (!out.empty()) out += " + ";
    if (m != 1) out += std::to_string(m) + "*";
    out += "Z";
    if (k.first != 0) out += "(" + std::to_string(k.first) + ")";
    if (k.second != 0) out += "[" + std::to_string(k.second) + "]";
  }
  return out;
}

TatePattern gl_pattern(int n) {
  TatePattern out;
  for (const auto& idx : enumerate_multi_indices(n)) out.add(idx.weight(), 2 * idx.weight() - idx.length());
  return out;
}

std::map<int, TatePattern> motive_m_slices(int n) {
  if (!is_prime(n)) throw Error(ErrorKind::NotPrime, "motive of M needs prime degree, got " + std::to_string(n));
  std::map<int, TatePattern> out;
  for (const auto& idx : enumerate_multi_indices(n)) {
    if (idx.empty()) continue;
    out[idx.weight()].add(idx.weight(), 2 * idx.weight() - idx.length());
  }
  out[n * n].add(n * n, 2 * n * n - 2);
  return out;
}

TatePattern projective_space_pattern(int m) {
  TatePattern out;
  for (int i = 0; i <= m; ++i) out.add(i, 2 * i);
  return out;
}

ChernExpr ChernExpr::unit() {
  ChernExpr e;
  e.add({}, Poly(1));
  return e;
}

ChernExpr ChernExpr::chern(int k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative Chern index");
  ChernExpr e;
  e.add(k == 0 ? Monomial{} : Monomial{k}, Poly(1));
  return e;
}

void ChernExpr::add(Monomial m, const Poly& coeff) {
  m.erase(std::remove(m.begin(), m.end(), 0), m.end());
  std::sort(m.begin(), m.end());
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly ChernExpr::coefficient(const Monomial& m) const {
  Monomial key = m;
  std::sort(key.begin(), key.end());
  auto it = terms_.find(key);
  return it == terms_.end() ? Poly() : it->second;
}

Integer ChernExpr::coefficient(const Monomial& m, int lambda_power) const {
  return coefficient(m).coefficient({{kLambda, lambda_power}});
}

ChernExpr ChernExpr::substitute_lambda(const Poly& value) const {
  ChernExpr out;
  for (const auto& [m, c] : terms_) out.add(m, c.substitute(kLambda, value));
  return out;
}

ChernExpr operator*(const ChernExpr& a, const ChernExpr& b) {
  ChernExpr out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      ChernExpr::Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add(std::move(m), ca * cb);
    }
  return out;
}

std::string ChernExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!out.empty()) out += " + ";
    std::string mono;
    for (int k : m) mono += (mono.empty() ? "" : "*") + std::string("c") + std::to_string(k);
    if (mono.empty()) {
      out += c.to_string();
    } else if (c == Poly(1)) {
      out += mono;
    } else {
      out += "(" + c.to_string() + ")*" + mono;
    }
  }
  return out;
}

ChernExpr chern_twist(int k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "chern_twist needs k >= 1");
  const Poly lambda = Poly::variable(kLambda);
  ChernExpr out;
  for (int i = 0; i <= k - 1; ++i) {
    Integer coeff = binomial(k - 1, i);
    if (i % 2) coeff = -coeff;
    out.add({k - i}, Poly(coeff) * pow(lambda, static_cast<unsigned>(i)));
  }
  return out;
}

ChernExpr chern_twist_product(const MultiIndex& j, bool sign_flip) {
  ChernExpr out = ChernExpr::unit();
  for (int jt : j.indices()) out = out * chern_twist(jt);
  if (sign_flip) out = out.substitute_lambda(-Poly::variable(kLambda));
  return out;
}

std::int64_t D2Matrix::entry(const MultiIndex& i, const MultiIndex& j) const {
  auto r = std::find(rows.begin(), rows.end(), i);
  auto c = std::find(cols.begin(), cols.end(), j);
  if (r == rows.end() || c == cols.end()) throw Error(ErrorKind::IndexOutOfRange, "multi-index not in this matrix");
  return at(static_cast<std::size_t>(r - rows.begin()), static_cast<std::size_t>(c - cols.begin()));
}

std::vector<std::int64_t> d2_coefficients_closed_form(int n, int q) {
  const auto rows = enumerate_multi_indices(n, q);
  const auto cols = enumerate_multi_indices(n, q + 1);
  std::vector<std::int64_t> out(rows.size() * cols.size(), 0);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& ii = rows[r].indices();
    for (std::size_t t = 0; t < ii.size(); ++t) {
      std::vector<int> raised = ii;
      ++raised[t];
      // Raising into the next index leaves no strictly increasing J.
      if (t + 1 < ii.size() && raised[t] == ii[t + 1]) continue;
      if (raised[t] > n) continue;
      const auto c = std::find(cols.begin(), cols.end(), MultiIndex(raised));
      out[r * cols.size() + static_cast<std::size_t>(c - cols.begin())] = ii[t];
    }
  }
  return out;
}

std::vector<std::int64_t> d2_coefficients_from_chern(int n, int q) {
  const auto rows = enumerate_multi_indices(n, q);
  const auto cols = enumerate_multi_indices(n, q + 1);
  std::vector<std::int64_t> out(rows.size() * cols.size(), 0);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const ChernExpr expansion = chern_twist_product(cols[c], /*sign_flip=*/true);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].length() != cols[c].length()) continue;
      out[r * cols.size() + c] = expansion.coefficient(rows[r].indices(), 1).get_si();
    }
  }
  return out;
}

D2Matrix d2_matrix(int n, int q) {
  if (!is_prime(n)) throw Error(ErrorKind::NotPrime, "d2 needs prime n, got " + std::to_string(n));
  if (q < 1 || q > n * (n + 1) / 2)
    throw Error(ErrorKind::RangeError, "q must lie in 1..n(n+1)/2, got " + std::to_string(q));
  const auto closed = d2_coefficients_closed_form(n, q);
  if (closed != d2_coefficients_from_chern(n, q))
    throw Error(ErrorKind::RangeError, "closed-form d2 disagrees with the Chern-class expansion");
  D2Matrix m;
  m.n = n;
  m.q = q;
  m.rows = enumerate_multi_indices(n, q);
  m.cols = enumerate_multi_indices(n, q + 1);
  m.entries.reserve(closed.size());
  for (auto v : closed) m.entries.push_back(((v % n) + n) % n);
  return m;
}

std::vector<PatternCheck> pattern_checks(const std::vector<int>& slice_degrees) {
  std::vector<PatternCheck> out;

  // Split case: C = P^1 and Z_{a,b} = cone(Z(1)[2] -> M(P^1)) = Z.
  const TatePattern curve = projective_space_pattern(1);
  const TatePattern zab = curve.minus(TatePattern{{{1, 2}, 1}});

  const TatePattern gl1 = TatePattern{{{0, 0}, 1}} + curve.twisted(1, 1) + zab.twisted(3, 4);
  out.push_back({"GL_1(A) split = GL_2", gl1 == gl_pattern(2), gl_pattern(2).to_string(), gl1.to_string()});

  const TatePattern sl1 = TatePattern{{{0, 0}, 1}} + zab.twisted(2, 3);
  // Localization: reduced M(SL_1) = cone(Z(3)[6] -> M(C)(2)[4])[-1].
  const TatePattern from_triangle =
      TatePattern{{{0, 0}, 1}} + curve.twisted(2, 4).minus(TatePattern{{{3, 6}, 1}}).twisted(0, -1);
  const TatePattern sl2{{{0, 0}, 1}, {{2, 3}, 1}};
  out.push_back({"SL_1(A) split = SL_2", sl1 == sl2 && from_triangle == sl2, sl2.to_string(), sl1.to_string()});

  for (int n : slice_degrees) {
    TatePattern from_slices;
    for (const auto& [q, pattern] : motive_m_slices(n)) from_slices += pattern;
    const TatePattern expected = gl_pattern(n).minus(TatePattern{{{0, 0}, 1}}) + TatePattern{{{n * n, 2 * n * n - 2}, 1}};
    out.push_back({"slices of M sum to the split decomposition, n = " + std::to_string(n), from_slices == expected,
                   expected.to_string(), from_slices.to_string()});
  }
  return out;
}

}  // namespace csamot
