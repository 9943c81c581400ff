#include "csamot/schubert.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "csamot/error.hpp"

namespace csamot {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw Error(ErrorKind::InvalidArgument, "negative part in partition");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw Error(ErrorKind::InvalidArgument, "parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::fits(const Grassmannian& gr) const {
  return length() <= gr.k && (parts_.empty() || parts_.front() <= gr.columns());
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

Partition parse_partition(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw Error(ErrorKind::ParseError, "partition must look like (3,2,1): '" + std::string(text) + "'");
  std::vector<int> parts;
  const std::string body = s.substr(1, s.size() - 2);
  if (!body.empty()) {
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw Error(ErrorKind::ParseError, "bad part '" + item + "' in '" + std::string(text) + "'");
      parts.push_back(std::stoi(item));
    }
    if (body.back() == ',') throw Error(ErrorKind::ParseError, "trailing comma in '" + std::string(text) + "'");
  }
  try {
    return Partition(std::move(parts));
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

namespace {

void box_partitions_rec(const Grassmannian& gr, std::vector<int>& prefix, int max_part, std::vector<Partition>& out) {
  out.emplace_back(prefix);
  if (static_cast<int>(prefix.size()) == gr.k) return;
  for (int p = 1; p <= max_part; ++p) {
    prefix.push_back(p);
    box_partitions_rec(gr, prefix, p, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> box_partitions(const Grassmannian& gr) {
  std::vector<Partition> out;
  std::vector<int> prefix;
  box_partitions_rec(gr, prefix, gr.columns(), out);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a > b;
  });
  return out;
}

std::vector<Partition> box_partitions(const Grassmannian& gr, int size) {
  std::vector<Partition> out;
  for (auto& p : box_partitions(gr))
    if (p.size() == size) out.push_back(p);
  return out;
}

Partition full_box(const Grassmannian& gr) {
  return Partition(std::vector<int>(static_cast<std::size_t>(gr.k), gr.columns()));
}

std::vector<Partition> add_one_box(const Partition& lambda, const Grassmannian& gr) {
  std::vector<Partition> out;
  for (int row = 0; row < gr.k; ++row) {
    const int cur = lambda.part(row);
    if (cur + 1 > gr.columns()) continue;
    if (row > 0 && lambda.part(row - 1) < cur + 1) continue;
    std::vector<int> parts(static_cast<std::size_t>(std::max(lambda.length(), row + 1)), 0);
    for (int i = 0; i < lambda.length(); ++i) parts[static_cast<std::size_t>(i)] = lambda.part(i);
    parts[static_cast<std::size_t>(row)] = cur + 1;
    out.emplace_back(std::move(parts));
  }
  return out;
}

std::string render_combination(const LabelMap& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [lambda, c] : terms) {
    const bool neg = c < 0;
    const Integer mag = abs(c);
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (mag != 1) out += mag.get_str();
    out += lambda.to_string();
  }
  return out;
}

LabelMap parse_combination(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  LabelMap out;
  if (s == "0") return out;
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty class expression");
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw Error(ErrorKind::ParseError, "expected + or - in '" + std::string(text) + "'");
    }
    std::size_t digits_end = pos;
    while (digits_end < s.size() && std::isdigit(static_cast<unsigned char>(s[digits_end]))) ++digits_end;
    Integer coeff = 1;
    if (digits_end > pos) coeff = Integer(s.substr(pos, digits_end - pos));
    if (s.size() > digits_end && s[digits_end] == '*') ++digits_end;
    const std::size_t close = s.find(')', digits_end);
    if (digits_end >= s.size() || s[digits_end] != '(' || close == std::string::npos)
      throw Error(ErrorKind::ParseError, "expected a partition in '" + std::string(text) + "'");
    const Partition lambda = parse_partition(s.substr(digits_end, close - digits_end + 1));
    Integer& slot = out[lambda];
    slot += sign * coeff;
    if (slot == 0) out.erase(lambda);
    pos = close + 1;
  }
  return out;
}

GrChowClass::GrChowClass(Grassmannian gr, int codim) : gr_(gr), codim_(codim) {
  if (gr.k < 0 || gr.k > gr.n) throw Error(ErrorKind::InvalidArgument, "Gr(k,n) needs 0 <= k <= n");
}

GrChowClass GrChowClass::schubert(Grassmannian gr, const Partition& lambda, const Integer& coeff) {
  GrChowClass c(gr, lambda.size());
  c.add(lambda, coeff);
  return c;
}

GrChowClass GrChowClass::from_terms(Grassmannian gr, const LabelMap& terms) {
  if (terms.empty()) throw Error(ErrorKind::InvalidArgument, "from_terms needs at least one term to fix the codim");
  GrChowClass c(gr, terms.begin()->first.size());
  for (const auto& [lambda, coeff] : terms) c.add(lambda, coeff);
  return c;
}

Integer GrChowClass::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Integer(0) : it->second;
}

void GrChowClass::add(const Partition& lambda, const Integer& coeff) {
  if (!lambda.fits(gr_)) throw Error(ErrorKind::OutOfBox, lambda.to_string() + " does not fit the box");
  if (lambda.size() != codim_)
    throw Error(ErrorKind::CodimMismatch, lambda.to_string() + " is not of codim " + std::to_string(codim_));
  if (coeff == 0) return;
  Integer& slot = terms_[lambda];
  slot += coeff;
  if (slot == 0) terms_.erase(lambda);
}

GrChowClass& GrChowClass::operator+=(const GrChowClass& o) {
  if (!(gr_ == o.gr_)) throw Error(ErrorKind::InvalidArgument, "classes on different Grassmannians");
  if (is_zero()) codim_ = o.codim_;
  for (const auto& [lambda, c] : o.terms_) add(lambda, c);
  return *this;
}

GrChowClass operator*(const Integer& s, const GrChowClass& c) {
  GrChowClass out(c.gr_, c.codim_);
  for (const auto& [lambda, coeff] : c.terms_) out.add(lambda, s * coeff);
  return out;
}

GrChowClass pieri(const GrChowClass& c) {
  GrChowClass out(c.grassmannian(), c.codim() + 1);
  for (const auto& [lambda, coeff] : c.terms())
    for (const auto& mu : add_one_box(lambda, c.grassmannian())) out.add(mu, coeff);
  return out;
}

namespace {

std::vector<std::string> x_vars(int k) {
  std::vector<std::string> vars;
  for (int i = 1; i <= k; ++i) vars.push_back("x" + std::to_string(i));
  return vars;
}

// det(x_i^{exps_j}) by the Leibniz expansion.
Poly alternant(const std::vector<int>& exps) {
  const int k = static_cast<int>(exps.size());
  const auto vars = x_vars(k);
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  Poly out = Poly::monomial(vars, std::vector<int>(static_cast<std::size_t>(k), 0), 0);
  do {
    int inversions = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    std::vector<int> e(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) e[static_cast<std::size_t>(i)] = exps[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
    out += Poly::monomial(vars, e, inversions % 2 ? -1 : 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<int> staircase(int k) {
  std::vector<int> delta(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) delta[static_cast<std::size_t>(i)] = k - 1 - i;
  return delta;
}

}  // namespace

Poly schur_polynomial(const Partition& lambda, int k) {
  if (lambda.length() > k) return Poly();
  std::vector<int> shifted = staircase(k);
  for (int i = 0; i < k; ++i) shifted[static_cast<std::size_t>(i)] += lambda.part(i);
  return alternant(shifted).divide_exact(alternant(staircase(k)));
}

LabelMap schur_expand(const Poly& symmetric, const Grassmannian& gr) {
  // The coefficient of s_nu is the coefficient of x^{nu + delta} in f * a_delta.
  const int k = gr.k;
  const Poly antisym = (symmetric * alternant(staircase(k))).over(x_vars(k));
  const auto delta = staircase(k);
  LabelMap out;
  for (const auto& [e, c] : antisym.terms()) {
    bool strictly_decreasing = true;
    for (std::size_t i = 1; i < e.size(); ++i)
      if (e[i] >= e[i - 1]) strictly_decreasing = false;
    if (!strictly_decreasing) continue;
    std::vector<int> parts(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) parts[i] = e[i] - delta[i];
    Partition nu(parts);
    if (nu.fits(gr)) out[nu] += c;
  }
  return out;
}

GrChowClass schur_product(const GrChowClass& x, const GrChowClass& y) {
  if (!(x.grassmannian() == y.grassmannian())) throw Error(ErrorKind::InvalidArgument, "classes on different Grassmannians");
  const Grassmannian gr = x.grassmannian();
  GrChowClass out(gr, x.codim() + y.codim());
  if (x.is_zero() || y.is_zero()) return out;
  const auto vars = x_vars(gr.k);
  Poly fx = Poly::monomial(vars, std::vector<int>(static_cast<std::size_t>(gr.k), 0), 0);
  Poly fy = fx;
  for (const auto& [lambda, c] : x.terms()) fx += Poly(c) * schur_polynomial(lambda, gr.k);
  for (const auto& [mu, c] : y.terms()) fy += Poly(c) * schur_polynomial(mu, gr.k);
  for (const auto& [nu, c] : schur_expand(fx * fy, gr)) out.add(nu, c);
  return out;
}

Integer duality_pairing(const GrChowClass& x, const GrChowClass& y) {
  const Grassmannian gr = x.grassmannian();
  if (x.codim() + y.codim() != gr.dimension())
    throw Error(ErrorKind::CodimMismatch, "pairing needs complementary codimensions");
  return schur_product(x, y).coefficient(full_box(gr));
}

Partition complement(const Partition& lambda, const Grassmannian& gr) {
  if (!lambda.fits(gr)) throw Error(ErrorKind::OutOfBox, lambda.to_string());
  std::vector<int> parts(static_cast<std::size_t>(gr.k));
  for (int i = 0; i < gr.k; ++i) parts[static_cast<std::size_t>(i)] = gr.columns() - lambda.part(gr.k - 1 - i);
  return Partition(parts);
}

Integer point_count(int k, int n, const Integer& q) {
  if (q < 2 || !q.fits_slong_p() || !is_prime_power(q.get_si()))
    throw Error(ErrorKind::InvalidArgument, "q must be a prime power");
  return gaussian_binomial(n, k, q);
}

}  // namespace csamot
