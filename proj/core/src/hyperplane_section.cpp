#include "csamot/hyperplane_section.hpp"

#include <algorithm>
#include <map>

#include "csamot/error.hpp"

namespace csamot {

int x_label_size(int codim) {
  if (codim < 0 || codim > kXDimension) throw Error(ErrorKind::CodimOutOfRange, "codim " + std::to_string(codim));
  return codim <= 4 ? codim : codim + 1;
}

int x_codim_of_label(const Partition& lambda) {
  const int s = lambda.size();
  if (s == 5) throw Error(ErrorKind::CodimOutOfRange, "|lambda| = 5 does not label a class on X");
  return s <= 4 ? s : s - 1;
}

XClass::XClass(int codim) : codim_(codim) { x_label_size(codim); }

XClass XClass::from_terms(int codim, const LabelMap& terms) {
  XClass c(codim);
  for (const auto& [lambda, coeff] : terms) c.add(lambda, coeff);
  return c;
}

XClass XClass::label(const Partition& lambda, const Integer& coeff) {
  XClass c(x_codim_of_label(lambda));
  c.add(lambda, coeff);
  return c;
}

Integer XClass::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Integer(0) : it->second;
}

void XClass::add(const Partition& lambda, const Integer& coeff) {
  if (!lambda.fits(kGr36)) throw Error(ErrorKind::OutOfBox, lambda.to_string());
  if (lambda.size() != x_label_size(codim_))
    throw Error(ErrorKind::CodimMismatch, lambda.to_string() + " is not a label in codim " + std::to_string(codim_));
  if (coeff == 0) return;
  Integer& slot = terms_[lambda];
  slot += coeff;
  if (slot == 0) terms_.erase(lambda);
}

XClass& XClass::operator+=(const XClass& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) codim_ = o.codim_;
  for (const auto& [lambda, c] : o.terms_) add(lambda, c);
  return *this;
}

XClass& XClass::operator-=(const XClass& o) { return *this += Integer(-1) * o; }

XClass operator*(const Integer& s, const XClass& c) {
  XClass out(c.codim_);
  for (const auto& [lambda, coeff] : c.terms_) out.add(lambda, s * coeff);
  return out;
}

XClass XClass::reduced_mod(const Integer& m) const {
  XClass out(codim_);
  for (const auto& [lambda, coeff] : terms_) out.add(lambda, mod_floor(coeff, m));
  return out;
}

GrChowClass XClass::as_gr_labels() const {
  GrChowClass g(kGr36, x_label_size(codim_));
  for (const auto& [lambda, coeff] : terms_) g.add(lambda, coeff);
  return g;
}

namespace {

XClass from_gr_labels(const GrChowClass& g, int codim) {
  XClass out(codim);
  for (const auto& [lambda, coeff] : g.terms()) out.add(lambda, coeff);
  return out;
}

GrChowClass sigma1() { return GrChowClass::schubert(kGr36, Partition({1})); }

}  // namespace

XClass restrict_from_gr(const GrChowClass& c) {
  if (!(c.grassmannian() == kGr36)) throw Error(ErrorKind::InvalidArgument, "expected a class on Gr(3,6)");
  if (c.codim() > 4) throw Error(ErrorKind::CodimOutOfRange, "pull-back is modeled only up to codim 4");
  return from_gr_labels(c, c.codim());
}

XClass hyperplane_mul(const XClass& x) {
  if (x.codim() >= kXDimension) throw Error(ErrorKind::TopCodim, "hyperplane times a top-codim class");
  GrChowClass g = pieri(x.as_gr_labels());
  // i_* i^* b = b . [X] = b . sigma_1 for the crossing of the middle codim.
  if (x.codim() == 4) g = pieri(g);
  return from_gr_labels(g, x.codim() + 1);
}

Integer pairing_x(const XClass& x, const XClass& y) {
  if (x.codim() + y.codim() != kXDimension)
    throw Error(ErrorKind::CodimMismatch, "pairing on X needs codims summing to 8");
  if (x.codim() == 4) {
    // <i^* a, i^* b>_X = int_Gr a . b . sigma_1
    return schur_product(schur_product(x.as_gr_labels(), y.as_gr_labels()), sigma1()).coefficient(full_box(kGr36));
  }
  // One side is a pull-back, the other a push-forward preimage: projection formula.
  return duality_pairing(x.as_gr_labels(), y.as_gr_labels());
}

IntMatrix gram_matrix(const std::vector<XClass>& classes) {
  IntMatrix g(classes.size(), classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (2 * classes[i].codim() != kXDimension)
      throw Error(ErrorKind::CodimMismatch, "Gram matrix needs middle-codim classes");
    for (std::size_t j = 0; j < classes.size(); ++j) g(i, j) = pairing_x(classes[i], classes[j]);
  }
  return g;
}

PXClass::PXClass(int total, std::array<XClass, 3> parts) : components(std::move(parts)), total_codim(total) {
  for (int d = 0; d < 3; ++d) {
    const XClass& c = components[static_cast<std::size_t>(d)];
    if (!c.is_zero() && c.codim() + d != total_codim)
      throw Error(ErrorKind::CodimMismatch, "component H^" + std::to_string(d) + " has the wrong codim");
  }
}

PXClass PXClass::reduced_mod(const Integer& m) const {
  return PXClass(total_codim, {components[0].reduced_mod(m), components[1].reduced_mod(m), components[2].reduced_mod(m)});
}

bool PXClass::is_zero() const {
  return std::all_of(components.begin(), components.end(), [](const XClass& c) { return c.is_zero(); });
}

std::string PXClass::to_string() const {
  std::string out;
  const char* prefixes[3] = {"", "H", "H^2"};
  for (int d = 0; d < 3; ++d) {
    const XClass& c = components[static_cast<std::size_t>(d)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += prefixes[d];
    out += d == 0 ? "[" + c.to_string() + "]" : "[" + c.to_string() + "]";
  }
  return out.empty() ? "0" : out;
}

PXClass operator-(const PXClass& a, const PXClass& b) {
  if (a.total_codim != b.total_codim) throw Error(ErrorKind::CodimMismatch, "P^2 x X classes of different codim");
  std::array<XClass, 3> parts{XClass(0), XClass(0), XClass(0)};
  for (std::size_t d = 0; d < 3; ++d) {
    const int codim = a.total_codim - static_cast<int>(d);
    XClass c(std::clamp(codim, 0, kXDimension));
    c += a.components[d];
    c -= b.components[d];
    parts[d] = c;
  }
  return PXClass(a.total_codim, parts);
}

PXClass hyperplane_mul(const PXClass& c) {
  std::array<XClass, 3> parts{XClass(0), XClass(0), XClass(0)};
  for (std::size_t d = 0; d < 3; ++d) {
    const XClass& comp = c.components[d];
    parts[d] = comp.is_zero() ? XClass(std::clamp(c.total_codim + 1 - static_cast<int>(d), 0, kXDimension))
                              : hyperplane_mul(comp);
  }
  return PXClass(c.total_codim + 1, parts);
}

namespace {

XClass combo(int codim, const char* text) { return XClass::from_terms(codim, parse_combination(text)); }

}  // namespace

PXClass alpha(int i) {
  switch (i) {
    case 1:
      return PXClass(3, {combo(3, "(3)"), combo(2, "(2)"), combo(1, "(1)")});
    case 2:
      return PXClass(4, {combo(4, "(3,1)"), combo(3, "(3) + (2,1)"), combo(2, "(2) + (1,1)")});
    case 3:
      return PXClass(5, {combo(5, "(3,3) - (3,2,1)"), combo(4, "-(3,1) + (2,2) + (2,1,1)"),
                         combo(3, "(3) - (2,1) + (1,1,1)")});
    case 4:
      return PXClass(6, {combo(6, "-(3,2,2)"), combo(5, "-(3,2,1) - (2,2,2)"), combo(4, "-(2,2)")});
    case 5:
      return PXClass(7, {combo(7, "-(3,3,2)"), combo(6, "-(3,3,1) + (3,2,2)"),
                         combo(5, "-(3,3) + (3,2,1) - (2,2,2)")});
    default:
      throw Error(ErrorKind::IndexOutOfRange, "alpha index must be in 1..5, got " + std::to_string(i));
  }
}

RecursionCheck check_recursion(const PXClass& current, const PXClass& next, const Integer& modulus) {
  const PXClass residual = (next - hyperplane_mul(current)).reduced_mod(modulus);
  return {residual.is_zero(), residual};
}

RecursionCheck verify_alpha_recursion(int i) {
  if (i < 1 || i > 4) throw Error(ErrorKind::IndexOutOfRange, "recursion index must be in 1..4");
  return check_recursion(alpha(i), alpha(i + 1), 3);
}

std::vector<XClass> alpha_components_in_codim(int codim) {
  x_label_size(codim);
  std::vector<XClass> out;
  for (int i = 1; i <= 5; ++i) {
    const PXClass a = alpha(i);
    for (int d = 0; d < 3; ++d)
      if (a.total_codim - d == codim && !a.at(d).is_zero()) out.push_back(a.at(d));
  }
  return out;
}

std::vector<XClass> alpha_collection() {
  std::vector<XClass> out{XClass::fundamental()};
  for (int codim = 1; codim < kXDimension; ++codim)
    for (auto& c : alpha_components_in_codim(codim)) out.push_back(std::move(c));
  out.push_back(XClass::point());
  return out;
}

IntMatrix tate_iso_matrix(const std::vector<XClass>& classes) {
  std::map<int, int> counts;
  for (const auto& c : classes) ++counts[c.codim()];
  for (const auto& [codim, count] : counts) {
    auto dual = counts.find(kXDimension - codim);
    if (dual == counts.end() || dual->second != count)
      throw Error(ErrorKind::NotSelfDual, "codim " + std::to_string(codim) + " has no matching dual block");
  }
  IntMatrix m(classes.size(), classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = 0; j < classes.size(); ++j)
      if (classes[i].codim() + classes[j].codim() == kXDimension) m(i, j) = pairing_x(classes[i], classes[j]);
  return m;
}

bool tate_iso_check(const std::vector<XClass>& classes, const std::set<std::int64_t>& inverted_primes) {
  return invertible_over_localization(tate_iso_matrix(classes), inverted_primes);
}

IntMatrix label_coefficients(const std::vector<XClass>& classes, int codim) {
  const auto labels = box_partitions(kGr36, x_label_size(codim));
  IntMatrix m(classes.size(), labels.size());
  for (std::size_t r = 0; r < classes.size(); ++r) {
    if (!classes[r].is_zero() && classes[r].codim() != codim)
      throw Error(ErrorKind::CodimMismatch, "class " + classes[r].to_string() + " is not in codim " + std::to_string(codim));
    for (std::size_t c = 0; c < labels.size(); ++c) m(r, c) = classes[r].coefficient(labels[c]);
  }
  return m;
}

bool basis_certificate(const std::vector<XClass>& classes, int codim) {
  const auto labels = box_partitions(kGr36, x_label_size(codim));
  if (classes.size() != labels.size())
    throw Error(ErrorKind::RankMismatch, std::to_string(classes.size()) + " classes for a rank " +
                                             std::to_string(labels.size()) + " group");
  const SmithForm snf = smith_normal_form(label_coefficients(classes, codim));
  return std::all_of(snf.diagonal.begin(), snf.diagonal.end(), [](const Integer& d) { return d == 1; });
}

ChernTwistIdentity verify_c3_twist_identity() {
  const Poly x1 = Poly::variable("x1"), x2 = Poly::variable("x2"), x3 = Poly::variable("x3");
  const Poly h = Poly::variable("h");
  const Poly e1 = x1 + x2 + x3;
  const Poly e2 = x1 * x2 + x1 * x3 + x2 * x3;
  const Poly e3 = x1 * x2 * x3;
  // c_3(L (x) E) has Chern roots x_i + h.
  const Poly lhs = (x1 + h) * (x2 + h) * (x3 + h);
  const Poly rhs = e3 + h * e2 + h * h * e1;
  Poly residual = lhs - rhs;
  const bool holds = residual == pow(h, 3);
  return {std::move(residual), holds};
}

}  // namespace csamot
