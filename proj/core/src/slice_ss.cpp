#include "csamot/slice_ss.hpp"

#include <algorithm>
#include <tuple>

#include "csamot/error.hpp"

namespace csamot {

GroupExpr GroupExpr::free_z() {
  GroupExpr g;
  g.kind_ = Kind::FreeZ;
  return g;
}

GroupExpr GroupExpr::sub_n(const GroupExpr& inner) {
  if (inner.kind_ != Kind::FreeZ) throw Error(ErrorKind::InvalidArgument, "nZ is only formed from Z");
  GroupExpr g;
  g.kind_ = Kind::SubN;
  g.children_ = {inner};
  return g;
}

GroupExpr GroupExpr::cyclic(const Integer& m) {
  if (m <= 0) throw Error(ErrorKind::InvalidArgument, "cyclic order must be positive");
  if (m == 1) return zero();
  GroupExpr g;
  g.kind_ = Kind::Cyclic;
  g.label_ = m.get_str();
  return g;
}

GroupExpr GroupExpr::cyclic_n() {
  GroupExpr g;
  g.kind_ = Kind::Cyclic;
  g.label_ = "n";
  return g;
}

GroupExpr GroupExpr::atom(std::string name) {
  GroupExpr g;
  g.kind_ = Kind::Atom;
  g.label_ = std::move(name);
  return g;
}

GroupExpr GroupExpr::power_sub_n(const GroupExpr& inner) {
  if (inner.kind_ != Kind::Atom) throw Error(ErrorKind::InvalidArgument, "(G)^n is only formed from an atom");
  GroupExpr g;
  g.kind_ = Kind::PowerSubN;
  g.children_ = {inner};
  return g;
}

GroupExpr GroupExpr::sum(std::vector<GroupExpr> parts) {
  std::vector<GroupExpr> flat;
  for (auto& p : parts) {
    if (p.kind_ == Kind::Zero) continue;
    if (p.kind_ == Kind::Sum) {
      flat.insert(flat.end(), p.children_.begin(), p.children_.end());
    } else {
      flat.push_back(std::move(p));
    }
  }
  if (flat.empty()) return zero();
  if (flat.size() == 1) return flat.front();
  GroupExpr g;
  g.kind_ = Kind::Sum;
  g.children_ = std::move(flat);
  return g;
}

std::string GroupExpr::to_string() const {
  switch (kind_) {
    case Kind::Zero: return "0";
    case Kind::FreeZ: return "Z";
    case Kind::SubN: return "nZ";
    case Kind::Cyclic: return "Z/" + label_;
    case Kind::Atom: return label_;
    case Kind::PowerSubN: return "(" + children_.front().to_string() + ")^n";
    case Kind::Sum: {
      std::string out;
      for (const auto& c : children_) out += (out.empty() ? "" : " ⊕ ") + c.to_string();
      return out;
    }
  }
  return "?";
}

std::string field_cohomology_name(int p, int weight) {
  return "H^{" + std::to_string(p) + "," + std::to_string(weight) + "}(F)";
}

GroupExpr xcech_group(int p, int weight) {
  switch (weight) {
    case 0:
      return p == 0 ? GroupExpr::free_z() : GroupExpr::zero();
    case 1:
      if (p == 1) return GroupExpr::atom(kUnitGroupName);
      if (p == 3) return GroupExpr::cyclic_n();
      return GroupExpr::zero();
    case 2:
      if (p >= 0 && p <= 2) return GroupExpr::atom(field_cohomology_name(p, 2));
      if (p == 4) return GroupExpr::atom(kReducedK1Name);
      return GroupExpr::zero();
    default:
      throw Error(ErrorKind::WeightOutOfRange, "no table for Cech cohomology in weight " + std::to_string(weight));
  }
}

std::vector<int> xcech_support(int weight) {
  switch (weight) {
    case 0: return {0};
    case 1: return {1, 3};
    case 2: return {0, 1, 2, 4};
    default:
      throw Error(ErrorKind::WeightOutOfRange, "no table for Cech cohomology in weight " + std::to_string(weight));
  }
}

GroupExpr E2Cell::total() const {
  std::vector<GroupExpr> parts;
  for (const auto& s : summands) parts.push_back(s.group);
  return GroupExpr::sum(std::move(parts));
}

bool E2Cell::is_zero() const {
  return std::all_of(summands.begin(), summands.end(), [](const E2Summand& s) { return s.group.is_zero(); });
}

GroupExpr E2Page::at(int p, int q) const {
  auto it = cells.find({p, q});
  return it == cells.end() ? GroupExpr::zero() : it->second.total();
}

namespace {

// Target of the canonical reduction G -> G/n[A] for the groups that occur.
std::optional<GroupExpr> canonical_reduction(const GroupExpr& g) {
  if (g.kind() == GroupExpr::Kind::FreeZ) return GroupExpr::cyclic_n();
  if (g == GroupExpr::atom(kUnitGroupName)) return GroupExpr::atom(kReducedK1Name);
  return std::nullopt;
}

GroupExpr kernel_of_reduction(const GroupExpr& g) {
  if (g.kind() == GroupExpr::Kind::FreeZ) return GroupExpr::sub_n(g);
  return GroupExpr::power_sub_n(g);
}

}  // namespace

E2Page build_e2(int n, int weight, std::optional<Integer> unit) {
  if (weight < 1 || weight > 3)
    throw Error(ErrorKind::WeightOutOfRange, "only weights 1..3 have complete tables, got " + std::to_string(weight));
  if (!is_prime(n)) throw Error(ErrorKind::NotPrime, "n must be prime, got " + std::to_string(n));
  if (unit) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), unit->get_mpz_t(), Integer(n).get_mpz_t());
    if (g != 1) throw Error(ErrorKind::InvalidArgument, "c must be coprime to n");
  }

  E2Page page;
  page.n = n;
  page.weight = weight;
  page.unit = unit;
  page.assumptions.push_back("extensions in the abutment filtration are split");

  // E_2^{p,q} = sum_{|I| = q} H^{p - q + l(I), weight - q}(Cech).
  for (int q = 1; q <= weight; ++q) {
    const int w = weight - q;
    for (const auto& idx : enumerate_multi_indices(n, q)) {
      const int shift = 2 * q - idx.length();
      for (int t : xcech_support(w)) {
        const int p = t - q + shift;
        page.cells[{p, q}].summands.push_back({xcech_group(t, w), idx});
      }
    }
    if (q == n * n)
      throw Error(ErrorKind::WeightOutOfRange, "the top slice Z(n^2) lies outside the modeled weights");
  }

  // d_2: E^{p,q+1} -> E^{p+2,q}, induced by the (I, J) entries between slices q and q+1.
  for (int q = 1; q < weight; ++q) {
    const D2Matrix d2 = d2_matrix(n, q);
    for (const auto& [src_pos, src_cell] : page.cells) {
      if (src_pos.second != q + 1) continue;
      auto tgt_it = page.cells.find({src_pos.first + 2, q});
      if (tgt_it == page.cells.end()) continue;
      for (std::size_t s = 0; s < src_cell.summands.size(); ++s) {
        for (std::size_t t = 0; t < tgt_it->second.summands.size(); ++t) {
          const auto& src = src_cell.summands[s];
          const auto& tgt = tgt_it->second.summands[t];
          if (src.group.is_zero() || tgt.group.is_zero()) continue;
          const std::int64_t entry = d2.entry(tgt.index, src.index);
          Differential d{src_pos, s, tgt_it->first, t, DifferentialKind::Zero, "0"};
          if (unit) {
            const Integer value = mod_floor(Integer(entry) * *unit, n);
            d.coefficient = value.get_str();
            if (value != 0) d.kind = DifferentialKind::UnitCanonical;
          } else {
            d.coefficient = std::to_string(entry) + "*c";
            if (entry % n != 0) d.kind = DifferentialKind::UnitCanonical;
          }
          if (entry != 0 || unit) page.differentials.push_back(std::move(d));
        }
      }
    }
  }
  return page;
}

E2Page apply_d2(const E2Page& page) {
  E2Page out = page;
  std::map<std::tuple<int, int, std::size_t>, int> uses;
  for (const auto& d : page.differentials) {
    if (d.kind != DifferentialKind::UnitCanonical) continue;
    ++uses[{d.source.first, d.source.second, d.source_summand}];
    ++uses[{d.target.first, d.target.second, d.target_summand}];
  }
  for (const auto& d : page.differentials) {
    if (d.kind != DifferentialKind::UnitCanonical) continue;
    if (uses[{d.source.first, d.source.second, d.source_summand}] > 1 ||
        uses[{d.target.first, d.target.second, d.target_summand}] > 1)
      throw Error(ErrorKind::UnresolvableDifferential, "a summand meets more than one nonzero differential");
    auto& src = out.cells.at(d.source).summands[d.source_summand];
    auto& tgt = out.cells.at(d.target).summands[d.target_summand];
    const auto reduction = canonical_reduction(src.group);
    if (!reduction || !(*reduction == tgt.group))
      throw Error(ErrorKind::UnresolvableDifferential,
                  "no rewrite rule for " + src.group.to_string() + " -> " + tgt.group.to_string());
    // Unit times the canonical surjection G -> G/n: kernel nG, cokernel 0.
    src.group = kernel_of_reduction(src.group);
    tgt.group = GroupExpr::zero();
  }
  out.differentials.clear();
  out.d2_applied = true;
  return out;
}

std::map<int, GroupExpr> assemble(const E2Page& page) {
  if (!page.d2_applied) throw Error(ErrorKind::InvalidArgument, "assemble() needs a page after apply_d2()");
  std::vector<std::pair<int, int>> nonzero;
  for (const auto& [pos, cell] : page.cells)
    if (!cell.is_zero()) nonzero.push_back(pos);

  // d_r: E^{p,q} -> E^{p+r, q-r+1} for r >= 3.
  for (const auto& [p, q] : nonzero)
    for (const auto& [p2, q2] : nonzero) {
      const int r = p2 - p;
      if (r >= 3 && q2 == q - r + 1)
        throw Error(ErrorKind::HigherDifferentialPossible,
                    "possible d_" + std::to_string(r) + " from (" + std::to_string(p) + "," + std::to_string(q) +
                        ") to (" + std::to_string(p2) + "," + std::to_string(q2) + ")");
    }

  std::map<int, std::vector<std::pair<int, GroupExpr>>> diagonals;
  for (const auto& [p, q] : nonzero) diagonals[p + q].emplace_back(q, page.at(p, q));
  std::map<int, GroupExpr> out;
  for (auto& [degree, parts] : diagonals) {
    // Higher slices first: Z + (F*)^n reads top row first.
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<GroupExpr> groups;
    for (auto& [q, g] : parts) groups.push_back(std::move(g));
    GroupExpr total = GroupExpr::sum(std::move(groups));
    if (!total.is_zero()) out.emplace(degree, std::move(total));
  }
  return out;
}

std::map<int, GroupExpr> small_weight_table(int n, int weight, std::optional<Integer> unit) {
  return assemble(apply_d2(build_e2(n, weight, std::move(unit))));
}

}  // namespace csamot
