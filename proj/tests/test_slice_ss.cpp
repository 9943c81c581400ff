#include "csamot/error.hpp"
#include "csamot/slice_ss.hpp"
#include "doctest.h"

using namespace csamot;

namespace {

const GroupExpr Z = GroupExpr::free_z();
const GroupExpr Units = GroupExpr::atom(kUnitGroupName);

std::map<int, std::string> rendered(const std::map<int, GroupExpr>& t) {
  std::map<int, std::string> out;
  for (const auto& [p, g] : t) out[p] = g.to_string();
  return out;
}

}  // namespace

TEST_CASE("group expressions") {
  CHECK(GroupExpr::sub_n(Z).to_string() == "nZ");
  CHECK(GroupExpr::cyclic_n().to_string() == "Z/n");
  CHECK(GroupExpr::cyclic(1).is_zero());
  CHECK(GroupExpr::cyclic(6).to_string() == "Z/6");
  CHECK(GroupExpr::power_sub_n(Units).to_string() == "(F*)^n");
  CHECK(GroupExpr::sum({Z, GroupExpr::zero(), GroupExpr::power_sub_n(Units)}).to_string() == "Z ⊕ (F*)^n");
  CHECK(GroupExpr::sum({GroupExpr::zero()}).is_zero());
  CHECK(GroupExpr::sum({Z}) == Z);
  CHECK_THROWS_AS(GroupExpr::sub_n(Units), Error);
  CHECK_THROWS_AS(GroupExpr::power_sub_n(Z), Error);
}

TEST_CASE("Cech table") {
  CHECK(xcech_group(0, 0) == Z);
  CHECK(xcech_group(1, 1) == Units);
  CHECK(xcech_group(3, 1) == GroupExpr::cyclic_n());
  CHECK(xcech_group(2, 1).is_zero());
  CHECK(xcech_group(4, 2) == GroupExpr::atom(kReducedK1Name));
  CHECK(xcech_group(3, 2).is_zero());
  CHECK_THROWS_AS(xcech_group(0, 3), Error);
}

TEST_CASE("build_e2: weight 1") {
  const auto page = build_e2(3, 1);
  std::size_t nonzero = 0;
  for (const auto& [pos, cell] : page.cells)
    if (!cell.is_zero()) {
      ++nonzero;
      CHECK(pos == std::make_pair(0, 1));
      CHECK(cell.total() == Z);
    }
  CHECK(nonzero == 1);
  CHECK(page.differentials.empty());
}

TEST_CASE("build_e2: weight 2 grid and its differential") {
  const auto page = build_e2(3, 2);
  CHECK(page.at(1, 2) == Z);
  CHECK(page.at(1, 1) == Units);
  CHECK(page.at(3, 1) == GroupExpr::cyclic_n());
  REQUIRE(page.differentials.size() == 1);
  const auto& d = page.differentials.front();
  CHECK(d.kind == DifferentialKind::UnitCanonical);
  CHECK(d.source == std::make_pair(1, 2));
  CHECK(d.target == std::make_pair(3, 1));
  CHECK(d.coefficient == "1*c");
}

TEST_CASE("support lies in 0 < q <= weight") {
  for (int n : {2, 3, 5, 7})
    for (int j = 1; j <= 3; ++j)
      for (const auto& [pos, cell] : build_e2(n, j).cells) {
        CHECK(pos.second > 0);
        CHECK(pos.second <= j);
      }
}

TEST_CASE("apply_d2 rewrites") {
  const auto w2 = apply_d2(build_e2(3, 2));
  CHECK(w2.at(1, 2) == GroupExpr::sub_n(Z));
  CHECK(w2.at(3, 1).is_zero());
  CHECK(w2.d2_applied);

  const auto w3 = apply_d2(build_e2(3, 3));
  CHECK(w3.at(2, 2) == GroupExpr::power_sub_n(Units));

  // A page with no nonzero differentials is left unchanged.
  const auto w1 = build_e2(3, 1);
  const auto w1d = apply_d2(w1);
  CHECK(w1d.at(0, 1) == w1.at(0, 1));
  CHECK(w1d.at(2, 1) == w1.at(2, 1));

  // A differential onto a group that is not the reduction of its source.
  auto bad = build_e2(3, 2);
  bad.cells.at({3, 1}).summands.front().group = Units;
  CHECK_THROWS_AS(apply_d2(bad), Error);
}

TEST_CASE("assemble: the small-weight tables") {
  CHECK(rendered(small_weight_table(3, 1)) == std::map<int, std::string>{{1, "Z"}});
  CHECK(rendered(small_weight_table(3, 2)) == std::map<int, std::string>{{2, "F*"}, {3, "nZ"}});
  CHECK(rendered(small_weight_table(3, 3)) == std::map<int, std::string>{{1, "H^{0,2}(F)"},
                                                                          {2, "H^{1,2}(F)"},
                                                                          {3, "H^{2,2}(F)"},
                                                                          {4, "Z ⊕ (F*)^n"},
                                                                          {5, "nZ"}});
  CHECK(small_weight_table(3, 3).at(4) == GroupExpr::sum({Z, GroupExpr::power_sub_n(Units)}));
}

TEST_CASE("tables do not depend on the unit c and are stable under rebuild") {
  for (int n : {3, 5, 7})
    for (int j = 1; j <= 3; ++j) {
      const auto symbolic = small_weight_table(n, j);
      for (int c = 1; c < n; ++c) CHECK(small_weight_table(n, j, Integer(c)) == symbolic);
      CHECK(assemble(apply_d2(apply_d2(build_e2(n, j)))) == symbolic);
      CHECK(small_weight_table(3, j) == symbolic);
    }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(build_e2(3, 0), Error);
  CHECK_THROWS_AS(build_e2(3, 4), Error);
  CHECK_THROWS_AS(build_e2(4, 2), Error);
  CHECK_THROWS_AS(build_e2(3, 2, Integer(6)), Error);
  CHECK_THROWS_AS(assemble(build_e2(3, 2)), Error);
  // A group at (5,1) would be hit by d_3 from the Z at (2,3).
  auto page = apply_d2(build_e2(3, 3));
  page.cells[{5, 1}].summands.push_back({Z, MultiIndex({1})});
  try {
    assemble(page);
    FAIL("expected a higher-differential error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HigherDifferentialPossible);
  }
}
