#include "csamot/error.hpp"
#include "csamot/hyperplane_section.hpp"
#include "doctest.h"

using namespace csamot;

namespace {

XClass xl(const char* lambda) { return XClass::label(parse_partition(lambda)); }
XClass xc(int codim, const char* combo) { return XClass::from_terms(codim, parse_combination(combo)); }

// The Schubert labels that index CH^codim(X).
std::vector<Partition> x_labels(int codim) { return box_partitions(kGr36, x_label_size(codim)); }

}  // namespace

TEST_CASE("label conventions") {
  CHECK(x_label_size(3) == 3);
  CHECK(x_label_size(4) == 4);
  CHECK(x_label_size(5) == 6);
  CHECK(x_codim_of_label(parse_partition("(3,3)")) == 5);
  CHECK(x_codim_of_label(parse_partition("(2,2)")) == 4);
  CHECK_THROWS_AS(x_codim_of_label(parse_partition("(3,2)")), Error);
  CHECK(XClass::point().codim() == 8);
}

TEST_CASE("restrict_from_gr") {
  CHECK(restrict_from_gr(GrChowClass::schubert(kGr36, parse_partition("(2,1,1)"))) == xl("(2,1,1)"));
  CHECK(restrict_from_gr(GrChowClass::schubert(kGr36, Partition())) == XClass::fundamental());
  CHECK(restrict_from_gr(GrChowClass::schubert(kGr36, parse_partition("(1)"))) == xl("(1)"));
  CHECK_THROWS_AS(restrict_from_gr(GrChowClass::schubert(kGr36, parse_partition("(3,2)"))), Error);
}

TEST_CASE("hyperplane_mul") {
  CHECK(hyperplane_mul(xl("(2,2)")) == xc(5, "(3,3) + 2(3,2,1) + (2,2,2)"));
  CHECK(hyperplane_mul(xl("(2,1)")) == xc(4, "(3,1) + (2,2) + (2,1,1)"));
  // Middle step: Pieri twice, (2,1,1) -> (2,2,1) + (3,1,1) -> ...
  CHECK(hyperplane_mul(xl("(2,1,1)")) == xc(5, "2(3,2,1) + (2,2,2)"));
  CHECK(hyperplane_mul(XClass::fundamental()) == xl("(1)"));
  CHECK_THROWS_AS(hyperplane_mul(XClass::point()), Error);
}

TEST_CASE("hyperplane_mul agrees with Pieri below the middle") {
  for (int codim = 0; codim <= 3; ++codim)
    for (const auto& lambda : x_labels(codim)) {
      const auto gr = GrChowClass::schubert(kGr36, lambda);
      CHECK(hyperplane_mul(restrict_from_gr(gr)) == restrict_from_gr(pieri(gr)));
    }
}

TEST_CASE("pairing on X") {
  CHECK(pairing_x(xl("(3,1)"), xl("(3,1)")) == 1);
  CHECK(pairing_x(xl("(2,2)"), xl("(2,2)")) == 0);
  CHECK(pairing_x(xl("(3,1)"), xl("(2,1,1)")) == 0);
  CHECK(pairing_x(XClass::fundamental(), XClass::point()) == 1);
  CHECK_THROWS_AS(pairing_x(xl("(3,1)"), xl("(1)")), Error);
}

TEST_CASE("hyperplane multiplication is self-adjoint for the pairing") {
  for (int codim = 0; codim <= 6; ++codim)
    for (const auto& l : x_labels(codim))
      for (const auto& m : x_labels(7 - codim)) {
        const XClass x = XClass::label(l), y = XClass::label(m);
        CHECK(pairing_x(hyperplane_mul(x), y) == pairing_x(x, hyperplane_mul(y)));
      }
}

TEST_CASE("gram matrices") {
  const IntMatrix g = gram_matrix({xl("(3,1)"), xl("(2,2)"), xl("(2,1,1)")});
  CHECK(g == IntMatrix{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
  CHECK(det_exact(g) == -2);
  CHECK(gram_matrix({xl("(3,1)")}) == IntMatrix{{1}});
  CHECK(gram_matrix({}).rows() == 0);
  const auto all4 = std::vector<XClass>{xl("(3,1)"), xl("(2,2)"), xl("(2,1,1)"), xl("(3,1)") + xl("(2,2)")};
  const IntMatrix g4 = gram_matrix(all4);
  CHECK(g4 == g4.transposed());
}

TEST_CASE("alpha cycles are stored verbatim") {
  const PXClass a1 = alpha(1);
  CHECK(a1.at(0) == xl("(3)"));
  CHECK(a1.at(1) == xl("(2)"));
  CHECK(a1.at(2) == xl("(1)"));
  const PXClass a4 = alpha(4);
  CHECK(a4.total_codim == 6);
  CHECK(a4.at(0) == xc(6, "-(3,2,2)"));
  CHECK(a4.at(1) == xc(5, "-(3,2,1) - (2,2,2)"));
  CHECK(a4.at(2) == xc(4, "-(2,2)"));
  CHECK(alpha(5).at(2) == xc(5, "-(3,3) + (3,2,1) - (2,2,2)"));
  CHECK_THROWS_AS(alpha(0), Error);
  CHECK_THROWS_AS(alpha(6), Error);
}

TEST_CASE("alpha recursion mod 3") {
  for (int i = 1; i <= 4; ++i) {
    const auto r = verify_alpha_recursion(i);
    CHECK(r.holds);
    CHECK(r.residual.is_zero());
  }
  // Injected defect: alpha_2 + (3,1) in the H^0 slot.
  const PXClass a2 = alpha(2);
  const PXClass perturbed(a2.total_codim, {a2.at(0) + xl("(3,1)"), a2.at(1), a2.at(2)});
  const auto r = check_recursion(alpha(1), perturbed, 3);
  CHECK_FALSE(r.holds);
  CHECK(r.residual.at(0) == xl("(3,1)"));
  CHECK(r.residual.at(1).is_zero());
}

TEST_CASE("tate_iso_check") {
  const std::vector<XClass> middle = {xl("(3,1)"), xl("(2,2)"), xl("(2,1,1)")};
  CHECK(tate_iso_check(middle, {2}));
  CHECK_FALSE(tate_iso_check(middle, {}));
  CHECK(tate_iso_check({XClass::fundamental(), XClass::point()}, {}));
  CHECK(tate_iso_check(alpha_collection(), {2}));
  CHECK_FALSE(tate_iso_check(alpha_collection(), {}));
  CHECK_THROWS_AS(tate_iso_check({XClass::fundamental()}, {}), Error);
}

TEST_CASE("basis certificates") {
  CHECK(basis_certificate({xc(3, "(3)"), xc(3, "(3) + (2,1)"), xc(3, "(3) - (2,1) + (1,1,1)")}, 3));
  CHECK(basis_certificate({xc(5, "(3,3) - (3,2,1)"), xc(5, "-(3,2,1) - (2,2,2)"), xc(5, "-(3,3) + (3,2,1) - (2,2,2)")},
                          5));
  CHECK_FALSE(basis_certificate({xc(1, "3(1)")}, 1));
  CHECK_THROWS_AS(basis_certificate({xc(3, "(3)")}, 3), Error);
  for (int codim : {1, 2, 3, 5, 6, 7}) CHECK(basis_certificate(alpha_components_in_codim(codim), codim));
}

TEST_CASE("c3 twist identity") {
  const auto r = verify_c3_twist_identity();
  const Poly h = Poly::variable("h");
  CHECK(r.holds);
  CHECK(r.residual == pow(h, 3));
  CHECK(r.residual.substitute("h", Poly(0L)).is_zero());
  // Roots (1,2,3), h = 1: (1+1)(2+1)(3+1) = 24 = e3 + e2 + e1 + h^3 = 6 + 11 + 6 + 1.
  CHECK(r.residual.evaluate({{"x1", 1}, {"x2", 2}, {"x3", 3}, {"h", 1}}) == 24 - (6 + 11 + 6));
}
