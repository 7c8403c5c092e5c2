#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgalab/blowup.hpp"
#include "dgalab/models.hpp"
#include "dgalab/parse.hpp"
#include "test_util.hpp"

using namespace dgalab;

namespace {

CohClass cls(const Model& m, const std::string& expr) {
  return class_of(m, parse_element(m.table(), expr));
}

DgaPresentation kodaira_thurston() { return tensor_product(heisenberg_model(), circle_model()); }

}  // namespace

TEST_CASE("build_neighborhood") {
  SUBCASE("empty base, m = 2: the even-sphere shape x, y with d y = x^2") {
    const BlowupModel bm(DgaPresentation({}, {}), 2, {});
    const GeneratorTable& t = bm.total().table();
    CHECK(t.size() == 2);
    CHECK(t.degree(t.find("x")) == 2);
    CHECK(t.degree(t.find("y")) == 3);
    CHECK(bm.total().presentation().differential_of(t.find("y")) == parse_element(t, "x^x"));
    CHECK(validate(bm.total().presentation()).ok());
  }
  SUBCASE("Kodaira-Thurston base, m = 4: d y = x^4 and H^2 grows by the class a") {
    const BlowupModel bm(kodaira_thurston(), 4, {});
    const GeneratorTable& t = bm.total().table();
    CHECK(t.degree(t.find("y")) == 7);
    CHECK(bm.total().presentation().differential_of(t.find("y")) ==
          power(t, generator_element(t, "x"), 4));
    CHECK(validate(bm.total().presentation()).ok());
    CHECK(bm.total().cohomology(2).dim() == bm.base().cohomology(2).dim() + 1);
  }
  SUBCASE("nonzero chern data enters d y and stays closed") {
    const Model w4(witt_model(4));
    const Element omega = witt_symplectic_form(w4.table(), 2);
    const BlowupModel bm(w4.presentation(), 2, {omega, Element::zero()});
    const GeneratorTable& t = bm.total().table();
    const Element dy = bm.total().presentation().differential_of(t.find("y"));
    CHECK(dy == parse_element(t, "x^x + 3 w1^w4^x + w2^w3^x"));
    CHECK(validate(bm.total().presentation()).ok());
    // [x]^m + sum [c_i][x]^{m-i} = 0, forced by d y.
    CHECK(class_of(bm.total(), dy, 4).is_zero());
  }
  SUBCASE("bad chern data is rejected") {
    const Model heis(heisenberg_model());
    // Wrong degree.
    CHECK_THROWS(BlowupModel(heis.presentation(), 2,
                             {generator_element(heis.table(), "a1"), Element::zero()}));
    // Not closed: d(w3^w4) = w1^w2^w4 over witt(4).
    const Model w4(witt_model(4));
    CHECK_THROWS(BlowupModel(w4.presentation(), 2,
                             {parse_element(w4.table(), "w3^w4"), Element::zero()}));
  }
}

TEST_CASE("module decomposition of the extension") {
  SUBCASE("Kodaira-Thurston, m = 4, degrees <= 6") {
    const BlowupModel bm(kodaira_thurston(), 4, {});
    const ModuleDecomposition md = module_decomposition(bm, 6);
    CHECK(md.ok);
    for (int l = 0; l <= 6; ++l) {
      int expected = 0;
      for (int i = 0; i < 4 && 2 * i <= l; ++i)
        expected += bm.base().cohomology(l - 2 * i).dim();
      CHECK(md.extension_dims[static_cast<size_t>(l)] == expected);
    }
    CHECK(md.extension_dims[0] == 1);
  }
  SUBCASE("a^m vanishes when the chern data is zero") {
    const BlowupModel bm(kodaira_thurston(), 4, {});
    CHECK(class_of(bm.total(), bm.x_power(4), 8).is_zero());
    CHECK_FALSE(class_of(bm.total(), bm.x_power(3), 6).is_zero());
  }
}

TEST_CASE("lifting classes and systems") {
  const BlowupModel bm(kodaira_thurston(), 4, {});
  const Model& base = bm.base();
  const Model& total = bm.total();
  SUBCASE("degree-1 classes lift to degree 3; zero lifts to zero") {
    const auto lifted = lift_classes(bm, {scalar_class_matrix(cls(base, "a1")),
                                          scalar_class_matrix(zero_class(base, 1))});
    CHECK(lifted[0].degrees(0, 0) == 3);
    CHECK(lifted[0].at(0, 0) ==
          class_of(total,
                   multiply(total.table(), bm.x(), bm.inject(parse_element(base.table(), "a1"))),
                   3));
    CHECK(lifted[1].at(0, 0).is_zero());
  }
  SUBCASE("lifted triple systems are valid with cocycle x^3 ^ c(A)") {
    const auto inputs = std::vector<ClassMatrix>{scalar_class_matrix(cls(base, "a2")),
                                                 scalar_class_matrix(cls(base, "a1")),
                                                 scalar_class_matrix(cls(base, "a1"))};
    const SearchResult r = find_defining_system(base, inputs);
    REQUIRE(r.system.has_value());
    const DefiningSystem lifted = lift_defining_system(bm, *r.system);
    CHECK(check_defining_system(total, lifted).ok);
    const Element expect = multiply(total.table(), bm.x_power(3),
                                    bm.inject(system_cocycle(base, *r.system).at(0, 0)));
    CHECK(system_cocycle(total, lifted).at(0, 0) == expect);
  }
  SUBCASE("the arity-4 Witt system lifts validly at m = 6") {
    const Model w4(witt_model(4));
    const BlowupModel big(w4.presentation(), 6, {});
    const DefiningSystem sys = witt_connection_system(w4, 2);
    const DefiningSystem lifted = lift_defining_system(big, sys);
    CHECK(check_defining_system(big.total(), lifted).ok);
    const Element expect = multiply(big.total().table(), big.x_power(4),
                                    big.inject(system_cocycle(w4, sys).at(0, 0)));
    CHECK(system_cocycle(big.total(), lifted).at(0, 0) == expect);
  }
}

TEST_CASE("x-expansion") {
  const BlowupModel bm(kodaira_thurston(), 4, {});
  const GeneratorTable& tt = bm.total().table();
  const Element u = bm.inject(parse_element(bm.base().table(), "a1^a2"));
  const Element v = bm.inject(parse_element(bm.base().table(), "a3"));
  SUBCASE("x ^ R has X_1 = R only") {
    const Element e = multiply(tt, bm.x(), bm.inject(parse_element(bm.base().table(), "a1")));
    const auto coeffs = expand_in_x(bm, e);
    REQUIRE(coeffs.size() == 2);
    CHECK(coeffs[0].is_zero());
    CHECK(coeffs[1] == parse_element(bm.base().table(), "a1"));
  }
  SUBCASE("base elements are X_0 only") {
    const auto coeffs = expand_in_x(bm, bm.inject(parse_element(bm.base().table(), "a1^t")));
    REQUIRE(coeffs.size() == 1);
    CHECK(coeffs[0] == parse_element(bm.base().table(), "a1^t"));
  }
  SUBCASE("x^2 u + x v splits into {X_1 = v, X_2 = u}") {
    Element e = multiply(tt, bm.x_power(2), u);
    e += multiply(tt, bm.x_power(1), v);
    const auto coeffs = expand_in_x(bm, e);
    REQUIRE(coeffs.size() == 3);
    CHECK(coeffs[0].is_zero());
    CHECK(coeffs[1] == parse_element(bm.base().table(), "a3"));
    CHECK(coeffs[2] == parse_element(bm.base().table(), "a1^a2"));
    // Reassembly is the identity.
    Element back;
    for (size_t l = 0; l < coeffs.size(); ++l)
      back += multiply(tt, bm.x_power(static_cast<int>(l)), bm.inject(coeffs[l]));
    CHECK(back == e);
  }
  SUBCASE("y-dependence is rejected") {
    CHECK_THROWS(expand_in_x(bm, generator_element(tt, "y")));
  }
}

TEST_CASE("top-coefficient reduction of lifted systems") {
  const BlowupModel bm(kodaira_thurston(), 4, {});
  const Model& base = bm.base();
  const auto base_classes = std::vector<ClassMatrix>{scalar_class_matrix(cls(base, "a2")),
                                                     scalar_class_matrix(cls(base, "a1")),
                                                     scalar_class_matrix(cls(base, "a1"))};
  const SearchResult r = find_defining_system(base, base_classes);
  REQUIRE(r.system.has_value());
  SUBCASE("the canonical lift extracts back to the original system") {
    const DefiningSystem lifted = lift_defining_system(bm, *r.system);
    const LiftReductionReport v = verify_lift_reduction(bm, base_classes, lifted);
    CHECK(v.hypothesis_ok);
    CHECK(v.extraction_valid);
    CHECK(v.top_coefficient_matches);
    CHECK(v.reduction_holds());
    for (const auto& [pos, block] : r.system->blocks)
      CHECK(v.extracted.block(pos.first, pos.second) == block);
    // The base product is nontrivial; the canonical lift's cocycle is not exact.
    CHECK_FALSE(v.lifted_cocycle_exact);
    CHECK_FALSE(v.base_cocycle_exact);
  }
  SUBCASE("hypothesis n < m is enforced") {
    const Model w4(witt_model(4));
    const BlowupModel small(w4.presentation(), 4, {});
    const DefiningSystem sys = witt_connection_system(w4, 2);
    const DefiningSystem lifted = lift_defining_system(small, sys);
    const LiftReductionReport v = verify_lift_reduction(small, sys.inputs, lifted);
    CHECK_FALSE(v.hypothesis_ok);
    // n = 4 < m = 6 works.
    const BlowupModel big(w4.presentation(), 6, {});
    const DefiningSystem lifted6 = lift_defining_system(big, sys);
    const LiftReductionReport v6 = verify_lift_reduction(big, sys.inputs, lifted6);
    CHECK(v6.hypothesis_ok);
    CHECK(v6.extraction_valid);
    CHECK(v6.top_coefficient_matches);
    CHECK(v6.reduction_holds());
  }
}

TEST_CASE("lifted triple nontriviality") {
  SUBCASE("Kodaira-Thurston data, m = 4: the lifted triple product is nontrivial") {
    const BlowupModel bm(kodaira_thurston(), 4, {});
    const Model& base = bm.base();
    const LiftedTripleReport v = verify_lifted_triple(
        bm, scalar_class_matrix(cls(base, "a2")), scalar_class_matrix(cls(base, "a1")),
        scalar_class_matrix(cls(base, "a1")));
    CHECK(v.hypothesis_ok);
    CHECK(v.base_value_outside_base_indeterminacy);
    CHECK(v.lifted_value_matches_a3_cup);
    CHECK(v.lifted_value_outside_lifted_indeterminacy);
    CHECK(v.lifted_nontrivial());
  }
  SUBCASE("a trivial base triple gives no obstruction") {
    const Model s4(sphere_model(4));
    const BlowupModel bm(s4.presentation(), 5, {});
    const LiftedTripleReport v =
        verify_lifted_triple(bm, scalar_class_matrix(cls(s4, "x")), scalar_class_matrix(cls(s4, "x")),
                           scalar_class_matrix(cls(s4, "x")));
    CHECK(v.hypothesis_ok);
    CHECK_FALSE(v.base_value_outside_base_indeterminacy);
    CHECK_FALSE(v.lifted_nontrivial());
  }
  SUBCASE("hypothesis m >= 4 is enforced") {
    const BlowupModel bm(kodaira_thurston(), 3, {});
    const Model& base = bm.base();
    const LiftedTripleReport v = verify_lifted_triple(
        bm, scalar_class_matrix(cls(base, "a2")), scalar_class_matrix(cls(base, "a1")),
        scalar_class_matrix(cls(base, "a1")));
    CHECK_FALSE(v.hypothesis_ok);
  }
}

TEST_CASE("lifted quadruple nontriviality") {
  const Model w4(witt_model(4));
  const std::vector<ClassMatrix> inputs = {
      scalar_class_matrix(cls(w4, "6 w2")), scalar_class_matrix(cls(w4, "w1")),
      scalar_class_matrix(cls(w4, "w1")), scalar_class_matrix(cls(w4, "w1"))};
  const SearchResult r = find_defining_system(w4, inputs);
  REQUIRE(r.system.has_value());
  SUBCASE("the expansion equations hold and the a^4 coefficient is irreducible") {
    const BlowupModel bm(w4.presentation(), 4, {});  // 2m = 8 > 2 sdeg = 4
    const LiftedQuadrupleReport v = verify_lifted_quadruple(bm, inputs, *r.system);
    CHECK(v.hypothesis_ok);
    CHECK(v.equations_ok);
    CHECK(v.extraction_valid);
    CHECK(v.base_value_not_reducible);
    CHECK(v.lifted_nontrivial());
  }
  SUBCASE("the codimension hypothesis is checked") {
    const BlowupModel bm(w4.presentation(), 2, {});  // 2m = 4 = 2 sdeg fails
    const LiftedQuadrupleReport v = verify_lifted_quadruple(bm, inputs, *r.system);
    CHECK_FALSE(v.hypothesis_ok);
  }
}
