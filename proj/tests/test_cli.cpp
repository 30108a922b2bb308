#include <doctest.h>

#include "wreath/centralizers.hpp"
#include "wreath/checks.hpp"
#include "wreath/error.hpp"
#include "wreath/jm.hpp"
#include "wreath/textio.hpp"

using namespace wreath;
using R = Rational;

namespace {

Ambient<R> semi(const GroupPtr& g, int n) { return {g, n, BasisKind::semigroup, {}}; }

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("expression evaluation") {
  GroupPtr c2 = cyclic_group(2);
  Ambient<R> a3 = semi(c2, 3);
  Ambient<R> a2 = semi(c2, 2);

  CHECK(evaluate_element_expression("xi[3]", a3).is_zero());
  CHECK(evaluate_element_expression("e1*e1 - e1", a2).is_zero());
  CHECK(evaluate_element_expression("u[1]", a3) == jm_lift(a3, 1));
  CHECK(evaluate_element_expression("t[1,2]", a2) == pair_sum(a2, 1, 2));
  CHECK(evaluate_element_expression("C[(1);(2)]", a3) ==
        class_sum(a3, type_from_string("(1);(2)", *c2)));
  CHECK(evaluate_element_expression("D[(1);()]", a3) ==
        stable_class_sum(a3, TypeFunction::atom(0, 1, 2)));
  CHECK(evaluate_element_expression("s1^2 - 1", a2).is_zero());
  CHECK(evaluate_element_expression("2*g[1,-1] - g[1,-1] - g[1,-1]", a2).is_zero());
  CHECK(evaluate_element_expression("{1->(2,1), 2->(1,1)}", a2) ==
        AlgebraElement<R>::basis(a2, RookMatrix::transposition(1, 2, 2)));
  // braces with omega data inside the class builders
  CHECK(evaluate_element_expression("D[O1{1->(1,1,1)}; ()]", a3) ==
        stable_orbit_sum(a3, OmegaMatrix::z_slot(1, 1), TypeFunction::empty(2)));
  CHECK(evaluate_element_expression("C[O1{1->(1,-1)}; (1);()]", a3) ==
        orbit_class_sum(a3, omega_from_string("O1{1->(1,-1)}", *c2),
                        TypeFunction::atom(0, 1, 2)));
  // parse errors carry positions
  CHECK_THROWS_WITH_AS(evaluate_element_expression("e1 + ", a2), doctest::Contains("position"),
                       Error);
  CHECK_THROWS_AS(evaluate_element_expression("q9", a2), Error);
}

TEST_CASE("omega and type parsing round trips") {
  GroupPtr c2 = cyclic_group(2);
  TypeFunction t = type_from_string("(2,1);()", *c2);
  CHECK(t.parts[0] == Partition{2, 1});
  CHECK(t.parts[1].empty());
  CHECK(type_from_string(t.str(), *c2) == t);

  OmegaMatrix o(2);
  o.set_entry(1, 2, 1, 1);
  CHECK(omega_from_string(o.str(*c2), *c2) == o);
  CHECK(omega_from_string("O2{}", *c2) == OmegaMatrix(2));
}

TEST_CASE("element JSON serialization") {
  GroupPtr c2 = cyclic_group(2);
  Ambient<R> a2 = semi(c2, 2);
  AlgebraElement<R> e = AlgebraElement<R>::unit(a2).scaled(R(1) / R(2));
  Json j = element_to_json(e);
  REQUIRE(j.size() == 1);
  CHECK(j[0][1] == "1");
  CHECK(j[0][2] == "2");
}

TEST_CASE("type and omega JSON forms") {
  GroupPtr c2 = cyclic_group(2);
  TypeFunction t = type_from_string("(2,1);(1)", *c2);
  Json tj = type_to_json(t);
  REQUIRE(tj.size() == 2);
  CHECK(tj[0] == Json::array({2, 1}));
  CHECK(tj[1] == Json::array({1}));

  OmegaMatrix o(2);
  o.set_entry(2, 1, 1, 3);
  Json oj = omega_to_json(o, *c2);
  REQUIRE(oj.size() == 1);
  CHECK(oj[0]["col"] == 2);
  CHECK(oj[0]["row"] == 1);
  CHECK(oj[0]["label"] == "-1");
  CHECK(oj[0]["exp"] == 3);
}

TEST_CASE("named checks are exposed and scoped runs work") {
  auto names = available_checks();
  CHECK(std::find(names.begin(), names.end(), "golden") != names.end());
  CHECK(std::find(names.begin(), names.end(), "bases") != names.end());
  CHECK_THROWS_AS(run_check("nonsense"), Error);

  CheckScope scope;
  scope.group = "c2";
  scope.max_n = 2;
  auto reports = run_check("bases", scope);
  CHECK(reports.size() == 15);  // five (n,m) pairs with n <= 2, three kinds each
  for (const auto& r : run_check("golden")) CHECK(r.passed());
}

TEST_SUITE_END();
