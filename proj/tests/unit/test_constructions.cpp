#include "doctest.h"

#include "hocfg/constructions.hpp"
#include "hocfg/core.hpp"
#include "hocfg/error.hpp"
#include "hocfg/isomorphism.hpp"

#include "../support/fixtures.hpp"

using namespace hocfg;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::io;
}

}  // namespace

TEST_CASE("built-in families") {
  CHECK(validate(complete_configuration(4)).m == 4);
  CHECK(validate(complete_configuration(6)).m == 20);
  CHECK(validate(polygon(5)) == IncidenceProfile{5, 5, 2, 2, 1, true, true, false});
  const auto f = validate(fano());
  CHECK(f.n == 7);
  CHECK(f.s == 3);
  CHECK(f.t == 3);
  CHECK(code_of([] { complete_configuration(3); }) == ErrorCode::invalid_argument);
  CHECK(code_of([] { polygon(2); }) == ErrorCode::invalid_argument);
}

TEST_CASE("duality") {
  CHECK(are_isomorphic(dual(fixtures::tetrahedron()), fixtures::tetrahedron()));
  CHECK(is_self_dual(fixtures::tetrahedron()));
  CHECK(is_self_dual(fano()));
  int defined = 0;
  for (const auto& r : reference_rows::rows()) {
    const auto c = fixtures::row(r);
    try {
      const auto d = dual(c);
      ++defined;
      INFO(r.name);
      CHECK(validate(d).n == c.num_planes());
      CHECK(are_isomorphic(dual(d), c));
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::undefined);
    }
  }
  CHECK(defined > 0);
  CHECK(code_of([] { dual(fixtures::row("7.6")); }) == ErrorCode::undefined);
  CHECK(code_of([] { dual(fixtures::stacked_four_line_listed()); }) == ErrorCode::without_dual);
}

TEST_CASE("simple stacking") {
  const auto s = simple_stack(fixtures::four_line(), 2);
  const auto p = validate(s, true);
  CHECK(p.n == 12);
  CHECK(p.m == 4);
  CHECK(p.s == 2);
  CHECK(p.t == 6);
  CHECK(are_isomorphic(s, fixtures::stacked_four_line_listed()));
  const auto tri = validate(simple_stack(polygon(3), 2), true);
  CHECK(tri == IncidenceProfile{6, 3, 2, 4, 2, true, true, true});
  CHECK(validate(simple_stack(fano(), 2)).t == 6);
  CHECK(simple_stack(fano(), 3).order() == 3);
  CHECK(code_of([] { simple_stack(fixtures::tetrahedron(), 2); }) == ErrorCode::invalid_argument);
  CHECK(code_of([] { simple_stack(fano(), 1); }) == ErrorCode::invalid_argument);
}

TEST_CASE("general stacking") {
  // Square line {1,2} with 4-line line {1,2,3}, {1,4} with {3,4,6}, ...
  const auto g = general_stack(fixtures::square(), fixtures::four_line_on_5_to_10(), {0, 3, 1, 2});
  CHECK(g == fixtures::square_plus_four_line_listed());
  const auto p = validate(g, true);
  CHECK(p.n == 10);
  CHECK(p.m == 4);
  CHECK(p.s == 2);
  CHECK(p.t == 5);
  CHECK(validate(general_stack(fano(), fano()), true).t == 6);
  CHECK(code_of([] { general_stack(fixtures::square(), fano()); }) == ErrorCode::invalid_argument);
  CHECK(code_of([] { general_stack(fixtures::square(), fixtures::four_line(), {0, 0, 1, 2}); }) ==
        ErrorCode::invalid_argument);
}

TEST_CASE("cartesian product") {
  const auto tri = polygon(3).with_order(1);
  const auto triangle = Configuration(1, 3, {{1, 2}, {2, 3}, {1, 3}});
  CHECK(tri == triangle);
  const auto p = cartesian_product(triangle, triangle);
  CHECK(p.order() == 2);
  CHECK(validate(p) == IncidenceProfile{9, 9, 4, 4, 2, true, true, false});
  // Row-major encoding: (i, j) -> (i-1)*3 + j.
  CHECK(std::find(p.planes().begin(), p.planes().end(), Plane{1, 2, 4, 5}) != p.planes().end());
  const auto q = cartesian_product(fixtures::four_line(), triangle);
  CHECK(q.order() == 3);
  const auto pq = validate(q, true);
  CHECK(pq.n == 18);
  CHECK(pq.m == 12);
  CHECK(pq.s == 4);
  CHECK(pq.t == 6);
}

TEST_CASE("stack decomposition") {
  const auto split = decompose_stack(fixtures::square_plus_four_line_listed());
  REQUIRE(split.has_value());
  CHECK(split->first == std::vector<int>{1, 2, 3, 4});
  CHECK(split->second == std::vector<int>{5, 6, 7, 8, 9, 10});
  CHECK(decompose_stack(simple_stack(fano(), 2)).has_value());
  CHECK_FALSE(decompose_stack(complete_configuration(6)).has_value());
  CHECK_FALSE(decompose_stack(fixtures::tetrahedron()).has_value());
  DecomposeOptions tight;
  tight.max_points = 8;
  CHECK(code_of([&] { decompose_stack(fixtures::square_plus_four_line_listed(), tight); }) ==
        ErrorCode::budget_exceeded);
}

TEST_CASE("recipes") {
  ConstructionRecipe r;
  r.kind = RecipeKind::simple_stack;
  r.operands = {fixtures::four_line()};
  CHECK(are_isomorphic(build(r), fixtures::stacked_four_line_listed()));
  r.kind = RecipeKind::product;
  CHECK(code_of([&] { build(r); }) == ErrorCode::invalid_argument);
}
