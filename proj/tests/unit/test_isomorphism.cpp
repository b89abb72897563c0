#include "doctest.h"

#include "hocfg/constructions.hpp"
#include "hocfg/core.hpp"
#include "hocfg/error.hpp"
#include "hocfg/isomorphism.hpp"

#include "../support/fixtures.hpp"

using namespace hocfg;

TEST_CASE("canonical form agrees with the exhaustive scan") {
  std::mt19937_64 rng(7);
  for (const auto& r : reference_rows::rows()) {
    const auto c = fixtures::row(r);
    const auto ref = reference_canonical_form(c);
    INFO(r.name);
    CHECK(canonical_form(c).planes == ref.planes);
    const auto shuffled = c.relabeled(fixtures::random_relabeling(c.num_points(), rng));
    CHECK(canonical_form(shuffled).planes == ref.planes);
  }
  for (const auto& c : {complete_configuration(6), fixtures::three_spines(), fixtures::two_tetrahedra(),
                        simple_stack(polygon(4), 2)}) {
    CHECK(canonical_form(c).planes == reference_canonical_form(c).planes);
  }
}

TEST_CASE("canonical relabeling reproduces the canonical planes") {
  const auto c = fixtures::row("8.17");
  const auto form = canonical_form(c);
  CHECK(c.relabeled(form.relabeling).planes() == form.planes);
  CHECK(canonical_configuration(c).planes() == form.planes);
}

TEST_CASE("isomorphism tests") {
  std::mt19937_64 rng(11);
  const auto a = fixtures::row("7.8");
  CHECK(are_isomorphic(a, a.relabeled(fixtures::random_relabeling(7, rng))));
  CHECK_FALSE(are_isomorphic(a, fixtures::row("7.9")));
  CHECK_FALSE(are_isomorphic(fixtures::tetrahedron(), complete_configuration(5)));
  // Listed simple stack of the 4-line geometry equals the construction up to relabeling.
  CHECK(are_isomorphic(fixtures::stacked_four_line_listed(), simple_stack(fixtures::four_line(), 2)));
}

TEST_CASE("distinct reference rows are pairwise non-isomorphic") {
  const auto& rows = reference_rows::rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (rows[i].n != rows[j].n) continue;
      INFO(rows[i].name << " vs " << rows[j].name);
      CHECK_FALSE(are_isomorphic(fixtures::row(rows[i]), fixtures::row(rows[j])));
    }
  }
}

TEST_CASE("automorphism group order matches a permutation count") {
  for (const auto& r : reference_rows::rows()) {
    const auto c = fixtures::row(r);
    const auto g = automorphism_group(c);
    INFO(r.name);
    CHECK(g.order == fixtures::brute_automorphism_count(c));
    for (const auto& gen : g.generators) CHECK(c.relabeled(gen.images()).planes() == c.planes());
  }
  CHECK(automorphism_group(complete_configuration(6)).order == 720);
  CHECK(automorphism_group(fixtures::two_tetrahedra()).order == 1152);
  CHECK(automorphism_group(fano()).order == 168);
}

TEST_CASE("lex-min test used by orderly generation") {
  // {124, 135} relabels to {123, 145}, which is smaller.
  CHECK(detail::is_lex_min(6, 3, {0b000111, 0b001011}));
  CHECK(detail::is_lex_min(6, 3, {0b000111, 0b011001}));
  CHECK_FALSE(detail::is_lex_min(6, 3, {0b001011, 0b010101}));
}

TEST_CASE("reference scan refuses large inputs") {
  CHECK_THROWS_AS(reference_canonical_form(complete_configuration(11)), Error);
}
