#include "doctest.h"

#include <cmath>
#include <random>

#include "hocfg/constructions.hpp"
#include "hocfg/error.hpp"
#include "hocfg/realize.hpp"

#include "../support/fixtures.hpp"

using namespace hocfg;

TEST_CASE("realizations are certified and re-verified") {
  for (const auto& c : {fixtures::tetrahedron(), fixtures::twelve_point(), fixtures::three_spines()}) {
    const auto result = realize(c);
    REQUIRE(result.embedding.has_value());
    const auto report = verify_embedding(c, *result.embedding);
    CHECK(report.certified);
    CHECK(report.max_residual < 1e-8);
    CHECK(report.min_distance > 1e-3);
    CHECK(report.min_noncollinearity > 1e-3);
    CHECK(report.min_plane_distinctness > 1e-3);
    CHECK(report.failures.empty());
  }
}

TEST_CASE("same seed, same embedding") {
  RealizeOptions opts;
  opts.restarts = 4;
  const auto a = realize(fixtures::tetrahedron(), opts);
  opts.jobs = 3;
  const auto b = realize(fixtures::tetrahedron(), opts);
  REQUIRE(a.embedding.has_value());
  REQUIRE(b.embedding.has_value());
  CHECK(a.restart == b.restart);
  CHECK(a.embedding->coords == b.embedding->coords);
}

TEST_CASE("degenerate embeddings are rejected") {
  // Everything in one plane: all planes coincide.
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1, 1);
  Embedding flat;
  for (int i = 0; i < 12; ++i) flat.coords.push_back({u(rng), u(rng), 0.0});
  const auto r = verify_embedding(fixtures::twelve_point(), flat);
  CHECK(r.max_residual < 1e-8);
  CHECK_FALSE(r.certified);
  CHECK(r.min_plane_distinctness < 1e-3);

  // Coordinates proposed for the complete configuration on five points.
  const Embedding five{{{0, 0, 1}, {0, 0, -1}, {-1, 0, 1}, {1, 0, 1}, {0, 1, 1}}};
  const auto k5 = complete_configuration(5);
  const auto rk = verify_embedding(k5, five);
  CHECK_FALSE(rk.certified);
  CHECK(rk.min_noncollinearity < 1e-12);
  const auto& planes = k5.planes();
  REQUIRE(rk.worst_plane >= 1);
  CHECK(planes[rk.worst_plane - 1] == Plane{1, 3, 4});

  Embedding twin = *realize(fixtures::tetrahedron()).embedding;
  twin.coords[1] = twin.coords[0];
  CHECK_FALSE(verify_embedding(fixtures::tetrahedron(), twin).certified);
}

TEST_CASE("verification is invariant under rigid motions") {
  const auto c = fixtures::three_spines();
  const auto e = *realize(c).embedding;
  const double a = 0.7;
  const std::array<double, 9> rot{std::cos(a), -std::sin(a), 0, std::sin(a), std::cos(a), 0, 0, 0, 1};
  const auto moved = rigid_motion(e, rot, {3.0, -2.0, 0.5});
  const auto r1 = verify_embedding(c, e);
  const auto r2 = verify_embedding(c, moved);
  CHECK(r2.certified);
  CHECK(std::abs(r1.min_distance - r2.min_distance) < 1e-10);
  CHECK(std::abs(r1.min_noncollinearity - r2.min_noncollinearity) < 1e-10);
  CHECK(std::abs(r1.max_residual - r2.max_residual) < 1e-10);
  CHECK(std::abs(r1.min_plane_distinctness - r2.min_plane_distinctness) < 1e-10);
}

TEST_CASE("embedding text format") {
  const auto e = *realize(fixtures::tetrahedron()).embedding;
  const auto text = serialize_embedding(e);
  CHECK(parse_embedding(text, 4).coords == e.coords);
  CHECK_THROWS_AS(parse_embedding("point 1 0 0 0\n", 2), Error);
  CHECK_THROWS_AS(parse_embedding("point 1 0 0 0\npoint 1 1 1 1\n", 2), Error);
  CHECK_THROWS_AS(parse_embedding("point 1 0 0 x\n", 1), Error);
  try {
    parse_embedding("point 1 0 0 0\npoint 3 0 0 0\n", 2);
  } catch (const Error& e2) {
    CHECK(e2.code() == ErrorCode::parse);
    CHECK(std::string(e2.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("realize rejects unsupported input") {
  CHECK_THROWS_AS(realize(fixtures::four_line()), Error);
}
