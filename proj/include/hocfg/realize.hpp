#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hocfg/configuration.hpp"

namespace hocfg {

using Point3 = std::array<double, 3>;

/// Coordinates of points 1..n (coords[i-1] is point i).
struct Embedding {
  std::vector<Point3> coords;
};

struct RealizeOptions {
  int restarts = 64;
  std::uint64_t seed = 0;
  double tolerance = 1e-8;        // planarity residual bound
  double min_separation = 1e-3;   // minimum pairwise distance
  double min_noncollinear = 1e-3; // second singular value per plane
  int max_iterations = 3000;
  int jobs = 1;
};

struct Incidence {
  int point = 0;
  int plane = 0;  // 1-based index into the sorted plane list
  double distance = 0;
};

/// Quantities recomputed from the coordinates alone. Residual of a plane is
/// the squared smallest singular value of its centered coordinate block;
/// its non-collinearity margin is the second singular value. Two planes are
/// distinct when the union of their points has a positive smallest singular
/// value; two derived lines are distinct when their union has a positive
/// second singular value.
struct EmbeddingReport {
  bool certified = false;
  double tolerance = 0;
  std::vector<double> residuals;
  std::vector<double> noncollinearity;
  double max_residual = 0;
  double min_distance = 0;
  std::array<int, 2> closest_pair{0, 0};
  double min_noncollinearity = 0;
  int worst_plane = 0;
  double min_plane_distinctness = 0;
  std::array<int, 2> closest_planes{0, 0};
  double min_line_distinctness = 0;
  std::vector<Incidence> extra_incidences;  // informational only
  std::vector<std::string> failures;
};

EmbeddingReport verify_embedding(const Configuration& config, const Embedding& embedding,
                                 double tolerance = 1e-8, double min_separation = 1e-3,
                                 double min_noncollinear = 1e-3);

std::string to_string(const EmbeddingReport& report);

struct RealizeResult {
  std::optional<Embedding> embedding;  // present only when certified
  int restart = -1;                    // index of the winning restart
  int restarts_run = 0;
  double best_objective = 0;
};

/// Seeded multi-start local descent; an empty result is inconclusive.
RealizeResult realize(const Configuration& config, const RealizeOptions& options = {});

std::string serialize_embedding(const Embedding& embedding);
Embedding parse_embedding(const std::string& text, int num_points);
Embedding read_embedding_file(const std::string& path, int num_points);

/// x -> R x + shift, used to check rigid-motion invariance.
Embedding rigid_motion(const Embedding& embedding, const std::array<double, 9>& rotation, const Point3& shift);

}  // namespace hocfg
