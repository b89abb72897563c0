#include "hocfg/realize.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "hocfg/core.hpp"
#include "hocfg/error.hpp"

namespace hocfg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<std::vector<int>> intersection_lines(const Configuration& config) {
  std::set<std::vector<int>> lines;
  const auto& planes = config.planes();
  for (std::size_t i = 0; i < planes.size(); ++i) {
    for (std::size_t j = i + 1; j < planes.size(); ++j) {
      std::vector<int> common;
      std::set_intersection(planes[i].begin(), planes[i].end(), planes[j].begin(), planes[j].end(),
                            std::back_inserter(common));
      if (common.size() >= 2) lines.insert(std::move(common));
    }
  }
  return {lines.begin(), lines.end()};
}

std::vector<int> merged(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// ---- verification: SVD of centered blocks, nothing shared with the solver.

Eigen::Vector3d singular_values(const Embedding& e, const std::vector<int>& points) {
  Eigen::MatrixXd block(points.size(), 3);
  for (std::size_t r = 0; r < points.size(); ++r) {
    const auto& c = e.coords[points[r] - 1];
    block.row(r) << c[0], c[1], c[2];
  }
  const Eigen::RowVector3d mean = block.colwise().mean();
  block.rowwise() -= mean;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(block);
  Eigen::Vector3d sv = Eigen::Vector3d::Zero();
  const auto& values = svd.singularValues();
  for (Eigen::Index i = 0; i < values.size() && i < 3; ++i) sv[i] = values[i];
  return sv;  // descending
}

}  // namespace

EmbeddingReport verify_embedding(const Configuration& config, const Embedding& embedding, double tolerance,
                                 double min_separation, double min_noncollinear) {
  const int n = config.num_points();
  if (static_cast<int>(embedding.coords.size()) != n) {
    throw Error(ErrorCode::invalid_argument, "embedding has " + std::to_string(embedding.coords.size()) +
                                                 " points, configuration has " + std::to_string(n));
  }
  for (const auto& c : embedding.coords) {
    for (double v : c) {
      if (!std::isfinite(v)) throw Error(ErrorCode::invalid_argument, "embedding has non-finite coordinates");
    }
  }
  EmbeddingReport r;
  r.tolerance = tolerance;
  const auto& planes = config.planes();

  r.min_noncollinearity = kInf;
  for (std::size_t e = 0; e < planes.size(); ++e) {
    const auto sv = singular_values(embedding, planes[e]);
    r.residuals.push_back(sv[2] * sv[2]);
    r.noncollinearity.push_back(sv[1]);
    r.max_residual = std::max(r.max_residual, sv[2] * sv[2]);
    if (sv[1] < r.min_noncollinearity) {
      r.min_noncollinearity = sv[1];
      r.worst_plane = static_cast<int>(e) + 1;
    }
  }

  r.min_distance = kInf;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto& a = embedding.coords[i];
      const auto& b = embedding.coords[j];
      const double d = std::hypot(a[0] - b[0], a[1] - b[1], a[2] - b[2]);
      if (d < r.min_distance) {
        r.min_distance = d;
        r.closest_pair = {i + 1, j + 1};
      }
    }
  }

  r.min_plane_distinctness = kInf;
  for (std::size_t e = 0; e < planes.size(); ++e) {
    for (std::size_t f = e + 1; f < planes.size(); ++f) {
      const double v = singular_values(embedding, merged(planes[e], planes[f]))[2];
      if (v < r.min_plane_distinctness) {
        r.min_plane_distinctness = v;
        r.closest_planes = {static_cast<int>(e) + 1, static_cast<int>(f) + 1};
      }
    }
  }

  const auto lines = intersection_lines(config);
  r.min_line_distinctness = kInf;
  for (std::size_t a = 0; a < lines.size(); ++a) {
    for (std::size_t b = a + 1; b < lines.size(); ++b) {
      r.min_line_distinctness = std::min(r.min_line_distinctness, singular_values(embedding, merged(lines[a], lines[b]))[1]);
    }
  }

  // Points lying (within sqrt(tolerance)) on the affine hull of a plane they
  // do not belong to.
  const double near = std::sqrt(tolerance);
  for (std::size_t e = 0; e < planes.size(); ++e) {
    if (r.noncollinearity[e] <= min_noncollinear) continue;
    Eigen::MatrixXd block(planes[e].size(), 3);
    for (std::size_t k = 0; k < planes[e].size(); ++k) {
      const auto& c = embedding.coords[planes[e][k] - 1];
      block.row(k) << c[0], c[1], c[2];
    }
    const Eigen::RowVector3d mean = block.colwise().mean();
    block.rowwise() -= mean;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(block, Eigen::ComputeFullV);
    const Eigen::Vector3d normal = svd.matrixV().col(2);
    for (int p = 1; p <= n; ++p) {
      if (std::binary_search(planes[e].begin(), planes[e].end(), p)) continue;
      const auto& c = embedding.coords[p - 1];
      const double dist = std::abs((Eigen::RowVector3d(c[0], c[1], c[2]) - mean).dot(normal.transpose()));
      if (dist <= near) r.extra_incidences.push_back({p, static_cast<int>(e) + 1, dist});
    }
  }

  auto fmt = [](double v) {
    std::ostringstream s;
    s.precision(6);
    s << v;
    return s.str();
  };
  if (!(r.max_residual < tolerance)) r.failures.push_back("planarity residual " + fmt(r.max_residual) + " >= " + fmt(tolerance));
  if (!(r.min_distance > min_separation)) {
    r.failures.push_back("points " + std::to_string(r.closest_pair[0]) + " and " + std::to_string(r.closest_pair[1]) +
                         " are " + fmt(r.min_distance) + " apart");
  }
  if (!(r.min_noncollinearity > min_noncollinear)) {
    r.failures.push_back("plane " + std::to_string(r.worst_plane) + " is nearly collinear (margin " +
                         fmt(r.min_noncollinearity) + ")");
  }
  if (!(r.min_plane_distinctness > min_noncollinear)) {
    r.failures.push_back("planes " + std::to_string(r.closest_planes[0]) + " and " + std::to_string(r.closest_planes[1]) +
                         " share an affine hull (margin " + fmt(r.min_plane_distinctness) + ")");
  }
  if (!(r.min_line_distinctness > min_noncollinear)) {
    r.failures.push_back("two derived lines coincide (margin " + fmt(r.min_line_distinctness) + ")");
  }
  r.certified = r.failures.empty();
  return r;
}

std::string to_string(const EmbeddingReport& r) {
  std::ostringstream out;
  out.precision(6);
  out << (r.certified ? "verified" : "not verified") << '\n';
  out << "max planarity residual: " << r.max_residual << " (tolerance " << r.tolerance << ")\n";
  out << "min point distance: " << r.min_distance << " (points " << r.closest_pair[0] << ", " << r.closest_pair[1]
      << ")\n";
  out << "min non-collinearity: " << r.min_noncollinearity << " (plane " << r.worst_plane << ")\n";
  out << "min plane distinctness: " << r.min_plane_distinctness << '\n';
  out << "min line distinctness: " << r.min_line_distinctness << '\n';
  for (const auto& f : r.failures) out << "failure: " << f << '\n';
  for (const auto& inc : r.extra_incidences) {
    out << "note: point " << inc.point << " lies on the hull of plane " << inc.plane << " (distance " << inc.distance
        << ")\n";
  }
  return out.str();
}

namespace {

// ---- solver

using Vec = Eigen::VectorXd;

struct Problem {
  int n = 0;
  std::vector<std::vector<int>> planes;
  std::vector<std::vector<int>> plane_unions;
  std::vector<std::vector<int>> line_unions;
  double sep_target = 0.05;
  double flat_target = 0.05;  // on singular values
  double radius = 2.0;
};

// Adds the (weighted) gradient of eigenvalue `which` of the covariance of
// `points` to g and returns that eigenvalue.
double eigen_term(const Vec& x, const std::vector<int>& points, int which, double weight, Vec& g) {
  Eigen::Vector3d c = Eigen::Vector3d::Zero();
  for (int p : points) c += x.segment<3>(3 * (p - 1));
  c /= static_cast<double>(points.size());
  Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
  for (int p : points) {
    const Eigen::Vector3d d = x.segment<3>(3 * (p - 1)) - c;
    cov += d * d.transpose();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es;
  es.computeDirect(cov);
  const double lambda = std::max(0.0, es.eigenvalues()[which]);
  if (weight != 0) {
    const Eigen::Vector3d u = es.eigenvectors().col(which);
    for (int p : points) g.segment<3>(3 * (p - 1)) += weight * 2.0 * u.dot(x.segment<3>(3 * (p - 1)) - c) * u;
  }
  return lambda;
}

// Hinge keeping eigenvalue `which` above target^2; normalized to [0, 1].
double eigen_hinge(const Vec& x, const std::vector<int>& points, int which, double target, Vec& g) {
  const double t2 = target * target;
  const double lambda = eigen_term(x, points, which, 0.0, g);
  if (lambda >= t2) return 0;
  const double h = (t2 - lambda) / t2;
  eigen_term(x, points, which, -2.0 * h / t2, g);
  return h * h;
}

double objective(const Problem& pr, const Vec& x, Vec& g) {
  g.setZero(x.size());
  double f = 0;
  for (const auto& plane : pr.planes) {
    f += eigen_term(x, plane, 0, 1.0, g);
    f += eigen_hinge(x, plane, 1, pr.flat_target, g);
  }
  for (const auto& u : pr.plane_unions) f += eigen_hinge(x, u, 0, pr.flat_target, g);
  for (const auto& u : pr.line_unions) f += eigen_hinge(x, u, 1, pr.flat_target, g);
  for (int i = 0; i < pr.n; ++i) {
    for (int j = i + 1; j < pr.n; ++j) {
      const Eigen::Vector3d d = x.segment<3>(3 * i) - x.segment<3>(3 * j);
      const double len = d.norm();
      if (len >= pr.sep_target) continue;
      const double h = (pr.sep_target - len) / pr.sep_target;
      f += h * h;
      if (len > 0) {
        const Eigen::Vector3d grad = (-2.0 * h / pr.sep_target / len) * d;
        g.segment<3>(3 * i) += grad;
        g.segment<3>(3 * j) -= grad;
      }
    }
    const double r = x.segment<3>(3 * i).norm();
    if (r > pr.radius) {
      f += (r - pr.radius) * (r - pr.radius);
      g.segment<3>(3 * i) += 2.0 * (r - pr.radius) / r * x.segment<3>(3 * i);
    }
  }
  return f;
}

// Limited-memory BFGS with Armijo backtracking.
double minimize(const Problem& pr, Vec& x, int max_iterations) {
  constexpr int kMemory = 10;
  std::vector<Vec> s_hist, y_hist;
  std::vector<double> rho;
  Vec g(x.size()), g_new(x.size());
  double f = objective(pr, x, g);
  for (int it = 0; it < max_iterations && f > 1e-18; ++it) {
    if (g.lpNorm<Eigen::Infinity>() < 1e-16) break;
    Vec d = -g;
    std::vector<double> alpha(s_hist.size());
    for (int i = static_cast<int>(s_hist.size()) - 1; i >= 0; --i) {
      alpha[i] = rho[i] * s_hist[i].dot(d);
      d -= alpha[i] * y_hist[i];
    }
    if (!s_hist.empty()) d *= s_hist.back().dot(y_hist.back()) / y_hist.back().squaredNorm();
    for (std::size_t i = 0; i < s_hist.size(); ++i) d += (alpha[i] - rho[i] * y_hist[i].dot(d)) * s_hist[i];
    double slope = g.dot(d);
    if (slope >= 0) {
      s_hist.clear();
      y_hist.clear();
      rho.clear();
      d = -g;
      slope = g.dot(d);
    }
    double step = s_hist.empty() ? std::min(1.0, 0.1 / g.norm()) : 1.0;
    Vec x_new;
    double f_new = f;
    bool accepted = false;
    for (int k = 0; k < 50; ++k, step *= 0.5) {
      x_new = x + step * d;
      f_new = objective(pr, x_new, g_new);
      if (f_new <= f + 1e-4 * step * slope) {
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      if (s_hist.empty()) break;
      s_hist.clear();
      y_hist.clear();
      rho.clear();
      continue;
    }
    Vec s = x_new - x;
    Vec y = g_new - g;
    const double sy = s.dot(y);
    if (sy > 1e-20 * s.norm() * y.norm()) {
      if (static_cast<int>(s_hist.size()) == kMemory) {
        s_hist.erase(s_hist.begin());
        y_hist.erase(y_hist.begin());
        rho.erase(rho.begin());
      }
      s_hist.push_back(std::move(s));
      y_hist.push_back(std::move(y));
      rho.push_back(1.0 / sy);
    }
    x = std::move(x_new);
    g = g_new;
    f = f_new;
  }
  return f;
}

Vec random_start(int n, std::uint64_t seed, int restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  Vec x(3 * n);
  for (int i = 0; i < n; ++i) {
    Eigen::Vector3d p;
    do {
      p << unit(rng), unit(rng), unit(rng);
    } while (p.squaredNorm() > 1.0);
    x.segment<3>(3 * i) = p;
  }
  return x;
}

Embedding to_embedding(const Vec& x) {
  Embedding e;
  e.coords.resize(x.size() / 3);
  for (std::size_t i = 0; i < e.coords.size(); ++i) {
    e.coords[i] = {x[3 * i], x[3 * i + 1], x[3 * i + 2]};
  }
  return e;
}

}  // namespace

RealizeResult realize(const Configuration& config, const RealizeOptions& options) {
  if (config.order() != 2) throw Error(ErrorCode::invalid_argument, "realization needs an order-2 configuration");
  validate(config, true);
  if (options.restarts < 1) throw Error(ErrorCode::invalid_argument, "at least one restart is required");

  Problem pr;
  pr.n = config.num_points();
  pr.planes = config.planes();
  for (std::size_t e = 0; e < pr.planes.size(); ++e) {
    for (std::size_t f = e + 1; f < pr.planes.size(); ++f) pr.plane_unions.push_back(merged(pr.planes[e], pr.planes[f]));
  }
  const auto lines = intersection_lines(config);
  for (std::size_t a = 0; a < lines.size(); ++a) {
    for (std::size_t b = a + 1; b < lines.size(); ++b) pr.line_unions.push_back(merged(lines[a], lines[b]));
  }
  pr.sep_target = std::max(pr.sep_target, 20 * options.min_separation);
  pr.flat_target = std::max(pr.flat_target, 20 * options.min_noncollinear);

  const int restarts = options.restarts;
  std::vector<std::optional<Embedding>> found(restarts);
  std::vector<double> values(restarts, kInf);
  std::atomic<int> next{0};
  std::atomic<int> best{restarts};
  std::atomic<int> ran{0};
  auto worker = [&] {
    for (int r = next++; r < restarts; r = next++) {
      if (r > best.load()) continue;
      Vec x = random_start(pr.n, options.seed, r);
      values[r] = minimize(pr, x, options.max_iterations);
      ++ran;
      Embedding e = to_embedding(x);
      if (verify_embedding(config, e, options.tolerance, options.min_separation, options.min_noncollinear).certified) {
        found[r] = std::move(e);
        int cur = best.load();
        while (r < cur && !best.compare_exchange_weak(cur, r)) {
        }
      }
    }
  };
  const int jobs = std::max(1, std::min(options.jobs, restarts));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  RealizeResult result;
  result.restarts_run = ran.load();
  result.best_objective = *std::min_element(values.begin(), values.end());
  if (best.load() < restarts) {
    result.restart = best.load();
    result.embedding = std::move(found[result.restart]);
    result.best_objective = values[result.restart];
  }
  return result;
}

std::string serialize_embedding(const Embedding& embedding) {
  std::string out;
  char buf[64];
  for (std::size_t i = 0; i < embedding.coords.size(); ++i) {
    out += "point " + std::to_string(i + 1);
    for (double v : embedding.coords[i]) {
      auto res = std::to_chars(buf, buf + sizeof buf, v);
      out += ' ';
      out.append(buf, res.ptr);
    }
    out += '\n';
  }
  return out;
}

Embedding parse_embedding(const std::string& text, int num_points) {
  Embedding e;
  e.coords.resize(num_points);
  std::vector<char> seen(num_points, 0);
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& msg) {
    throw Error(ErrorCode::parse, "line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string keyword;
    if (!(fields >> keyword)) continue;
    if (keyword != "point") fail("expected 'point', got '" + keyword + "'");
    std::string tokens[4];
    for (auto& tok : tokens) {
      if (!(fields >> tok)) fail("expected 'point <i> <x> <y> <z>'");
    }
    std::string extra;
    if (fields >> extra) fail("trailing text '" + extra + "'");
    int index = 0;
    auto [p, ec] = std::from_chars(tokens[0].data(), tokens[0].data() + tokens[0].size(), index);
    if (ec != std::errc() || p != tokens[0].data() + tokens[0].size()) fail("bad point index '" + tokens[0] + "'");
    if (index < 1 || index > num_points) fail("point " + tokens[0] + " out of range 1.." + std::to_string(num_points));
    if (seen[index - 1]) fail("point " + tokens[0] + " given twice");
    seen[index - 1] = 1;
    for (int k = 0; k < 3; ++k) {
      const auto& tok = tokens[k + 1];
      double v = 0;
      auto [q, ec2] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec2 != std::errc() || q != tok.data() + tok.size() || !std::isfinite(v)) fail("bad coordinate '" + tok + "'");
      e.coords[index - 1][k] = v;
    }
  }
  for (int i = 0; i < num_points; ++i) {
    if (!seen[i]) throw Error(ErrorCode::parse, "point " + std::to_string(i + 1) + " has no coordinates");
  }
  return e;
}

Embedding read_embedding_file(const std::string& path, int num_points) {
  return parse_embedding(read_text_file(path), num_points);
}

Embedding rigid_motion(const Embedding& embedding, const std::array<double, 9>& rotation, const Point3& shift) {
  Embedding out = embedding;
  for (auto& c : out.coords) {
    const Point3 p = c;
    for (int r = 0; r < 3; ++r) {
      c[r] = rotation[3 * r] * p[0] + rotation[3 * r + 1] * p[1] + rotation[3 * r + 2] * p[2] + shift[r];
    }
  }
  return out;
}

}  // namespace hocfg
