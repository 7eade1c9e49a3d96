#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "linecenter/geometry.hpp"

namespace linecenter {

struct ProblemInstance {
  std::vector<Point> points;
  int k{1};
  Metric metric{Metric::L2};
};

struct CoverSolution {
  double radius{0.0};
  Line line;
  std::vector<Point> centers;  // k or fewer points on `line`
  bool feasible{true};
};

inline void validate(const ProblemInstance& inst) {
  if (inst.k < 1) throw std::invalid_argument("instance: k must be >= 1");
  for (const Point& p : inst.points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw std::invalid_argument("instance: coordinates must be finite");
    }
  }
}

/// Coincident input points are accepted and merged before solving.
inline std::vector<Point> dedup_points(const std::vector<Point>& pts) {
  std::vector<Point> out;
  out.reserve(pts.size());
  for (const Point& p : pts) {
    bool seen = false;
    for (const Point& q : out) {
      if (p == q) {
        seen = true;
        break;
      }
    }
    if (!seen) out.push_back(p);
  }
  return out;
}

/// Checks that the solution's centers lie on its line and that every input
/// point is within radius (plus tolerance) of some center under the
/// instance metric.
inline bool covers(const ProblemInstance& inst, const CoverSolution& sol,
                   double tol_rel = kRelTol) {
  const double tol = kAbsTol + tol_rel * (1.0 + std::abs(sol.radius));
  for (const Point& c : sol.centers) {
    if (point_line_distance(c, sol.line, Metric::L2) > tol) return false;
  }
  for (const Point& p : inst.points) {
    if (sol.centers.empty()) return false;
    double best = std::numeric_limits<double>::infinity();
    for (const Point& c : sol.centers) {
      best = std::min(best, distance(p, c, inst.metric));
    }
    if (best > sol.radius + tol) return false;
  }
  return true;
}

}  // namespace linecenter
