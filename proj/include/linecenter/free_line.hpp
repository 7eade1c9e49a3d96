#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "linecenter/approx.hpp"
#include "linecenter/fixed_line.hpp"
#include "linecenter/geometry.hpp"
#include "linecenter/instance.hpp"
#include "linecenter/piercing.hpp"

// Centers on a completely free line (L2 only). The decision at radius r only
// needs to examine lines in extremal contact with the radius-r disks: a
// feasible line can be translated and rotated without combinatorial change
// until it is tangent to two disks, or passes through a boundary
// intersection and is tangent to a disk, or passes through two boundary
// intersections.

namespace linecenter {

enum class CandidateLineKind { bitangent, intersection_tangent, double_intersection };

struct CandidateLine {
  Line line;
  CandidateLineKind kind{CandidateLineKind::bitangent};
  std::vector<int> support;  // point indices generating the line
};

namespace detail {

inline void append_bitangents(const std::vector<Point>& pts, double r,
                              std::vector<CandidateLine>& out) {
  const int n = static_cast<int>(pts.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Point delta = pts[j] - pts[i];
      const double d = norm(delta);
      if (d <= kAbsTol) continue;
      const double theta = normalize_orientation(std::atan2(delta.y, delta.x));
      const Line axis{pts[i], theta};
      const Point nrm = axis.normal();
      out.push_back({Line{pts[i] + r * nrm, theta}, CandidateLineKind::bitangent, {i, j}});
      out.push_back({Line{pts[i] + (-r) * nrm, theta}, CandidateLineKind::bitangent, {i, j}});
      const double sin_phi = 2.0 * r / d;
      if (sin_phi <= 1.0 + tol_for(1.0)) {
        const double phi = std::asin(std::clamp(sin_phi, 0.0, 1.0));
        const Point mid = pts[i] + 0.5 * delta;
        out.push_back({Line{mid, normalize_orientation(theta + phi)},
                       CandidateLineKind::bitangent,
                       {i, j}});
        out.push_back({Line{mid, normalize_orientation(theta - phi)},
                       CandidateLineKind::bitangent,
                       {i, j}});
      }
    }
  }
}

struct BoundaryCrossing {
  Point p;
  int i;
  int j;
};

inline std::vector<BoundaryCrossing> boundary_crossings(const std::vector<Point>& pts,
                                                        double r) {
  std::vector<BoundaryCrossing> out;
  const int n = static_cast<int>(pts.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (const Point& q : circle_circle_intersections(pts[i], r, pts[j], r)) {
        out.push_back({q, i, j});
      }
    }
  }
  return out;
}

inline void append_point_tangents(const std::vector<Point>& pts, double r,
                                  const std::vector<BoundaryCrossing>& crossings,
                                  std::vector<CandidateLine>& out) {
  const int n = static_cast<int>(pts.size());
  for (const BoundaryCrossing& bc : crossings) {
    for (int t = 0; t < n; ++t) {
      const Point w = pts[t] - bc.p;
      const double dw = norm(w);
      if (dw < r - tol_for(r)) continue;  // crossing strictly inside the disk
      const double beta = std::atan2(w.y, w.x);
      if (dw <= kAbsTol) continue;
      const double alpha = std::asin(std::clamp(r / dw, 0.0, 1.0));
      out.push_back({Line{bc.p, normalize_orientation(beta + alpha)},
                     CandidateLineKind::intersection_tangent,
                     {bc.i, bc.j, t}});
      out.push_back({Line{bc.p, normalize_orientation(beta - alpha)},
                     CandidateLineKind::intersection_tangent,
                     {bc.i, bc.j, t}});
    }
  }
}

inline void append_double_crossings(const std::vector<BoundaryCrossing>& crossings,
                                    std::vector<CandidateLine>& out) {
  for (std::size_t a = 0; a < crossings.size(); ++a) {
    for (std::size_t b = a + 1; b < crossings.size(); ++b) {
      if (norm(crossings[b].p - crossings[a].p) <= kAbsTol) continue;
      out.push_back({Line::through(crossings[a].p, crossings[b].p),
                     CandidateLineKind::double_intersection,
                     {crossings[a].i, crossings[a].j, crossings[b].i, crossings[b].j}});
    }
  }
}

/// Drop near-identical lines (same orientation within 1e-9 and same signed
/// offset within 1e-9), keeping the first occurrence so the deterministic
/// candidate order is preserved.
inline void dedup_lines(std::vector<CandidateLine>& cands) {
  struct Key {
    double theta;
    double offset;
    std::size_t idx;
  };
  std::vector<Key> keys;
  keys.reserve(cands.size());
  for (std::size_t i = 0; i < cands.size(); ++i) {
    const Line& l = cands[i].line;
    keys.push_back({l.theta, cross(l.dir(), l.anchor), i});
  }
  std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    if (a.theta != b.theta) return a.theta < b.theta;
    if (a.offset != b.offset) return a.offset < b.offset;
    return a.idx < b.idx;
  });
  std::vector<bool> drop(cands.size(), false);
  for (std::size_t s = 1; s < keys.size(); ++s) {
    const Key prev = keys[s - 1];
    const Key cur = keys[s];
    if (cur.theta - prev.theta <= 1e-9 && std::abs(cur.offset - prev.offset) <= 1e-9) {
      if (prev.idx <= cur.idx) {
        drop[cur.idx] = true;
        keys[s] = prev;  // keep comparing against the survivor
      } else {
        drop[prev.idx] = true;
      }
    }
  }
  std::vector<CandidateLine> kept;
  kept.reserve(cands.size());
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (!drop[i]) kept.push_back(std::move(cands[i]));
  }
  cands = std::move(kept);
}

}  // namespace detail

/// All extremal candidate lines for the decision at radius r, in the
/// deterministic order bitangents, intersection-tangents, then lines through
/// two boundary intersections; near-duplicates removed.
inline std::vector<CandidateLine> candidate_lines(const ProblemInstance& inst, double r) {
  validate(inst);
  if (inst.metric != Metric::L2) {
    throw std::invalid_argument("candidate_lines: metric must be L2");
  }
  if (r < 0.0) return {};
  const std::vector<Point> pts = dedup_points(inst.points);
  std::vector<CandidateLine> out;
  detail::append_bitangents(pts, r, out);
  const std::vector<detail::BoundaryCrossing> crossings = detail::boundary_crossings(pts, r);
  detail::append_point_tangents(pts, r, crossings, out);
  detail::append_double_crossings(crossings, out);
  detail::dedup_lines(out);
  return out;
}

/// Decision for the free-line problem: feasible iff some candidate line
/// meets all n disks and has piercing number at most k. Returns the first
/// feasible witness in candidate order.
inline std::optional<CoverSolution> decide_free_line(const ProblemInstance& inst,
                                                     double r) {
  validate(inst);
  if (inst.metric != Metric::L2) {
    throw std::invalid_argument("decide_free_line: metric must be L2");
  }
  if (r < 0.0) return std::nullopt;
  const std::vector<Point> pts = dedup_points(inst.points);
  if (pts.size() <= 1) {
    const Line line{pts.empty() ? Point{0.0, 0.0} : pts[0], 0.0};
    return CoverSolution{r, line, detail::centers_from_piercing(line, {0.0}, inst.k), true};
  }
  const double meet_tol = tol_for(std::max(r, 1.0));
  for (const CandidateLine& cl : candidate_lines(inst, r)) {
    bool meets_all = true;
    for (const Point& p : pts) {
      if (point_line_distance(p, cl.line, Metric::L2) > r + meet_tol) {
        meets_all = false;
        break;
      }
    }
    if (!meets_all) continue;
    std::vector<Interval> intervals;
    intervals.reserve(pts.size());
    bool ok = true;
    for (const Point& p : pts) {
      const Interval iv = disk_line_interval(p, r, cl.line, Metric::L2);
      if (iv.is_empty()) {
        ok = false;
        break;
      }
      intervals.push_back(iv);
    }
    if (!ok) continue;
    const PiercingResult pierce = min_piercing(intervals);
    if (pierce.count <= static_cast<std::size_t>(inst.k)) {
      return CoverSolution{r, cl.line,
                           detail::centers_from_piercing(cl.line, pierce.points, inst.k),
                           true};
    }
  }
  return std::nullopt;
}

/// Minimum radius over all lines, certified to tol*(1+r): bisection on the
/// monotone free-line decision, bracketed below by half the width and above
/// by the sqrt(2)-factor radius.
inline CoverSolution solve_free_line(const ProblemInstance& inst, double tol = kRelTol) {
  validate(inst);
  if (inst.metric != Metric::L2) {
    throw std::invalid_argument("solve_free_line: metric must be L2");
  }
  if (!(tol > 0.0)) throw std::invalid_argument("solve_free_line: tol must be > 0");
  const std::vector<Point> pts = dedup_points(inst.points);
  if (pts.size() <= 1) {
    const Line line{pts.empty() ? Point{0.0, 0.0} : pts[0], 0.0};
    return CoverSolution{0.0, line, detail::centers_from_piercing(line, {0.0}, inst.k),
                         true};
  }
  const double lo0 = 0.5 * width_line(pts).width;
  if (auto w = decide_free_line(inst, lo0)) return *w;
  double hi = constant_factor(inst).solution.radius;
  std::optional<CoverSolution> witness = decide_free_line(inst, hi);
  int grow = 0;
  while (!witness) {
    hi = 2.0 * hi + kAbsTol;
    witness = decide_free_line(inst, hi);
    if (++grow > 64) throw std::runtime_error("solve_free_line: no bracket");
  }
  double lo = lo0;
  for (int it = 0; it < 200 && hi - lo > tol * (1.0 + hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (auto w = decide_free_line(inst, mid)) {
      hi = mid;
      witness = std::move(w);
    } else {
      lo = mid;
    }
  }
  return *witness;
}

}  // namespace linecenter
