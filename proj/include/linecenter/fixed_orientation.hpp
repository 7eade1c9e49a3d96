#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "linecenter/fixed_line.hpp"
#include "linecenter/geometry.hpp"
#include "linecenter/instance.hpp"
#include "linecenter/piercing.hpp"

// Centers on some line of fixed orientation theta. Lines of that orientation
// are parameterized by their normal offset c (the line through c * normal);
// the decision sweeps the offset, the optimization bisects the radius. The
// metric stays in the instance coordinates for every orientation: the metric
// distance from a point to such a line is gamma * |c - o| where o is the
// point's normal offset and gamma depends only on theta and the metric.

namespace linecenter {

enum class SweepEventKind { start, end, circle_pair };

struct SweepEvent {
  double y{0.0};  // normal offset of the event line
  SweepEventKind kind{SweepEventKind::circle_pair};
  std::array<int, 2> ids{-1, -1};
};

struct SweepResult {
  double y_lo{0.0};  // topmost bottom of the balls: max_i(o_i) - r/gamma
  double y_hi{0.0};  // bottommost top of the balls:  min_i(o_i) + r/gamma
  std::vector<SweepEvent> events;
};

namespace detail {

/// Metric distance per unit of normal offset for lines of orientation theta.
inline double normal_gain(double theta, Metric m) {
  const Line base{{0.0, 0.0}, theta};
  return point_line_distance(base.normal(), base, m);
}

// Under L1/Linf the interval endpoints on the line at offset c are minima /
// maxima of linear functions of c; their pairwise crossings are the only
// offsets where the endpoint order can change. Each piece comes from one
// slice constraint: endpoint(c) = (r - w*c - f) / s.
struct OffsetPiece {
  double s;  // slice coefficient of t (nonzero)
  double w;  // slice constant's dependence on the offset
  double f;  // slice constant at offset 0
};

inline void offset_piece_crossings(const OffsetPiece& p1, const OffsetPiece& p2, double r,
                                   std::vector<double>& out) {
  const double denom = p1.s * p2.w - p2.s * p1.w;
  if (denom == 0.0) return;
  const double c = (p1.s * (r - p2.f) - p2.s * (r - p1.f)) / denom;
  if (std::isfinite(c)) out.push_back(c);
}

}  // namespace detail

/// Sweep events for the fixed-orientation decision at radius r: the normal
/// offsets at which two ball boundaries cross, clipped to [y_lo, y_hi] and
/// sorted. The piercing number is constant between consecutive events.
inline SweepResult sweep_events(const ProblemInstance& inst, double r, double theta) {
  validate(inst);
  const double th = normalize_orientation(theta);
  const Line base{{0.0, 0.0}, th};
  const Point nrm = base.normal();
  const std::vector<Point> pts = dedup_points(inst.points);
  SweepResult res;
  if (pts.empty()) return res;
  const double gain = detail::normal_gain(th, inst.metric);
  double o_min = dot(pts[0], nrm), o_max = dot(pts[0], nrm);
  for (const Point& p : pts) {
    const double o = dot(p, nrm);
    o_min = std::min(o_min, o);
    o_max = std::max(o_max, o);
  }
  res.y_lo = o_max - r / gain;
  res.y_hi = o_min + r / gain;
  if (res.y_lo > res.y_hi) return res;

  std::vector<SweepEvent> events;
  const int n = static_cast<int>(pts.size());
  if (inst.metric == Metric::L2) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        for (const Point& q : circle_circle_intersections(pts[i], r, pts[j], r)) {
          const double c = dot(q, nrm);
          if (c >= res.y_lo - kAbsTol && c <= res.y_hi + kAbsTol) {
            events.push_back({std::clamp(c, res.y_lo, res.y_hi),
                              SweepEventKind::circle_pair,
                              {i, j}});
          }
        }
      }
    }
  } else {
    // Slice constants vary linearly with the offset; anchors 0 and nrm give
    // the linear coefficients of each endpoint piece.
    std::vector<std::vector<detail::OffsetPiece>> pieces(pts.size());
    for (int i = 0; i < n; ++i) {
      const auto at0 = detail::slice_constraints(pts[i], Line{{0.0, 0.0}, th}, inst.metric);
      const auto at1 = detail::slice_constraints(pts[i], Line{nrm, th}, inst.metric);
      for (std::size_t s_idx = 0; s_idx < at0.size(); ++s_idx) {
        if (at0[s_idx].c == 0.0) continue;  // offset-independent feasibility threshold
        pieces[static_cast<std::size_t>(i)].push_back(detail::OffsetPiece{
            at0[s_idx].c, at1[s_idx].e - at0[s_idx].e, at0[s_idx].e});
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        std::vector<double> cs;
        for (const auto& p1 : pieces[static_cast<std::size_t>(i)]) {
          for (const auto& p2 : pieces[static_cast<std::size_t>(j)]) {
            detail::offset_piece_crossings(p1, p2, r, cs);
          }
        }
        for (double c : cs) {
          if (c >= res.y_lo - kAbsTol && c <= res.y_hi + kAbsTol) {
            events.push_back({std::clamp(c, res.y_lo, res.y_hi),
                              SweepEventKind::circle_pair,
                              {i, j}});
          }
        }
      }
    }
  }
  std::sort(events.begin(), events.end(),
            [](const SweepEvent& a, const SweepEvent& b) { return a.y < b.y; });
  for (const SweepEvent& e : events) {
    if (res.events.empty() || e.y - res.events.back().y > 1e-12) res.events.push_back(e);
  }
  return res;
}

/// Decision at radius r for lines of orientation theta: evaluates the
/// piercing number at every event offset and at one representative per
/// event-free gap, returning the first feasible witness (smallest offset).
inline std::optional<CoverSolution> decide_fixed_orientation(const ProblemInstance& inst,
                                                             double r, double theta) {
  validate(inst);
  if (r < 0.0) return std::nullopt;
  const double th = normalize_orientation(theta);
  const std::vector<Point> pts = dedup_points(inst.points);
  const Point nrm = Line{{0.0, 0.0}, th}.normal();
  if (pts.empty()) {
    Line line{{0.0, 0.0}, th};
    return CoverSolution{r, line, detail::centers_from_piercing(line, {}, inst.k), true};
  }
  const ProblemInstance work{pts, inst.k, inst.metric};
  const SweepResult sweep = sweep_events(work, r, th);
  double y_lo = sweep.y_lo, y_hi = sweep.y_hi;
  if (y_lo > y_hi) {
    if (y_lo - y_hi > 2.0 * tol_for(std::max(std::abs(y_lo), r))) return std::nullopt;
    y_lo = y_hi = 0.5 * (y_lo + y_hi);
  }
  std::vector<double> ys{y_lo, y_hi};
  for (const SweepEvent& e : sweep.events) ys.push_back(e.y);
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end(),
                       [](double a, double b) { return b - a <= 1e-12; }),
           ys.end());
  std::vector<double> reps;
  reps.reserve(2 * ys.size());
  for (std::size_t i = 0; i < ys.size(); ++i) {
    reps.push_back(ys[i]);
    if (i + 1 < ys.size()) reps.push_back(0.5 * (ys[i] + ys[i + 1]));
  }
  for (double c : reps) {
    const Line line{c * nrm, th};
    std::vector<Interval> intervals;
    intervals.reserve(pts.size());
    bool ok = true;
    for (const Point& p : pts) {
      const Interval iv = disk_line_interval(p, r, line, inst.metric);
      if (iv.is_empty()) {
        ok = false;
        break;
      }
      intervals.push_back(iv);
    }
    if (!ok) continue;
    const PiercingResult pierce = min_piercing(intervals);
    if (pierce.count <= static_cast<std::size_t>(inst.k)) {
      return CoverSolution{r, line,
                           detail::centers_from_piercing(line, pierce.points, inst.k),
                           true};
    }
  }
  return std::nullopt;
}

/// Minimum radius over all lines of the given orientation, certified to
/// tol*(1+r): bisection on the monotone decision, bracketed below by the
/// metric cost of the mid-offset line and above by a one-disk cover. Under
/// Linf with an axis-parallel orientation the optimal line is exactly the
/// midline of the extreme offsets, solved by the fixed-line solver there.
inline CoverSolution solve_fixed_orientation(const ProblemInstance& inst, double theta,
                                             double tol = kRelTol) {
  validate(inst);
  if (!(tol > 0.0)) throw std::invalid_argument("solve_fixed_orientation: tol must be > 0");
  const double th = normalize_orientation(theta);
  const std::vector<Point> pts = dedup_points(inst.points);
  if (pts.empty()) {
    Line line{{0.0, 0.0}, th};
    return CoverSolution{0.0, line, detail::centers_from_piercing(line, {}, inst.k), true};
  }
  const Line base{{0.0, 0.0}, th};
  const Point nrm = base.normal();
  double o_min = dot(pts[0], nrm), o_max = dot(pts[0], nrm);
  double t_min = base.project(pts[0]), t_max = t_min;
  for (const Point& p : pts) {
    const double o = dot(p, nrm);
    o_min = std::min(o_min, o);
    o_max = std::max(o_max, o);
    const double t = base.project(p);
    t_min = std::min(t_min, t);
    t_max = std::max(t_max, t);
  }
  if (inst.metric == Metric::Linf && th == 0.0) {
    const double y0 = 0.5 * (o_min + o_max);
    return solve_fixed_line(ProblemInstance{pts, inst.k, inst.metric},
                            Line{{0.0, y0}, 0.0});
  }

  const double gain = detail::normal_gain(th, inst.metric);
  const double lo0 = 0.5 * gain * (o_max - o_min);
  if (auto w = decide_fixed_orientation(inst, lo0, th)) return *w;
  const Point mid = (0.5 * (o_min + o_max)) * nrm + (0.5 * (t_min + t_max)) * base.dir();
  double hi = 0.0;
  for (const Point& p : pts) hi = std::max(hi, distance(mid, p, inst.metric));
  std::optional<CoverSolution> witness = decide_fixed_orientation(inst, hi, th);
  int grow = 0;
  while (!witness) {
    hi = 2.0 * hi + kAbsTol;
    witness = decide_fixed_orientation(inst, hi, th);
    if (++grow > 64) throw std::runtime_error("solve_fixed_orientation: no bracket");
  }
  double lo = lo0;
  for (int it = 0; it < 200 && hi - lo > tol * (1.0 + hi); ++it) {
    const double mid_r = 0.5 * (lo + hi);
    if (auto w = decide_fixed_orientation(inst, mid_r, th)) {
      hi = mid_r;
      witness = std::move(w);
    } else {
      lo = mid_r;
    }
  }
  return *witness;
}

}  // namespace linecenter
