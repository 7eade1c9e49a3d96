#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "linecenter/fixed_line.hpp"
#include "linecenter/geometry.hpp"
#include "linecenter/instance.hpp"

namespace linecenter {

enum class ApproxBranch { sampled_lines, constant_factor, skinny, fat };

inline const char* branch_name(ApproxBranch b) {
  switch (b) {
    case ApproxBranch::sampled_lines: return "sampled_lines";
    case ApproxBranch::constant_factor: return "constant_factor";
    case ApproxBranch::skinny: return "skinny";
    case ApproxBranch::fat: return "fat";
  }
  return "sampled_lines";
}

struct ApproxReport {
  CoverSolution solution;
  double epsilon{0.0};
  double guarantee{1.0};  // claimed factor: 1+eps, sqrt(2), or 1 for exact degenerate cases
  ApproxBranch branch{ApproxBranch::sampled_lines};
  int sample_count{0};  // offsets, slopes or angles evaluated
};

/// (1+eps)-approximation for a fixed orientation: sample ceil(2/eps)+1
/// equally spaced normal offsets spanning the extent (endpoints included)
/// and solve each fixed line exactly. The internal spacing uses eps/2 so
/// that the public guarantee is exactly 1+eps; a zero normal extent is
/// solved exactly on the spanning line itself.
inline ApproxReport approx_fixed_orientation(const ProblemInstance& inst, double theta,
                                             double eps) {
  validate(inst);
  if (!(eps > 0.0)) throw std::invalid_argument("approx_fixed_orientation: eps must be > 0");
  const double th = normalize_orientation(theta);
  const std::vector<Point> pts = dedup_points(inst.points);
  if (pts.empty()) {
    Line line{{0.0, 0.0}, th};
    return {CoverSolution{0.0, line, detail::centers_from_piercing(line, {}, inst.k), true},
            eps, 1.0, ApproxBranch::sampled_lines, 0};
  }
  const ProblemInstance work{pts, inst.k, inst.metric};
  const Line base{{0.0, 0.0}, th};
  const Point nrm = base.normal();
  double o_min = dot(pts[0], nrm), o_max = o_min;
  for (const Point& p : pts) {
    const double o = dot(p, nrm);
    o_min = std::min(o_min, o);
    o_max = std::max(o_max, o);
  }
  const double h = o_max - o_min;
  if (h == 0.0) {
    CoverSolution sol = solve_fixed_line(work, Line{o_min * nrm, th});
    return {std::move(sol), eps, 1.0, ApproxBranch::sampled_lines, 1};
  }
  const int count = static_cast<int>(std::ceil(2.0 / eps)) + 1;
  CoverSolution best;
  bool have = false;
  for (int j = 0; j < count; ++j) {
    const double c = o_min + h * static_cast<double>(j) / (count - 1);
    CoverSolution sol = solve_fixed_line(work, Line{c * nrm, th});
    if (!have || sol.radius < best.radius) {
      best = std::move(sol);
      have = true;
    }
  }
  return {std::move(best), eps, 1.0 + eps, ApproxBranch::sampled_lines, count};
}

struct KCenters1D {
  double radius{0.0};
  std::vector<double> centers;  // one per greedy block, ascending
};

/// 1-D k-center on sorted coordinates: minimal r such that k segments of
/// length 2r cover them. Bisection on the greedy left-to-right cover,
/// snapped to the half-gap (x_j - x_i)/2 that realizes the optimum.
inline KCenters1D kcenter_1d(const std::vector<double>& xs, int k) {
  if (k < 1) throw std::invalid_argument("kcenter_1d: k must be >= 1");
  if (xs.empty()) throw std::invalid_argument("kcenter_1d: xs must be nonempty");
  if (!std::is_sorted(xs.begin(), xs.end())) {
    throw std::invalid_argument("kcenter_1d: xs must be sorted");
  }
  auto blocks_needed = [&](double r) {
    const double reach = 2.0 * r;
    int blocks = 0;
    std::size_t i = 0;
    while (i < xs.size()) {
      ++blocks;
      const double start = xs[i];
      while (i < xs.size() && xs[i] - start <= reach) ++i;
    }
    return blocks;
  };
  auto centers_at = [&](double r) {
    std::vector<double> centers;
    const double reach = 2.0 * r;
    std::size_t i = 0;
    while (i < xs.size()) {
      const double start = xs[i];
      centers.push_back(start + r);
      while (i < xs.size() && xs[i] - start <= reach) ++i;
    }
    return centers;
  };
  if (blocks_needed(0.0) <= k) return {0.0, centers_at(0.0)};
  double lo = 0.0;
  double hi = 0.5 * (xs.back() - xs.front());
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (blocks_needed(mid) <= k) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  double snapped = hi;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      const double v = 0.5 * (xs[j] - xs[i]);
      if (v > lo && v <= hi && v < best && blocks_needed(v) <= k) best = v;
    }
  }
  if (std::isfinite(best)) snapped = best;
  return {snapped, centers_at(snapped)};
}

/// sqrt(2)-factor approximation for the free-line problem: project onto the
/// width mid-line, solve the 1-D k-center there, and inflate the radius by
/// the geometry of the width slab.
inline ApproxReport constant_factor(const ProblemInstance& inst) {
  validate(inst);
  if (inst.metric != Metric::L2) {
    throw std::invalid_argument("constant_factor: metric must be L2");
  }
  const double kSqrt2 = std::sqrt(2.0);
  const std::vector<Point> pts = dedup_points(inst.points);
  if (pts.empty()) {
    Line line{{0.0, 0.0}, 0.0};
    return {CoverSolution{0.0, line, detail::centers_from_piercing(line, {}, inst.k), true},
            0.0, kSqrt2, ApproxBranch::constant_factor, 0};
  }
  const WidthResult wr = width_line(pts);
  std::vector<double> ts;
  ts.reserve(pts.size());
  for (const Point& p : pts) ts.push_back(wr.line.project(p));
  std::sort(ts.begin(), ts.end());
  const KCenters1D kc = kcenter_1d(ts, inst.k);
  const double r_c = kc.radius <= 0.5 * wr.width ? wr.width / kSqrt2 : kSqrt2 * kc.radius;
  CoverSolution sol{r_c, wr.line,
                    detail::centers_from_piercing(wr.line, kc.centers, inst.k), true};
  return {std::move(sol), 0.0, kSqrt2, ApproxBranch::constant_factor, 0};
}

/// (1+eps)-approximation for a completely free line. Skinny inputs
/// (diameter >= 3*r_c) sample O(1/eps) slopes around the diameter direction;
/// fat inputs sample O(1/eps) angles over [0, pi). Each orientation is
/// handled by approx_fixed_orientation at factor 1+eps/3. Zero-width inputs
/// are solved exactly on the spanning line.
inline ApproxReport approx_free_line(const ProblemInstance& inst, double eps) {
  validate(inst);
  if (inst.metric != Metric::L2) {
    throw std::invalid_argument("approx_free_line: metric must be L2");
  }
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::invalid_argument("approx_free_line: eps must be in (0, 1)");
  }
  const std::vector<Point> pts = dedup_points(inst.points);
  if (pts.empty()) {
    Line line{{0.0, 0.0}, 0.0};
    return {CoverSolution{0.0, line, detail::centers_from_piercing(line, {}, inst.k), true},
            eps, 1.0, ApproxBranch::skinny, 0};
  }
  const WidthResult wr = width_line(pts);
  if (wr.width == 0.0) {
    // Collinear input: projecting any solution onto the spanning line never
    // increases distances, so the 1-D optimum on that line is exact.
    std::vector<double> ts;
    ts.reserve(pts.size());
    for (const Point& p : pts) ts.push_back(wr.line.project(p));
    std::sort(ts.begin(), ts.end());
    const KCenters1D kc = kcenter_1d(ts, inst.k);
    CoverSolution sol{kc.radius, wr.line,
                      detail::centers_from_piercing(wr.line, kc.centers, inst.k), true};
    return {std::move(sol), eps, 1.0, ApproxBranch::skinny, 1};
  }
  const double r_c = constant_factor(inst).solution.radius;
  const DiameterResult dia = diameter(pts);
  ApproxReport out;
  out.epsilon = eps;
  out.guarantee = 1.0 + eps;
  if (dia.diameter >= 3.0 * r_c) {
    out.branch = ApproxBranch::skinny;
    const double lambda = 1.0 / (3.0 * std::sqrt(2.0));
    const double rcs = r_c / dia.diameter;  // r_c after scaling the diameter to 1
    const double slope_step = lambda * eps * rcs;
    const int reach = static_cast<int>(std::floor(6.0 / (lambda * eps)));
    const double phi = std::atan2(dia.b.y - dia.a.y, dia.b.x - dia.a.x);
    bool have = false;
    for (int i = -reach; i <= reach; ++i) {
      const double theta = phi + std::atan(i * slope_step);
      const ApproxReport sub = approx_fixed_orientation(inst, theta, eps / 3.0);
      if (!have || sub.solution.radius < out.solution.radius) {
        out.solution = sub.solution;
        have = true;
      }
    }
    out.sample_count = 2 * reach + 1;
  } else {
    out.branch = ApproxBranch::fat;
    const double lambda = 1.0 / (27.0 * std::sqrt(2.0));
    const int reach = static_cast<int>(std::floor(kPi / (lambda * eps)));
    bool have = false;
    for (int i = 0; i <= reach; ++i) {
      const double theta = i * lambda * eps;
      const ApproxReport sub = approx_fixed_orientation(inst, theta, eps / 3.0);
      if (!have || sub.solution.radius < out.solution.radius) {
        out.solution = sub.solution;
        have = true;
      }
    }
    out.sample_count = reach + 1;
  }
  return out;
}

}  // namespace linecenter
