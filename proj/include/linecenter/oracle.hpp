#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "linecenter/geometry.hpp"
#include "linecenter/instance.hpp"

// Brute-force references used to generate expected values and to power
// property tests. They share the geometry primitives but none of the solver
// logic: the greedy piercing below is re-derived from the interval
// definitions so that cross-checks against the solvers are meaningful.
// All grid resolutions and refinement schedules are fixed constants.

namespace linecenter::oracle {

namespace detail {

inline bool coverable_with_k(const ProblemInstance& inst, const Line& line, double r) {
  std::vector<std::pair<double, double>> spans;
  spans.reserve(inst.points.size());
  for (const Point& p : inst.points) {
    const Interval iv = disk_line_interval(p, r, line, inst.metric);
    if (iv.is_empty()) return false;
    spans.emplace_back(iv.hi, iv.lo);
  }
  std::sort(spans.begin(), spans.end());
  int stabs = 0;
  double cur = -std::numeric_limits<double>::infinity();
  bool have = false;
  for (const auto& [hi, lo] : spans) {
    if (!have || lo > cur) {
      cur = hi;
      ++stabs;
      have = true;
    }
  }
  return stabs <= inst.k;
}

inline double golden_min(double a, double b, int iters, const auto& f, double seed_best) {
  static const double kGolden = 0.5 * (std::sqrt(5.0) - 1.0);
  double best = seed_best;
  double c = b - kGolden * (b - a);
  double d = a + kGolden * (b - a);
  double fc = f(c);
  double fd = f(d);
  best = std::min({best, fc, fd});
  for (int it = 0; it < iters; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kGolden * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kGolden * (b - a);
      fd = f(d);
    }
    best = std::min({best, fc, fd});
  }
  return best;
}

}  // namespace detail

/// Reference optimum for the fixed-line problem: bisection on the greedy
/// piercing decision, to absolute width 1e-12.
inline double fixed_line_radius(const ProblemInstance& inst, const Line& line) {
  if (inst.points.size() > 15) throw std::invalid_argument("oracle: size guard (n <= 15)");
  if (inst.k < 1) throw std::invalid_argument("oracle: k must be >= 1");
  if (inst.points.empty()) return 0.0;
  if (detail::coverable_with_k(inst, line, 0.0)) return 0.0;
  double hi = 1.0;
  int grow = 0;
  while (!detail::coverable_with_k(inst, line, hi)) {
    hi *= 2.0;
    if (++grow > 200) throw std::runtime_error("oracle: no feasible radius found");
  }
  double lo = 0.0;
  for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (detail::coverable_with_k(inst, line, mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

/// Reference optimum for a fixed orientation: fixed_line_radius minimized
/// over a dense grid of normal offsets (10^4 samples spanning the normal
/// extent padded by the extent on both sides), with the three best grid
/// brackets refined by golden section.
inline double fixed_orientation_radius(const ProblemInstance& inst, double theta) {
  if (inst.points.size() > 10) throw std::invalid_argument("oracle: size guard (n <= 10)");
  if (inst.k < 1) throw std::invalid_argument("oracle: k must be >= 1");
  if (inst.points.empty()) return 0.0;
  const Line base{{0.0, 0.0}, normalize_orientation(theta)};
  const Point nrm = base.normal();
  std::vector<double> offs;
  offs.reserve(inst.points.size());
  for (const Point& p : inst.points) offs.push_back(dot(p, nrm));
  const double o_lo = *std::min_element(offs.begin(), offs.end());
  const double o_hi = *std::max_element(offs.begin(), offs.end());
  const double h = o_hi - o_lo;
  auto eval = [&](double c) {
    return fixed_line_radius(inst, Line{c * nrm, base.theta});
  };
  if (h == 0.0) return eval(o_lo);

  constexpr int kGrid = 10000;
  const double span_lo = o_lo - h;
  const double step = 3.0 * h / (kGrid - 1);
  // The metric distance to the offset-c line is gain * |c - o_i|, which
  // bounds the achievable radius from below and lets most grid cells be
  // skipped once three good values are known (pruning never changes the
  // minimum).
  const double gain = point_line_distance(nrm, base, inst.metric);
  std::array<double, 3> top{std::numeric_limits<double>::infinity(),
                            std::numeric_limits<double>::infinity(),
                            std::numeric_limits<double>::infinity()};
  std::array<int, 3> top_idx{-1, -1, -1};
  auto offer = [&](double value, int idx) {
    for (std::size_t s = 0; s < top.size(); ++s) {
      if (value < top[s]) {
        for (std::size_t t = top.size() - 1; t > s; --t) {
          top[t] = top[t - 1];
          top_idx[t] = top_idx[t - 1];
        }
        top[s] = value;
        top_idx[s] = idx;
        return;
      }
    }
  };
  for (int j = 0; j < kGrid; ++j) {
    const double c = span_lo + j * step;
    double bound = 0.0;
    for (double o : offs) bound = std::max(bound, gain * std::abs(o - c));
    if (bound >= top.back()) continue;
    offer(eval(c), j);
  }
  double best = top[0];
  for (std::size_t s = 0; s < top.size(); ++s) {
    if (top_idx[s] < 0) continue;
    const double a = span_lo + std::max(0, top_idx[s] - 1) * step;
    const double b = span_lo + std::min(kGrid - 1, top_idx[s] + 1) * step;
    best = std::min(best, detail::golden_min(a, b, 100, eval, best));
  }
  return best;
}

/// Upper estimate of the free-line optimum: fixed_orientation_radius over
/// 720 angles in [0, pi) with golden-section refinement around the best.
/// Within grid resolution only; used as a sandwiching bound, never as truth.
inline double free_line_radius(const ProblemInstance& inst) {
  if (inst.points.size() > 8) throw std::invalid_argument("oracle: size guard (n <= 8)");
  if (inst.k < 1) throw std::invalid_argument("oracle: k must be >= 1");
  if (inst.points.empty()) return 0.0;
  constexpr int kAngles = 720;
  const double step = kPi / kAngles;
  double best = std::numeric_limits<double>::infinity();
  int best_idx = 0;
  for (int j = 0; j < kAngles; ++j) {
    const double value = fixed_orientation_radius(inst, j * step);
    if (value < best) {
      best = value;
      best_idx = j;
    }
  }
  const double a = (best_idx - 1) * step;
  const double b = (best_idx + 1) * step;
  return detail::golden_min(
      a, b, 40, [&](double th) { return fixed_orientation_radius(inst, th); }, best);
}

/// Exact 1-D k-center value by dynamic programming over split positions.
inline double kcenter_1d_radius(std::vector<double> xs, int k) {
  if (xs.size() > 15) throw std::invalid_argument("oracle: size guard (n <= 15)");
  if (k < 1) throw std::invalid_argument("oracle: k must be >= 1");
  if (xs.empty()) return 0.0;
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  const std::size_t kk = std::min<std::size_t>(static_cast<std::size_t>(k), n);
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> d(n + 1, std::vector<double>(kk + 1, inf));
  d[0][0] = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= kk; ++j) {
      for (std::size_t m = j - 1; m < i; ++m) {
        if (d[m][j - 1] == inf) continue;
        const double cost = std::max(d[m][j - 1], 0.5 * (xs[i - 1] - xs[m]));
        d[i][j] = std::min(d[i][j], cost);
      }
    }
  }
  return d[n][kk];
}

}  // namespace linecenter::oracle
