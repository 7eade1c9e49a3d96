#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "linecenter/fixed_orientation.hpp"
#include "linecenter/free_line.hpp"
#include "test_util.hpp"

using namespace linecenter;
using Catch::Approx;

namespace {

bool has_line(const std::vector<CandidateLine>& cands, double theta, Point on_line,
              double tol = 1e-9) {
  for (const CandidateLine& cl : cands) {
    if (std::abs(normalize_orientation(theta) - cl.line.theta) > tol) continue;
    if (point_line_distance(on_line, cl.line, Metric::L2) <= tol) return true;
  }
  return false;
}

/// Smallest enclosing disk by brute force over point pairs and triples.
double mec_radius(const std::vector<Point>& pts) {
  auto contains_all = [&](Point c, double r) {
    for (const Point& p : pts) {
      if (norm(p - c) > r + 1e-9) return false;
    }
    return true;
  };
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i; j < pts.size(); ++j) {
      const Point c = 0.5 * (pts[i] + pts[j]);
      const double r = 0.5 * norm(pts[j] - pts[i]);
      if (r < best && contains_all(c, r)) best = r;
      for (std::size_t l = j + 1; l < pts.size(); ++l) {
        const Point a = pts[i], b = pts[j], d = pts[l];
        const double den = 2.0 * cross(b - a, d - a);
        if (std::abs(den) < 1e-12) continue;
        const double na = dot(a, a), nb = dot(b, b), nd = dot(d, d);
        const Point cc{(na * (b.y - d.y) + nb * (d.y - a.y) + nd * (a.y - b.y)) / den,
                       (na * (d.x - b.x) + nb * (a.x - d.x) + nd * (b.x - a.x)) / den};
        const double r3 = norm(a - cc);
        if (r3 < best && contains_all(cc, r3)) best = r3;
      }
    }
  }
  return best;
}

/// Grid search over (theta, offset) with solve_fixed_line per line, locally
/// refined by zooming both grids around the best cell.
double grid_oracle_free(const ProblemInstance& inst) {
  auto eval = [&](double th, double c) {
    const Line base{{0.0, 0.0}, normalize_orientation(th)};
    return solve_fixed_line(inst, Line{c * base.normal(), base.theta}).radius;
  };
  double best = std::numeric_limits<double>::infinity();
  double best_th = 0.0, best_c = 0.0;
  const double th_step0 = kPi / 360.0;
  double off_lo = 0.0, off_hi = 0.0, off_pad = 1.0;
  {
    double cmin = 1e300, cmax = -1e300;
    for (int a = 0; a < 360; ++a) {
      const double th = a * th_step0;
      const Point nrm = Line{{0.0, 0.0}, th}.normal();
      cmin = 1e300;
      cmax = -1e300;
      for (const Point& p : inst.points) {
        cmin = std::min(cmin, dot(p, nrm));
        cmax = std::max(cmax, dot(p, nrm));
      }
      const double span = std::max(cmax - cmin, 1e-6);
      for (int b = 0; b < 200; ++b) {
        const double c = cmin + span * b / 199.0;
        const double v = eval(th, c);
        if (v < best) {
          best = v;
          best_th = th;
          best_c = c;
          off_lo = cmin;
          off_hi = cmax;
        }
      }
    }
    off_pad = std::max((off_hi - off_lo) / 199.0, 1e-9);
  }
  double dth = th_step0;
  double dc = off_pad;
  for (int round = 0; round < 5; ++round) {
    double next_best = best, next_th = best_th, next_c = best_c;
    for (int a = -10; a <= 10; ++a) {
      for (int b = -10; b <= 10; ++b) {
        const double th = best_th + a * dth / 10.0;
        const double c = best_c + b * dc / 10.0;
        const double v = eval(th, c);
        if (v < next_best) {
          next_best = v;
          next_th = th;
          next_c = c;
        }
      }
    }
    best = next_best;
    best_th = next_th;
    best_c = next_c;
    dth /= 10.0;
    dc /= 10.0;
  }
  return best;
}

}  // namespace

TEST_CASE("candidate_lines examples") {
  SECTION("bitangents of two unit disks 4 apart") {
    const ProblemInstance inst{{{0, 0}, {4, 0}}, 1, Metric::L2};
    const auto cands = candidate_lines(inst, 1.0);
    CHECK(has_line(cands, 0.0, {0, 1}));   // outer y = 1
    CHECK(has_line(cands, 0.0, {0, -1}));  // outer y = -1
    const double inner = std::atan(1.0 / std::sqrt(3.0));
    CHECK(has_line(cands, inner, {2, 0}, 1e-7));
    CHECK(has_line(cands, -inner, {2, 0}, 1e-7));
  }
  SECTION("tangent disks give the touch-point perpendicular") {
    const ProblemInstance inst{{{0, 0}, {2, 0}}, 1, Metric::L2};
    const auto cands = candidate_lines(inst, 1.0);
    CHECK(has_line(cands, kPi / 2.0, {1, 0}, 1e-7));  // the line x = 1
  }
  SECTION("counts respect the combinatorial bound") {
    const ProblemInstance inst{{{0, 0}, {3, 1}, {1, 3}}, 1, Metric::L2};
    for (double r : {0.4, 1.0, 2.5}) {
      const auto cands = candidate_lines(inst, r);
      const double n = 3;
      const double pair_count = n * (n - 1) / 2;
      const double crossings = 2 * pair_count;
      const double bound =
          4 * pair_count + 2 * crossings * n + crossings * (crossings - 1) / 2;
      CHECK(static_cast<double>(cands.size()) <= bound);
    }
  }
  SECTION("wrong metric throws") {
    const ProblemInstance inst{{{0, 0}}, 1, Metric::L1};
    CHECK_THROWS_AS(candidate_lines(inst, 1.0), std::invalid_argument);
  }
}

TEST_CASE("decide_free_line examples") {
  SECTION("collinear points at radius zero") {
    const ProblemInstance inst{{{0, 0}, {1, 1}, {2, 2}}, 3, Metric::L2};
    const auto sol = decide_free_line(inst, 0.0);
    REQUIRE(sol.has_value());
    for (const Point& p : inst.points) {
      CHECK(point_line_distance(p, sol->line, Metric::L2) <= 1e-9);
    }
  }
  SECTION("triangle with k=3 becomes feasible at the oracle threshold") {
    const ProblemInstance inst{{{0, 0}, {4, 0}, {2, 2}}, 3, Metric::L2};
    const double r_star = solve_free_line(inst).radius;
    const double ref = grid_oracle_free(inst);
    CHECK(r_star == Approx(ref).margin(2e-5));
    CHECK_FALSE(decide_free_line(inst, r_star - 1e-4).has_value());
    CHECK(decide_free_line(inst, r_star + 1e-4).has_value());
  }
  SECTION("the minimum enclosing disk radius is always feasible") {
    lctest::Rng rng(123321);
    for (int trial = 0; trial < 25; ++trial) {
      const ProblemInstance inst = lctest::random_instance(rng, 1, 7, 1);
      const double r = mec_radius(inst.points);
      CHECK(decide_free_line(inst, r).has_value());
    }
  }
}

TEST_CASE("solve_free_line examples") {
  SECTION("unit square with two disks") {
    const ProblemInstance inst{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}, 2, Metric::L2};
    const CoverSolution sol = solve_free_line(inst);
    CHECK(sol.radius == Approx(0.5).margin(1e-6));
    CHECK(covers(inst, sol, 1e-6));
  }
  SECTION("three collinear points with one disk") {
    const ProblemInstance inst{{{0, 0}, {1, 0}, {5, 0}}, 1, Metric::L2};
    const CoverSolution sol = solve_free_line(inst);
    CHECK(sol.radius == Approx(2.5).margin(1e-6));
    CHECK(point_line_distance({0, 0}, sol.line, Metric::L2) <= 1e-6);
  }
  SECTION("random instances against the grid oracle") {
    lctest::Rng rng(2468);
    for (int trial = 0; trial < 4; ++trial) {
      const ProblemInstance inst = lctest::random_instance(rng, 5, 8, 1);
      ProblemInstance with_k = inst;
      with_k.k = 3;
      const CoverSolution sol = solve_free_line(with_k);
      const double ref = grid_oracle_free(with_k);
      CHECK(sol.radius <= ref + 1e-9);
      CHECK(sol.radius == Approx(ref).margin(1e-5));
    }
  }
}

TEST_CASE("free-line invariants") {
  lctest::Rng rng(1357);
  SECTION("sandwich between width/2 and the constant-factor radius") {
    for (int trial = 0; trial < 60; ++trial) {
      const ProblemInstance inst = lctest::random_instance(rng, 2, 8, 3);
      const CoverSolution sol = solve_free_line(inst);
      const double w = width_line(dedup_points(inst.points)).width;
      const double rc = constant_factor(inst).solution.radius;
      CHECK(sol.radius >= 0.5 * w - 1e-9);
      CHECK(sol.radius <= rc + 1e-9);
      CHECK(covers(inst, sol, 1e-8));
    }
  }
  SECTION("decision monotone in r") {
    for (int trial = 0; trial < 150; ++trial) {
      const ProblemInstance inst = lctest::random_instance(rng, 1, 6, 3);
      const double r1 = rng.uniform(0.0, 1.0);
      const double r2 = r1 + rng.uniform(0.0, 1.0);
      if (decide_free_line(inst, r1).has_value()) {
        CHECK(decide_free_line(inst, r2).has_value());
      }
    }
  }
  SECTION("rigid-motion invariance and scaling equivariance") {
    for (int trial = 0; trial < 20; ++trial) {
      const ProblemInstance inst = lctest::random_instance(rng, 2, 7, 3);
      const double base = solve_free_line(inst).radius;
      const double phi = rng.uniform(0.0, 2.0 * kPi);
      const Point shift = lctest::random_point(rng, -3.0, 3.0);
      ProblemInstance moved = inst;
      for (Point& p : moved.points) p = rotate(p, phi) + shift;
      CHECK(solve_free_line(moved).radius == Approx(base).epsilon(1e-9).margin(1e-9));
      const double s = rng.uniform(0.5, 3.0);
      ProblemInstance scaled = inst;
      for (Point& p : scaled.points) p = s * p;
      CHECK(solve_free_line(scaled).radius == Approx(s * base).epsilon(1e-9).margin(1e-9));
    }
  }
  SECTION("k = 1 agrees with the best orientation on a fine grid") {
    for (int trial = 0; trial < 3; ++trial) {
      const ProblemInstance inst = lctest::random_instance(rng, 3, 6, 1);
      const double sol = solve_free_line(inst).radius;
      double best = std::numeric_limits<double>::infinity();
      for (int a = 0; a < 180; ++a) {
        best = std::min(best, solve_fixed_orientation(inst, a * kPi / 180.0).radius);
      }
      CHECK(sol <= best + 1e-9);
      CHECK(best <= sol + 0.02 * (1.0 + sol));  // coarse grid upper envelope
    }
  }
}
