#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "linecenter/fixed_line.hpp"
#include "linecenter/oracle.hpp"
#include "test_util.hpp"

using namespace linecenter;
using Catch::Approx;

namespace {
const Line kXAxis{{0, 0}, 0.0};
}

TEST_CASE("decide_fixed_line examples") {
  SECTION("two tangent singleton intervals need two disks") {
    const ProblemInstance inst{{{0, 1}, {10, 1}}, 1, Metric::L2};
    CHECK_FALSE(decide_fixed_line(inst, kXAxis, 1.0).has_value());
    const auto centers = decide_fixed_line(inst, kXAxis, std::sqrt(26.0));
    REQUIRE(centers.has_value());
    REQUIRE(centers->size() == 1);
    CHECK((*centers)[0].x == Approx(5.0));
    CHECK((*centers)[0].y == Approx(0.0).margin(1e-12));
  }
  SECTION("symmetric tangency") {
    const ProblemInstance inst{{{0, 1}, {0, -1}}, 1, Metric::L2};
    const auto centers = decide_fixed_line(inst, kXAxis, 1.0);
    REQUIRE(centers.has_value());
    CHECK((*centers)[0].x == Approx(0.0).margin(1e-12));
  }
  SECTION("negative radius is infeasible") {
    const ProblemInstance inst{{{0, 1}}, 1, Metric::L2};
    CHECK_FALSE(decide_fixed_line(inst, kXAxis, -0.5).has_value());
  }
}

TEST_CASE("candidate_radii_fixed_line examples") {
  SECTION("two points at height 1") {
    const ProblemInstance inst{{{0, 1}, {2, 1}}, 1, Metric::L2};
    const auto cands = candidate_radii_fixed_line(inst, kXAxis);
    auto holds = [&](double v) {
      for (double c : cands) {
        if (std::abs(c - v) <= 1e-9 * (1.0 + v)) return true;
      }
      return false;
    };
    CHECK(holds(1.0));
    CHECK(holds(std::sqrt(2.0)));
  }
  SECTION("single point") {
    const ProblemInstance inst{{{0, 1}}, 1, Metric::L2};
    const auto cands = candidate_radii_fixed_line(inst, kXAxis);
    REQUIRE(cands.size() == 1);
    CHECK(cands[0] == Approx(1.0));
  }
  SECTION("candidates satisfy an endpoint equation; optimum is in the list") {
    lctest::Rng rng(2025);
    for (int trial = 0; trial < 25; ++trial) {
      ProblemInstance inst = lctest::random_instance(rng, 2, 8, 3);
      const Line line = lctest::random_line(rng);
      const auto cands = candidate_radii_fixed_line(inst, line);
      std::vector<double> us, vs;
      for (const Point& p : dedup_points(inst.points)) {
        us.push_back(line.project(p));
        vs.push_back(point_line_distance(p, line, Metric::L2));
      }
      const double vmax = *std::max_element(vs.begin(), vs.end());
      auto endpoint_hit = [&](double r) {
        auto g = [&](std::size_t i) { return std::sqrt(std::max(0.0, r * r - vs[i] * vs[i])); };
        for (std::size_t i = 0; i < us.size(); ++i) {
          if (std::abs(r - vs[i]) <= 1e-7 * (1.0 + r)) return true;
          for (std::size_t j = 0; j < us.size(); ++j) {
            if (i == j) continue;
            const double ai = us[i] - g(i), bi = us[i] + g(i);
            const double aj = us[j] - g(j), bj = us[j] + g(j);
            const double tol = 1e-7 * (1.0 + r);
            if (std::abs(ai - aj) <= tol || std::abs(bi - bj) <= tol ||
                std::abs(ai - bj) <= tol) {
              return true;
            }
          }
        }
        return false;
      };
      for (double r : cands) {
        if (r >= vmax - 1e-9) CHECK(endpoint_hit(r));
      }
      const double opt = oracle::fixed_line_radius(inst, line);
      bool found = false;
      for (double c : cands) {
        if (std::abs(c - opt) <= 1e-7 * (1.0 + opt)) found = true;
      }
      CHECK(found);
    }
  }
}

TEST_CASE("solve_fixed_line examples") {
  SECTION("one disk over a symmetric pair") {
    const ProblemInstance inst{{{-1, 1}, {1, 1}}, 1, Metric::L2};
    const CoverSolution sol = solve_fixed_line(inst, kXAxis);
    CHECK(sol.radius == Approx(std::sqrt(2.0)));
    REQUIRE(sol.centers.size() == 1);
    CHECK(sol.centers[0].x == Approx(0.0).margin(1e-6));
  }
  SECTION("two disks over a symmetric pair") {
    const ProblemInstance inst{{{-1, 1}, {1, 1}}, 2, Metric::L2};
    const CoverSolution sol = solve_fixed_line(inst, kXAxis);
    CHECK(sol.radius == Approx(1.0));
    CHECK(sol.centers.size() == 2);
  }
  SECTION("k >= n gives radius y_max") {
    lctest::Rng rng(777);
    for (int trial = 0; trial < 50; ++trial) {
      ProblemInstance inst = lctest::random_instance(rng, 1, 6, 1);
      inst.k = static_cast<int>(inst.points.size()) + rng.uniform_int(0, 3);
      const Line line = lctest::random_line(rng);
      double y_max = 0.0;
      for (const Point& p : inst.points) {
        y_max = std::max(y_max, point_line_distance(p, line, inst.metric));
      }
      const CoverSolution sol = solve_fixed_line(inst, line);
      CHECK(sol.radius == Approx(y_max).margin(1e-9));
    }
  }
  SECTION("empty instance") {
    const ProblemInstance inst{{}, 2, Metric::L2};
    CHECK(solve_fixed_line(inst, kXAxis).radius == 0.0);
  }
}

TEST_CASE("solve_fixed_line matches the bisection oracle (L2)") {
  lctest::Rng rng(31337);
  for (int trial = 0; trial < 150; ++trial) {
    const ProblemInstance inst = lctest::random_instance(rng, 1, 10, 3);
    const Line line = lctest::random_line(rng);
    const CoverSolution sol = solve_fixed_line(inst, line);
    const double ref = oracle::fixed_line_radius(inst, line);
    CHECK(sol.radius == Approx(ref).margin(1e-7));
    CHECK(covers(inst, sol));
  }
}

TEST_CASE("solve_fixed_line_l1_linf examples") {
  SECTION("L1 balance") {
    const ProblemInstance inst{{{0, 1}, {4, 1}}, 1, Metric::L1};
    const CoverSolution sol = solve_fixed_line_l1_linf(inst, kXAxis);
    CHECK(sol.radius == Approx(3.0));
    REQUIRE(sol.centers.size() == 1);
    CHECK(sol.centers[0].x == Approx(2.0));
  }
  SECTION("Linf balance") {
    const ProblemInstance inst{{{0, 1}, {4, 1}}, 1, Metric::Linf};
    const CoverSolution sol = solve_fixed_line_l1_linf(inst, kXAxis);
    CHECK(sol.radius == Approx(2.0));
    REQUIRE(sol.centers.size() == 1);
    CHECK(sol.centers[0].x == Approx(2.0));
  }
  SECTION("wrong metric throws") {
    const ProblemInstance inst{{{0, 1}}, 1, Metric::L2};
    CHECK_THROWS_AS(solve_fixed_line_l1_linf(inst, kXAxis), std::invalid_argument);
  }
}

TEST_CASE("solve_fixed_line_l1_linf matches the bisection oracle") {
  lctest::Rng rng(60601);
  for (Metric m : {Metric::L1, Metric::Linf}) {
    for (int trial = 0; trial < 100; ++trial) {
      const ProblemInstance inst = lctest::random_instance(rng, 1, 10, 3, m);
      // Half the trials exercise the axis-parallel fast path, half the
      // generic-orientation fallback.
      const Line line = (trial % 2 == 0) ? Line{lctest::random_point(rng), 0.0}
                                         : lctest::random_line(rng);
      const CoverSolution sol = solve_fixed_line_l1_linf(inst, line);
      const double ref = oracle::fixed_line_radius(inst, line);
      CHECK(sol.radius == Approx(ref).margin(1e-7));
      CHECK(covers(inst, sol));
    }
  }
}

TEST_CASE("fixed-line invariants") {
  lctest::Rng rng(11);
  SECTION("decision monotone in r") {
    for (int trial = 0; trial < 300; ++trial) {
      const ProblemInstance inst =
          lctest::random_instance(rng, 1, 8, 3, lctest::random_metric(rng));
      const Line line = lctest::random_line(rng);
      const double r1 = rng.uniform(0.0, 2.0);
      const double r2 = r1 + rng.uniform(0.0, 2.0);
      if (decide_fixed_line(inst, line, r1).has_value()) {
        CHECK(decide_fixed_line(inst, line, r2).has_value());
      }
    }
  }
  SECTION("radius >= y_max and slightly smaller radii are infeasible") {
    for (int trial = 0; trial < 100; ++trial) {
      const ProblemInstance inst =
          lctest::random_instance(rng, 2, 10, 3, lctest::random_metric(rng));
      const Line line = lctest::random_line(rng);
      double y_max = 0.0;
      for (const Point& p : inst.points) {
        y_max = std::max(y_max, point_line_distance(p, line, inst.metric));
      }
      const CoverSolution sol = solve_fixed_line(inst, line);
      CHECK(sol.radius >= y_max - 1e-9);
      CHECK(covers(inst, sol));
      for (const Point& c : sol.centers) {
        CHECK(point_line_distance(c, line, Metric::L2) <= 1e-9);
      }
      const double shrunk = sol.radius - 1e-6 * (1.0 + sol.radius);
      if (shrunk >= 0.0) {
        CHECK_FALSE(decide_fixed_line(inst, line, shrunk).has_value());
      }
    }
  }
}
