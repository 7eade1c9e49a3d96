#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

namespace linecenter {

// Geometric predicates use a relative tolerance of 1e-9 with an absolute
// floor of 1e-12 near zero. Degeneracies (tangency, coincident points,
// collinear input) are legal and resolved by closed intervals and tie rules.
inline constexpr double kRelTol = 1e-9;
inline constexpr double kAbsTol = 1e-12;
inline constexpr double kPi = 3.14159265358979323846;

inline double tol_for(double scale) { return kAbsTol + kRelTol * std::abs(scale); }

struct Point {
  double x{0.0};
  double y{0.0};
};

inline bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }
inline bool operator!=(Point a, Point b) { return !(a == b); }
inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }

/// Rotate p around the origin by angle phi.
inline Point rotate(Point p, double phi) {
  const double c = std::cos(phi), s = std::sin(phi);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

enum class Metric { L2, L1, Linf };

inline const char* metric_name(Metric m) {
  switch (m) {
    case Metric::L2: return "L2";
    case Metric::L1: return "L1";
    case Metric::Linf: return "Linf";
  }
  return "L2";
}

inline double distance(Point p, Point q, Metric m) {
  const double dx = std::abs(p.x - q.x);
  const double dy = std::abs(p.y - q.y);
  switch (m) {
    case Metric::L2: return std::hypot(dx, dy);
    case Metric::L1: return dx + dy;
    case Metric::Linf: return std::max(dx, dy);
  }
  return 0.0;
}

/// Fold an angle into [0, pi). Orientations are modulo pi: flipping the
/// direction of a line does not change the line.
inline double normalize_orientation(double theta) {
  double t = std::fmod(theta, kPi);
  if (t < 0.0) t += kPi;
  if (t >= kPi) t = 0.0;
  return t;
}

// Oriented line in point-angle form. The map t -> anchor + t*(cos, sin)
// is an isometry onto the line, so interval arithmetic along t is exact.
struct Line {
  Point anchor;
  double theta{0.0};  // in [0, pi)

  Point dir() const { return {std::cos(theta), std::sin(theta)}; }
  Point normal() const { return {-std::sin(theta), std::cos(theta)}; }
  Point at(double t) const { return anchor + t * dir(); }
  /// Parameter of the orthogonal projection of p.
  double project(Point p) const { return dot(p - anchor, dir()); }

  static Line from_angle(Point anchor, double theta) {
    return Line{anchor, normalize_orientation(theta)};
  }
  static Line through(Point a, Point b) {
    if (a == b) return Line{a, 0.0};
    return Line{a, normalize_orientation(std::atan2(b.y - a.y, b.x - a.x))};
  }
};

// Closed 1-D interval along a line parameterization; lo > hi encodes empty.
struct Interval {
  double lo{std::numeric_limits<double>::infinity()};
  double hi{-std::numeric_limits<double>::infinity()};

  static Interval empty() { return {}; }
  bool is_empty() const { return lo > hi; }
  bool contains(double t) const { return lo <= t && t <= hi; }
};

/// Distance from p to the line under metric m (minimum over line points).
inline double point_line_distance(Point p, const Line& line, Metric m) {
  const Point u = line.dir();
  const Point v = p - line.anchor;
  switch (m) {
    case Metric::L2:
      return std::abs(cross(u, v));
    case Metric::L1: {
      // min_t |v.x - t*u.x| + |v.y - t*u.y|; convex piecewise linear,
      // minimized where one coordinate vanishes.
      if (u.x == 0.0) return std::abs(v.x);
      if (u.y == 0.0) return std::abs(v.y);
      const double at_x = std::abs(v.y - (v.x / u.x) * u.y);
      const double at_y = std::abs(v.x - (v.y / u.y) * u.x);
      return std::min(at_x, at_y);
    }
    case Metric::Linf: {
      double best = std::numeric_limits<double>::infinity();
      auto eval = [&](double t) {
        best = std::min(best, std::max(std::abs(v.x - t * u.x), std::abs(v.y - t * u.y)));
      };
      if (u.x != u.y) eval((v.x - v.y) / (u.x - u.y));
      if (u.x != -u.y) eval((v.x + v.y) / (u.x + u.y));
      if (u.x != 0.0) eval(v.x / u.x);
      if (u.y != 0.0) eval(v.y / u.y);
      return best;
    }
  }
  return 0.0;
}

namespace detail {

inline std::vector<Point> rotate_all(const std::vector<Point>& pts, double phi) {
  std::vector<Point> out;
  out.reserve(pts.size());
  for (const Point& p : pts) out.push_back(rotate(p, phi));
  return out;
}

// Half-line constraints c*t + e <= r describing the slice of a metric ball
// by a line. L1: |x|+|y| <= r is the intersection of four sign patterns;
// Linf: |x| <= r and |y| <= r give two constraints each.
struct SliceConstraint {
  double c;
  double e;
};

inline std::array<SliceConstraint, 4> slice_constraints(Point center, const Line& line,
                                                        Metric m) {
  const Point u = line.dir();
  const Point w = line.anchor - center;
  if (m == Metric::L1) {
    return {{{u.x + u.y, w.x + w.y},
             {u.x - u.y, w.x - w.y},
             {-u.x + u.y, -w.x + w.y},
             {-u.x - u.y, -w.x - w.y}}};
  }
  return {{{u.x, w.x}, {-u.x, -w.x}, {u.y, w.y}, {-u.y, -w.y}}};
}

inline Interval collapse_near_empty(double lo, double hi, double scale) {
  if (lo <= hi) return Interval{lo, hi};
  if (lo - hi <= 2.0 * tol_for(scale)) {
    const double mid = 0.5 * (lo + hi);
    return Interval{mid, mid};
  }
  return Interval::empty();
}

}  // namespace detail

/// The set {t : distance(line(t), center, m) <= r} as a closed interval;
/// empty when the ball of radius r around center misses the line.
inline Interval disk_line_interval(Point center, double r, const Line& line, Metric m) {
  if (r < 0.0) return Interval::empty();
  if (m == Metric::L2) {
    const Point u = line.dir();
    const Point v = center - line.anchor;
    const double t0 = dot(v, u);
    const double d = std::abs(cross(u, v));
    if (d > r) {
      if (d - r <= tol_for(std::max(d, r))) return Interval{t0, t0};
      return Interval::empty();
    }
    const double h = std::sqrt(std::max(0.0, r * r - d * d));
    return Interval{t0 - h, t0 + h};
  }
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (const auto& [c, e] : detail::slice_constraints(center, line, m)) {
    if (c == 0.0) {
      if (e > r + tol_for(std::max(std::abs(e), r))) return Interval::empty();
      continue;
    }
    const double bound = (r - e) / c;
    if (c > 0.0) {
      hi = std::min(hi, bound);
    } else {
      lo = std::max(lo, bound);
    }
  }
  const double scale = std::max({std::abs(lo), std::abs(hi), r, 1.0 / kRelTol * kAbsTol});
  return detail::collapse_near_empty(lo, hi, scale);
}

/// Intersection points of two circle boundaries (0, 1 or 2, tangency gives
/// one). Concentric or identical circles are reported via `degenerate` and
/// yield no points.
inline std::vector<Point> circle_circle_intersections(Point c1, double r1, Point c2,
                                                      double r2,
                                                      bool* degenerate = nullptr) {
  if (degenerate) *degenerate = false;
  const Point delta = c2 - c1;
  const double d = norm(delta);
  if (d <= kAbsTol) {
    if (degenerate) *degenerate = true;
    return {};
  }
  const double a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
  double h2 = r1 * r1 - a * a;
  const double scale = std::max({r1 * r1, r2 * r2, d * d});
  if (h2 < 0.0) {
    if (-h2 > 2.0 * tol_for(scale)) return {};
    h2 = 0.0;
  }
  const double h = std::sqrt(h2);
  const Point base = c1 + (a / d) * delta;
  const Point n{-delta.y / d, delta.x / d};
  if (h <= tol_for(std::max(r1, r2))) return {base};
  return {base + h * n, base - h * n};
}

/// Convex hull in CCW order, duplicates and interior/collinear points removed.
inline std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(),
            [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<Point> hull(2 * n);
  std::size_t m = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower chain
    while (m >= 2 && cross(hull[m - 1] - hull[m - 2], pts[i] - hull[m - 2]) <= 0.0) --m;
    hull[m++] = pts[i];
  }
  const std::size_t lower = m + 1;
  for (std::size_t i = n - 1; i-- > 0;) {  // upper chain
    while (m >= lower && cross(hull[m - 1] - hull[m - 2], pts[i] - hull[m - 2]) <= 0.0) --m;
    hull[m++] = pts[i];
  }
  hull.resize(m - 1);
  return hull;
}

struct WidthResult {
  double width{0.0};
  Line line;
};

/// Minimum-width slab over all directions; the returned line is the slab's
/// mid-line, so every point is within width/2 of it (L2). Candidate
/// directions are the hull edges; ties broken by smallest angle.
inline WidthResult width_line(const std::vector<Point>& pts) {
  const std::vector<Point> hull = convex_hull(pts);
  if (hull.empty()) return {0.0, Line{}};
  if (hull.size() == 1) return {0.0, Line{hull[0], 0.0}};
  if (hull.size() == 2) return {0.0, Line::through(hull[0], hull[1])};
  WidthResult best{std::numeric_limits<double>::infinity(), Line{}};
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Point a = hull[i];
    const Point b = hull[(i + 1) % hull.size()];
    const double theta = normalize_orientation(std::atan2(b.y - a.y, b.x - a.x));
    const Line edge_line{a, theta};
    const Point n = edge_line.normal();
    double off_lo = std::numeric_limits<double>::infinity();
    double off_hi = -std::numeric_limits<double>::infinity();
    for (const Point& p : hull) {
      const double off = dot(p - a, n);
      off_lo = std::min(off_lo, off);
      off_hi = std::max(off_hi, off);
    }
    const double w = off_hi - off_lo;
    if (w < best.width || (w == best.width && theta < best.line.theta)) {
      best.width = w;
      best.line = Line{a + (0.5 * (off_lo + off_hi)) * n, theta};
    }
  }
  return best;
}

struct DiameterResult {
  double diameter{0.0};
  Point a;
  Point b;
};

/// Maximum pairwise L2 distance, found by rotating calipers over the hull.
inline DiameterResult diameter(const std::vector<Point>& pts) {
  const std::vector<Point> hull = convex_hull(pts);
  if (hull.empty()) return {};
  if (hull.size() == 1) return {0.0, hull[0], hull[0]};
  DiameterResult best{0.0, hull[0], hull[0]};
  auto consider = [&](Point p, Point q) {
    const double d = norm(q - p);
    if (d > best.diameter) best = {d, p, q};
  };
  const std::size_t m = hull.size();
  std::size_t j = 1;
  for (std::size_t i = 0; i < m; ++i) {
    const Point a = hull[i];
    const Point b = hull[(i + 1) % m];
    std::size_t guard = 0;
    while (guard++ <= m) {
      const std::size_t jn = (j + 1) % m;
      if (cross(b - a, hull[jn] - hull[j]) > 0.0) {
        j = jn;
      } else {
        break;
      }
    }
    consider(a, hull[j]);
    consider(b, hull[j]);
  }
  return best;
}

}  // namespace linecenter
