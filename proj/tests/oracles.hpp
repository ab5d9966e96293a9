// Test-only oracles, independent of the implementation paths they check.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <random>
#include <vector>

namespace oracles {

// Composite Simpson quadrature.
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      std::size_t panels) {
  const double h = (b - a) / static_cast<double>(panels);
  double sum = f(a) + f(b);
  for (std::size_t i = 1; i < panels; ++i) {
    sum += (i % 2 == 1 ? 4.0 : 2.0) * f(a + static_cast<double>(i) * h);
  }
  return sum * h / 3.0;
}

struct Vec3 {
  double r = 0, d = 0, c = 0;
};

// Average point-to-plane distance along a polyline, weighted by projected
// arc length: per segment, `samples` midpoint evaluations of the distance,
// each weighted by an equal share of the projected segment length.
inline double sampled_polyline_cost(const std::vector<Vec3>& points, double lambda, double gamma,
                                    std::size_t samples) {
  const double norm = std::sqrt(1.0 + lambda * lambda + gamma * gamma);
  auto dist = [&](const Vec3& p) { return (p.d + lambda * p.r + gamma * p.c) / norm; };
  auto project = [&](const Vec3& p) {
    const double q = (p.d + lambda * p.r + gamma * p.c) / (1.0 + lambda * lambda + gamma * gamma);
    return Vec3{p.r - q * lambda, p.d - q, p.c - q * gamma};
  };
  double weighted = 0.0, total_len = 0.0;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const Vec3 pa = project(points[i]);
    const Vec3 pb = project(points[i + 1]);
    const double len = std::sqrt((pa.r - pb.r) * (pa.r - pb.r) + (pa.d - pb.d) * (pa.d - pb.d) +
                                 (pa.c - pb.c) * (pa.c - pb.c));
    const double w = len / static_cast<double>(samples);
    for (std::size_t k = 0; k < samples; ++k) {
      const double t = (static_cast<double>(k) + 0.5) / static_cast<double>(samples);
      const Vec3 p{points[i].r + t * (points[i + 1].r - points[i].r),
                   points[i].d + t * (points[i + 1].d - points[i].d),
                   points[i].c + t * (points[i + 1].c - points[i].c)};
      weighted += w * dist(p);
    }
    total_len += len;
  }
  return weighted / total_len;
}

struct Point2D {
  double x = 0, y = 0;
};

// Lower convex hull (Andrew monotone chain), left-to-right. Contains every
// point reachable as the minimizer of y + lambda*x for some lambda > 0,
// plus the hull's right end.
inline std::vector<Point2D> lower_hull(std::vector<Point2D> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point2D& a, const Point2D& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  std::vector<Point2D> hull;
  for (const Point2D& p : pts) {
    while (hull.size() >= 2) {
      const Point2D& a = hull[hull.size() - 2];
      const Point2D& b = hull[hull.size() - 1];
      const double cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
      if (cross <= 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(p);
  }
  return hull;
}

inline bool on_hull(const std::vector<Point2D>& hull, double x, double y) {
  for (const Point2D& p : hull) {
    if (p.x == x && p.y == y) return true;
  }
  return false;
}

inline bool close_rel(double a, double b, double rel_tol, double abs_tol = 0.0) {
  const double diff = std::abs(a - b);
  return diff <= abs_tol + rel_tol * std::max(std::abs(a), std::abs(b));
}

}  // namespace oracles
