#include <array>
#include <cmath>

#include "surfrep/hyp2.hpp"

namespace surfrep {

namespace {

struct Vec2 {
  double x = 0, y = 0;
};

Vec2 unit(double phi) { return {std::cos(phi), std::sin(phi)}; }

double total(const std::array<Point, 3>& pts, Point x) {
  return distance(x, pts[0]) + distance(x, pts[1]) + distance(x, pts[2]);
}

}  // namespace

Point fermat_point(Point x1, Point x2, Point x3, const ScaledPlane& plane, int max_iterations) {
  const std::array<Point, 3> pts{x1, x2, x3};

  // Vertex minimizers: weighted optimality test |sum of unit vectors| <= weight.
  for (int j = 0; j < 3; ++j) {
    double weight = 0;
    Vec2 pull;
    for (int i = 0; i < 3; ++i) {
      if (distance(pts[j], pts[i]) < 1e-14) {
        weight += 1;
        continue;
      }
      Vec2 u = unit(direction_to(pts[j], pts[i]));
      pull.x += u.x;
      pull.y += u.y;
    }
    if (std::hypot(pull.x, pull.y) <= weight) return pts[j];
  }

  Point m23 = exp_map(x2, direction_to(x2, x3), distance(x2, x3) / 2);
  Point x = exp_map(m23, direction_to(m23, x1), distance(m23, x1) / 3);
  double f = total(pts, x);

  for (int it = 0; it < max_iterations; ++it) {
    Vec2 g;
    double h11 = 0, h12 = 0, h22 = 0;
    for (const Point& p : pts) {
      double r = distance(x, p);
      if (r < 1e-12) continue;
      Vec2 u = unit(direction_to(x, p));
      g.x -= u.x;
      g.y -= u.y;
      double k = 1.0 / std::tanh(r);
      h11 += k * (1 - u.x * u.x);
      h12 -= k * u.x * u.y;
      h22 += k * (1 - u.y * u.y);
    }
    if (std::hypot(g.x, g.y) / plane.scale < 1e-10) return x;

    double det = h11 * h22 - h12 * h12;
    Vec2 step{-(h22 * g.x - h12 * g.y) / det, -(h11 * g.y - h12 * g.x) / det};
    if (!(det > 1e-300) || step.x * g.x + step.y * g.y >= 0) step = {-g.x, -g.y};

    // Newton direction first; near a vertex the kink can defeat it, then steepest descent.
    auto search = [&](Vec2 dir, double t) {
      double phi = std::atan2(dir.y, dir.x);
      for (int k = 0; k < 80; ++k, t *= 0.5) {
        Point cand = exp_map(x, phi, t);
        double fc = total(pts, cand);
        if (cand.y > 0 && std::isfinite(fc) && fc < f) {
          x = cand;
          f = fc;
          return true;
        }
      }
      return false;
    };
    if (!search(step, std::hypot(step.x, step.y)) && !search({-g.x, -g.y}, 1.0)) return x;
  }
  throw NonConvergence("fermat point iteration cap reached");
}

}  // namespace surfrep
