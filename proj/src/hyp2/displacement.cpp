#include <algorithm>
#include <cmath>
#include <vector>

#include "surfrep/hyp2.hpp"
#include "surfrep/representation.hpp"

namespace surfrep {

namespace {

struct Vec2 {
  double x = 0, y = 0;
};

double norm(Vec2 v) { return std::hypot(v.x, v.y); }

// d(x, s x) via h = cosh d - 1 = |c z^2 + (d - a) z - b|^2 / (2 y^2), together
// with its gradient in the orthonormal frame at x.
struct Piece {
  double value = 0;
  Vec2 grad;
};

Piece displacement_piece(const Isometry& s, Point p) {
  Complex z = p.z();
  Complex q = s.c * z * z + (s.d - s.a) * z - s.b;
  Complex dq = 2.0 * s.c * z + (s.d - s.a);
  double y = p.y;
  double q2 = std::norm(q);
  double h = q2 / (2 * y * y);
  Piece out;
  out.value = 2 * std::asinh(std::sqrt(h / 2));
  double sh = std::sqrt(h * (h + 2));
  if (sh == 0) return out;
  Complex w = std::conj(q) * dq;
  double hu = w.real() / (y * y);
  double hy = -w.imag() / (y * y) - q2 / (y * y * y);
  out.grad = {y * hu / sh, y * hy / sh};
  return out;
}

// Closest point to the origin of the convex hull of a few planar vectors.
Vec2 min_norm_hull(const std::vector<Vec2>& g) {
  Vec2 best = g[0];
  for (const Vec2& v : g)
    if (norm(v) < norm(best)) best = v;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      Vec2 e{g[j].x - g[i].x, g[j].y - g[i].y};
      double ee = e.x * e.x + e.y * e.y;
      if (ee == 0) continue;
      double t = -(g[i].x * e.x + g[i].y * e.y) / ee;
      if (t <= 0 || t >= 1) continue;
      Vec2 p{g[i].x + t * e.x, g[i].y + t * e.y};
      if (norm(p) < norm(best)) best = p;
    }
  }
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      for (std::size_t k = j + 1; k < g.size(); ++k) {
        auto cross = [](Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; };
        double c1 = cross(g[i], g[j]), c2 = cross(g[j], g[k]), c3 = cross(g[k], g[i]);
        if ((c1 > 0 && c2 > 0 && c3 > 0) || (c1 < 0 && c2 < 0 && c3 < 0)) return {0, 0};
      }
  return best;
}

double max_value(const std::vector<Isometry>& gens, Point x) {
  double f = 0;
  for (const Isometry& s : gens) f = std::max(f, displacement_piece(s, x).value);
  return f;
}

constexpr double kEscapeRadius = 40.0;

}  // namespace

double max_displacement(const std::vector<Isometry>& generators, Point x,
                        const ScaledPlane& plane) {
  return max_value(generators, x) / plane.scale;
}

DisplacementResult min_displacement(const std::vector<Isometry>& gens, const ScaledPlane& plane,
                                    int max_iterations) {
  DisplacementResult res;
  Point origin = base_point();
  if (gens.empty()) {
    res.minimizer = origin;
    return res;
  }
  Point x = origin;
  if (gens.size() >= 2) {
    try {
      x = fermat_point(origin, gens[0].apply(origin), gens[1].apply(origin));
    } catch (const NonConvergence&) {
      x = origin;
    }
  }
  const Point seed = x;
  double F = max_value(gens, x);
  double eps = 1e-2;
  double step = 1.0;
  int it = 0;
  for (; it < max_iterations && F > 1e-14; ++it) {
    std::vector<Vec2> active;
    for (const Isometry& s : gens) {
      Piece p = displacement_piece(s, x);
      if (p.value >= F - eps) active.push_back(p.grad);
    }
    Vec2 m = min_norm_hull(active);
    if (norm(m) < 1e-12) {
      if (eps < 1e-13) break;
      eps *= 0.1;
      continue;
    }
    double phi = std::atan2(-m.y, -m.x);
    auto along = [&](double t) { return max_value(gens, exp_map(x, phi, t)); };

    double b = step, fb = along(b);
    if (fb >= F) {
      while (fb >= F && b > 1e-16) {
        b *= 0.5;
        fb = along(b);
      }
      if (fb >= F) {
        if (eps < 1e-13) break;
        eps *= 0.1;
        continue;
      }
    } else {
      for (int k = 0; k < 60; ++k) {
        double f2 = along(2 * b);
        if (f2 >= fb) break;
        b *= 2;
        fb = f2;
        if (b > 4 * kEscapeRadius) break;
      }
    }
    // along() is convex in t, with its minimum inside (0, 2b).
    double lo = 0, hi = 2 * b;
    const double r = 0.5 * (std::sqrt(5.0) - 1);
    double t1 = hi - r * (hi - lo), t2 = lo + r * (hi - lo);
    double f1 = along(t1), f2 = along(t2);
    for (int k = 0; k < 80 && hi - lo > 1e-15 * (1 + hi); ++k) {
      if (f1 <= f2) {
        hi = t2;
        t2 = t1;
        f2 = f1;
        t1 = hi - r * (hi - lo);
        f1 = along(t1);
      } else {
        lo = t1;
        t1 = t2;
        f1 = f2;
        t2 = lo + r * (hi - lo);
        f2 = along(t2);
      }
    }
    double t = f1 <= f2 ? t1 : t2;
    double ft = std::min(f1, f2);
    if (fb < ft) {
      t = b;
      ft = fb;
    }
    if (!(ft < F)) {
      if (eps < 1e-13) break;
      eps *= 0.1;
      continue;
    }
    x = exp_map(x, phi, t);
    F = ft;
    step = std::max(t, 1e-8);
    if (distance(seed, x) > kEscapeRadius) {
      res.attained = false;
      break;
    }
  }
  res.d = F / plane.scale;
  res.minimizer = x;
  res.iterations = it;
  return res;
}

DisplacementResult min_displacement(const Representation& rho, const ScaledPlane& plane,
                                    int max_iterations) {
  return min_displacement(rho.images, plane, max_iterations);
}

}  // namespace surfrep
