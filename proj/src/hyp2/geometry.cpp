#include <algorithm>
#include <cmath>
#include <limits>

#include "surfrep/hyp2.hpp"

namespace surfrep {

namespace {

constexpr double kBoundaryTolerance = 1e-12;

bool boundary_close(double s, double t) {
  double g = wrap_pi(s - t);
  return g < kBoundaryTolerance || g > kPi - kBoundaryTolerance;
}

}  // namespace

double wrap_pi(double theta) {
  double r = std::fmod(theta, kPi);
  if (r < 0) r += kPi;
  if (r >= kPi) r -= kPi;
  return r;
}

BoundaryPoint boundary_from_real(double t) { return {wrap_pi(std::atan2(1.0, t))}; }

double boundary_to_real(BoundaryPoint p) {
  if (p.theta == 0.0) return std::numeric_limits<double>::infinity();
  return std::cos(p.theta) / std::sin(p.theta);
}

double boundary_gap(BoundaryPoint p, BoundaryPoint q) {
  double g = wrap_pi(q.theta - p.theta);
  return g > kPi / 2 ? g - kPi : g;
}

Isometry Isometry::from_entries(double a, double b, double c, double d) {
  double det = a * d - b * c;
  if (!(det > 0)) throw NotIsometry("matrix determinant is not positive");
  double s = 1.0 / std::sqrt(det);
  return {a * s, b * s, c * s, d * s};
}

Isometry Isometry::rotation(double theta) {
  double c = std::cos(theta), s = std::sin(theta);
  return {c, -s, s, c};
}

Isometry Isometry::axial(double t) { return {std::exp(t / 2), 0.0, 0.0, std::exp(-t / 2)}; }

Isometry Isometry::translation_to(Point p) {
  double r = std::sqrt(p.y);
  return {r, p.x / r, 0.0, 1.0 / r};
}

Isometry Isometry::rotation_about(Point p, double theta) {
  return conjugate(translation_to(p), rotation(theta));
}

Isometry Isometry::normalized() const { return from_entries(a, b, c, d); }

Isometry Isometry::operator*(const Isometry& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Complex Isometry::apply(Complex z) const { return (a * z + b) / (c * z + d); }

Point Isometry::apply(Point p) const {
  Complex z = p.z(), w = c * z + d;
  double n = std::norm(w);
  return {((a * z + b) * std::conj(w)).real() / n, p.y / n};
}

BoundaryPoint Isometry::apply(BoundaryPoint p) const {
  double x = std::cos(p.theta), y = std::sin(p.theta);
  return {wrap_pi(std::atan2(c * x + d * y, a * x + b * y))};
}

bool Isometry::is_exact_identity() const {
  return b == 0.0 && c == 0.0 && ((a == 1.0 && d == 1.0) || (a == -1.0 && d == -1.0));
}

double Isometry::distance_to_identity() const {
  double plus = std::max({std::abs(a - 1), std::abs(b), std::abs(c), std::abs(d - 1)});
  double minus = std::max({std::abs(a + 1), std::abs(b), std::abs(c), std::abs(d + 1)});
  return std::min(plus, minus);
}

Isometry conjugate(const Isometry& g, const Isometry& A) { return g * A * g.inverse(); }

Isometry mirror(const Isometry& A) { return {A.a, -A.b, -A.c, A.d}; }

Point mirror(Point p) { return {-p.x, p.y}; }

double distance(Point p, Point q) {
  double dx = p.x - q.x, dy = p.y - q.y;
  return 2.0 * std::asinh(std::hypot(dx, dy) / (2.0 * std::sqrt(p.y * q.y)));
}

Kind classify(const Isometry& A) {
  if (A.distance_to_identity() <= kTraceTolerance) return {Kind::Type::Identity, 0.0};
  double tr = A.trace();
  double t = std::abs(tr);
  if (std::abs(t - 2.0) <= kTraceTolerance) return {Kind::Type::Parabolic, 0.0};
  if (t > 2.0) return {Kind::Type::Hyperbolic, 2.0 * std::acosh(t / 2.0)};
  double base = std::acos(t / 2.0);
  double c = tr < 0 ? -A.c : A.c;
  return {Kind::Type::Elliptic, c > 0 ? base : kPi - base};
}

std::vector<BoundaryPoint> boundary_fixed_points(const Isometry& A) {
  Kind k = classify(A);
  if (k.type == Kind::Type::Identity) throw IdentityInput("identity fixes the whole boundary");
  if (k.type == Kind::Type::Elliptic) return {};
  // Fixed directions are the isotropic lines of c x^2 + (d - a) x y - b y^2.
  double p = A.c, r = 0.5 * (A.d - A.a), s = -A.b;
  double phi = 0.5 * std::atan2(2 * r, p - s);
  double mean = 0.5 * (p + s), rad = std::hypot(0.5 * (p - s), r);
  double lp = mean + rad, lm = mean - rad;
  if (k.type == Kind::Type::Parabolic) {
    return {BoundaryPoint{wrap_pi(std::abs(lp) < std::abs(lm) ? phi : phi + kPi / 2)}};
  }
  double psi = std::atan(std::sqrt(std::max(0.0, lp / -lm)));
  BoundaryPoint u{wrap_pi(phi + psi)}, v{wrap_pi(phi - psi)};
  auto stretch = [&](BoundaryPoint q) {
    double x = std::cos(q.theta), y = std::sin(q.theta);
    return std::abs((A.a * x + A.b * y) * x + (A.c * x + A.d * y) * y);
  };
  if (stretch(u) < stretch(v)) std::swap(u, v);
  return {u, v};
}

int boundary_order(BoundaryPoint a, BoundaryPoint b, BoundaryPoint c) {
  if (boundary_close(a.theta, b.theta) || boundary_close(b.theta, c.theta) ||
      boundary_close(a.theta, c.theta))
    return 0;
  return wrap_pi(b.theta - a.theta) < wrap_pi(c.theta - a.theta) ? 1 : -1;
}

Point exp_map(Point p, double phi, double t) {
  Complex zeta = std::tanh(t / 2) * std::polar(1.0, phi - kPi / 2);
  Complex q = Complex(0, 1) * (1.0 + zeta) / (1.0 - zeta);
  return {p.x + p.y * q.real(), p.y * q.imag()};
}

double direction_to(Point p, Point q) {
  Complex w = (q.z() - p.x) / p.y;
  Complex zeta = (w - Complex(0, 1)) / (w + Complex(0, 1));
  return std::arg(zeta) + kPi / 2;
}

BoundaryPoint ray_endpoint(Point x, Point y) {
  double psi = direction_to(x, y) - kPi / 2;
  BoundaryPoint local{wrap_pi(kPi - psi / 2)};
  return Isometry::translation_to(x).apply(local);
}

bool fat_triple_predicate(Point x1, Point x2, Point x3, double A, const ScaledPlane& plane) {
  double d12 = plane.distance(x1, x2), d23 = plane.distance(x2, x3),
         d13 = plane.distance(x1, x3);
  // excesses within rounding of 2A do not count
  double t = 2 * A + 1e-12 * (d12 + d23 + d13);
  return d12 + d23 - d13 > t && d12 + d13 - d23 > t && d13 + d23 - d12 > t;
}

bool convex_condition(const std::array<Point, 3>& x, const std::array<Point, 3>& y) {
  for (int i = 0; i < 3; ++i) {
    double lhs = 0, rhs = 0;
    for (int j = 0; j < 3; ++j) {
      lhs += distance(x[i], y[j]);
      rhs += distance(y[i], y[j]);
    }
    if (!(lhs < rhs)) return false;
  }
  return true;
}

int segment_order(Point x1, Point x2, Point x3, Point y1, Point y2, Point y3) {
  const std::array<Point, 3> xs{x1, x2, x3}, ys{y1, y2, y3};
  std::array<BoundaryPoint, 3> e;
  for (int i = 0; i < 3; ++i) {
    if (distance(xs[i], ys[i]) < 1e-12) throw NotInU("segment of zero length");
    e[i] = ray_endpoint(xs[i], ys[i]);
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (std::abs(boundary_gap(e[i], e[j])) < 1e-9) throw NotInU("rays share an endpoint");
  return boundary_order(e[0], e[1], e[2]);
}

}  // namespace surfrep
