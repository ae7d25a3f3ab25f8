#include <algorithm>
#include <cmath>

#include "surfrep/hyp2.hpp"

namespace surfrep {

namespace {

double log_cosh(double x) {
  x = std::abs(x);
  return x + std::log1p(std::exp(-2 * x)) - std::log(2.0);
}

// log(2 cosh^2 x) - log(cosh(x d12) + cosh(x d23)); negative below the root.
double excess(double x, double d12, double d23) {
  double u = log_cosh(x * d12), v = log_cosh(x * d23);
  double m = std::max(u, v);
  double rhs = m + std::log(std::exp(u - m) + std::exp(v - m));
  return std::log(2.0) + 2 * log_cosh(x) - rhs;
}

}  // namespace

double delta_estimate(const Quadruple& q) {
  constexpr double tol = 1e-6;
  if (std::abs(q.dAB1 - 1) > tol || std::abs(q.dAB2 - 1) > tol || std::abs(q.dAB3 - 1) > tol ||
      std::abs(q.dB1B3 - 2) > tol || std::abs(q.dB1B2 - q.dB2B3) > tol)
    throw NotBig("quadruple violates the big conditions");
  if (q.dB1B2 >= 2 - 1e-12 && q.dB2B3 >= 2 - 1e-12) return 0.0;

  double lo = 1e-6, hi = 1.0;
  if (excess(lo, q.dB1B2, q.dB2B3) >= 0) throw NotBig("quadruple flatter than any scaled plane");
  while (excess(hi, q.dB1B2, q.dB2B3) < 0) {
    hi *= 2;
    if (hi > 1e12) return 0.0;
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    double mid = 0.5 * (lo + hi);
    (excess(mid, q.dB1B2, q.dB2B3) < 0 ? lo : hi) = mid;
  }
  return kDeltaH2 / (0.5 * (lo + hi));
}

double delta_estimate(const std::array<Point, 4>& quad, const ScaledPlane& plane) {
  Quadruple q;
  q.dAB1 = plane.distance(quad[0], quad[1]);
  q.dAB2 = plane.distance(quad[0], quad[2]);
  q.dAB3 = plane.distance(quad[0], quad[3]);
  q.dB1B2 = plane.distance(quad[1], quad[2]);
  q.dB1B3 = plane.distance(quad[1], quad[3]);
  q.dB2B3 = plane.distance(quad[2], quad[3]);
  return delta_estimate(q);
}

std::array<Point, 4> big_quadruple(const ScaledPlane& plane, Point center) {
  double s = plane.scale;
  return {center, exp_map(center, kPi / 2, s), exp_map(center, 0.0, s),
          exp_map(center, -kPi / 2, s)};
}

}  // namespace surfrep
