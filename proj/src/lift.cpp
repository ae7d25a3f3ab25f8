#include "surfrep/lift.hpp"

#include <cmath>
#include <cstdlib>

#include "surfrep/group.hpp"

namespace surfrep {

namespace {

long round_checked(double value, const char* what) {
  double r = std::round(value);
  if (std::abs(value - r) > 1e-6) throw BranchAmbiguity(what);
  return static_cast<long>(r);
}

}  // namespace

double canonical_angle(const Isometry& A) { return wrap_pi(std::atan2(A.c, A.a)); }

double LiftedIsometry::at(double x) const {
  double k = std::floor(x / kPi);
  double r = x - k * kPi;
  double v0x = base.a, v0y = base.c;
  double cr = std::cos(r), sr = std::sin(r);
  double vx = base.a * cr + base.b * sr, vy = base.c * cr + base.d * sr;
  double delta = std::atan2(v0x * vy - v0y * vx, v0x * vx + v0y * vy);
  if (delta < -kPi / 2)
    delta += 2 * kPi;
  else if (delta < 0)
    delta = 0;
  return (k + static_cast<double>(branch)) * kPi + canonical_angle(base) + delta;
}

LiftedIsometry canonical_lift(const Isometry& A) { return {A, 0}; }

LiftedIsometry z_shift(long k) { return {Isometry::identity(), k}; }

LiftedIsometry compose(const LiftedIsometry& L1, const LiftedIsometry& L2) {
  Isometry base = (L1.base * L2.base).normalized();
  double value = (L1.at(L2.at(0.0)) - canonical_angle(base)) / kPi;
  return {base, round_checked(value, "composition cocycle is not near an integer")};
}

LiftedIsometry inverse(const LiftedIsometry& L) {
  Isometry base = L.base.inverse();
  // F(c(A^-1)) is a multiple of pi; the inverse lift sends 0 back there.
  double value = -L.at(canonical_angle(base)) / kPi;
  return {base, round_checked(value, "inverse lift is not near an integer")};
}

long power_of_z(const LiftedIsometry& L) {
  if (L.base.distance_to_identity() > 1e-9) throw NotCentral("lift does not project to identity");
  return round_checked(L.at(0.0) / kPi, "central lift is not a translation by a multiple of pi");
}

double rotation_number(const LiftedIsometry& L, int iterations) {
  double x = 0;
  for (int i = 0; i < iterations; ++i) x = L.at(x);
  return x / (iterations * kPi);
}

long euler_milnor(const Representation& rho, const std::vector<LiftedIsometry>& lifts) {
  double residual = relator_residual(rho);
  if (!(residual < 1e-6)) throw InvalidRepresentation("relator residual too large");

  // Generators sent exactly to the identity lift to central elements and are
  // pulled out before multiplying; cancelling pairs are then exact.
  long central = 0;
  Word kept;
  for (int x : relator(rho.genus)) {
    const LiftedIsometry& L = lifts[std::abs(x) - 1];
    if (L.base.is_exact_identity())
      central += x > 0 ? L.branch : -L.branch;
    else
      kept.push_back(x);
  }
  LiftedIsometry product = z_shift(0);
  for (int x : reduce(kept)) {
    const LiftedIsometry& L = lifts[std::abs(x) - 1];
    product = compose(product, x > 0 ? L : inverse(L));
  }
  if (product.base.distance_to_identity() > 1e-6)
    throw BranchAmbiguity("lifted relator does not project to the identity");
  return central + round_checked(product.at(0.0) / kPi, "lifted relator is not central");
}

long euler_milnor(const Representation& rho) {
  std::vector<LiftedIsometry> lifts;
  for (const Isometry& s : rho.images) lifts.push_back(canonical_lift(s));
  return euler_milnor(rho, lifts);
}

}  // namespace surfrep
