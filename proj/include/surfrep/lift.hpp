#pragma once

// Lifts of boundary actions to the line.  The boundary circle has period pi in
// the angle coordinate, so z, the generator of the center, is translation by +pi.

#include <vector>

#include "surfrep/hyp2.hpp"
#include "surfrep/representation.hpp"

namespace surfrep {

// F = F0 + branch * pi where F0 is the lift with F0(0) in [0, pi).
struct LiftedIsometry {
  Isometry base;
  long branch = 0;

  double at(double x) const;
};

// Angle in [0, pi) of the image of the boundary point 0.
double canonical_angle(const Isometry& A);
LiftedIsometry canonical_lift(const Isometry& A);
LiftedIsometry z_shift(long k);
LiftedIsometry compose(const LiftedIsometry& L1, const LiftedIsometry& L2);
LiftedIsometry inverse(const LiftedIsometry& L);
long power_of_z(const LiftedIsometry& L);
double rotation_number(const LiftedIsometry& L, int iterations);

long euler_milnor(const Representation& rho);
// Same computation with arbitrary lifts of the generators (one per generator).
long euler_milnor(const Representation& rho, const std::vector<LiftedIsometry>& lifts);

}  // namespace surfrep
