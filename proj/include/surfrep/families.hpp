#pragma once

#include <cstdint>
#include <random>

#include "surfrep/hyp2.hpp"
#include "surfrep/representation.hpp"

namespace surfrep {

// Side pairings of the regular 4g-gon with vertex angle 2 pi / (4g).
Representation fuchsian_regular(int g);
// Circumradius of that polygon, found by bisection on the vertex angle.
double regular_polygon_radius(int g);

// a1 -> X, a2 -> Y, every other generator -> identity.
Representation free_factor_rep(int g, const Isometry& X, const Isometry& Y);

// Isometry M with M(i) = x0 whose conjugate of z -> e^t z has attracting point a0.
Isometry axis_frame(Point x0, BoundaryPoint a0);
// Hyperbolic element with axis through x0, attracting point a0, translation length n.
Isometry degenerating_element(Point x0, BoundaryPoint a0, double n);
// Genus g + 1 representation: base on the first handles, a_{g+1} -> 1,
// b_{g+1} -> degenerating_element(x0, a0, n).
Representation rho_n_prime(const Representation& base, BoundaryPoint a0, Point x0, long n);
// Throws FixedBoundaryPoint when some base generator fixes a0 within 1e-6.
void check_not_fixed(const Representation& base, BoundaryPoint a0);

// Restriction to the index-two subgroup killed by a_g -> 1 in Z/2.
Representation double_cover_pullback(const Representation& rho);

// Random relator-valid representation; the last handle is solved by Newton's method.
Representation random_representation(int g, std::uint64_t seed);
// Random element of PSL(2, R) with entries drawn from (-2, 2) before normalization.
Isometry random_isometry(std::mt19937_64& rng);
// Independent seed for the i-th sample of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t i);

}  // namespace surfrep
