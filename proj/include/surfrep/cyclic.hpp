#pragma once

// Finite cyclically ordered sets, their lifts to Z x X, and the Euler class
// computed from orbit order data.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "surfrep/group.hpp"
#include "surfrep/hyp2.hpp"
#include "surfrep/representation.hpp"

namespace surfrep {

class FiniteCyclicOrder {
 public:
  FiniteCyclicOrder() = default;
  explicit FiniteCyclicOrder(int n);

  // Order of points on the boundary circle, via boundary_order.
  static FiniteCyclicOrder from_boundary(const std::vector<BoundaryPoint>& points);
  // Elements listed in anticlockwise succession; every element must appear once.
  static FiniteCyclicOrder from_sequence(const std::vector<int>& circular);
  static FiniteCyclicOrder from_sign(int n, const std::function<int(int, int, int)>& sign);

  int size() const { return n_; }
  int operator()(int x, int y, int z) const { return table_[index(x, y, z)]; }
  void set(int x, int y, int z, int sign) { table_[index(x, y, z)] = static_cast<std::int8_t>(sign); }

 private:
  std::size_t index(int x, int y, int z) const {
    return (static_cast<std::size_t>(x) * n_ + y) * n_ + z;
  }
  int n_ = 0;
  std::vector<std::int8_t> table_;
};

// All three axioms on every triple.
bool validate(const FiniteCyclicOrder& o);
// X \ {x0} sorted by y < z iff o(x0, y, z) = 1.  Throws InvalidOrder.
std::vector<int> linearize(const FiniteCyclicOrder& o, int x0);
// Order on Z x X cut at x0: (m, y) < (n, z).
bool lifted_less(const FiniteCyclicOrder& o, int x0, long m, int y, long n, int z);

// (k, y) -> (k + level[y], image[y]).
struct LiftedOrderBijection {
  std::vector<int> image;
  std::vector<long> level;

  std::pair<long, int> operator()(long k, int y) const { return {k + level[y], image[y]}; }
};

bool preserves_order(const FiniteCyclicOrder& o, const std::vector<int>& f);
// Lift with (0, x0) -> (0, f(x0)).  Throws NotOrderPreserving.
LiftedOrderBijection lift_bijection(const FiniteCyclicOrder& o, const std::vector<int>& f, int x0);
LiftedOrderBijection compose(const LiftedOrderBijection& f, const LiftedOrderBijection& g);
LiftedOrderBijection inverse(const LiftedOrderBijection& f);
// h^k, the central shift of all levels by k.
LiftedOrderBijection level_shift(int n, long k);
// k with f = h^k g when the two lifts project to the same bijection.
std::optional<long> lift_difference(const LiftedOrderBijection& f, const LiftedOrderBijection& g);
// Strictly increasing for the order cut at x0, checked on levels 0 and 1.
bool is_increasing(const FiniteCyclicOrder& o, const LiftedOrderBijection& f, int x0);
// The bijection F_{x0 x1} over the identity, turning <_{x0} into <_{x1}.
LiftedOrderBijection transport(const FiniteCyclicOrder& o, int x0, int x1);

// Cyclic order on the points P_ref x0 and P_ref y0 (plus generator images of
// x0).  x_point[i] and y_point[i] index words[i] x0 and words[i] y0.
struct OrbitOrderData {
  int genus = 0;
  std::vector<Word> words;
  std::vector<int> x_point, y_point;
  FiniteCyclicOrder order;
};

// Orbit data from boundary points.  Points within 1e-9 are merged; any pair
// between 1e-9 and 1e-6 apart throws HypothesisViolation.
OrbitOrderData orbit_order_data(const Representation& rho, BoundaryPoint x0, BoundaryPoint y0);
// Draws x0, y0 until orbit_order_data succeeds and its hypotheses hold.
OrbitOrderData sample_orbit_order_data(const Representation& rho, std::mt19937_64& rng,
                                       int attempts = 50);
// Orbit data of an action by permutations of a finite cyclically ordered set.
OrbitOrderData orbit_order_data(int genus, const FiniteCyclicOrder& o,
                                const std::vector<std::vector<int>>& generators, int x0, int y0);

// Milnor's algorithm run on levels of lifted order bijections.  Data where
// every word fixes x0 and y0 gives 0.  Otherwise throws HypothesisViolation
// when x0 lies in P_ref y0, |P_ref y0| < 2 or the order is not valid.
long euler_from_order_data(const OrbitOrderData& data);

// Sign of o(A^i a, A^j a, A^k a).
using PowerOrderOracle = std::function<int(long, long, long)>;
// Oracle for an isometry acting on the boundary, powers by repeated squaring.
PowerOrderOracle isometry_power_oracle(const Isometry& A, BoundaryPoint a);

struct DyadicAngle {
  std::vector<int> digits;
  bool terminated = false;
  double value = 0.0;
};

// Binary digits of theta/pi read from o(a, A^{2^{n-1}} a, A^{2^n} a): sign -1
// gives digit 1, +1 gives digit 0, and 0 gives a final digit 1.
// Throws DegenerateAngle when the first probe is already 0.
DyadicAngle dyadic_angle_recovery(const PowerOrderOracle& oracle, int bits);

// True when some triple of ball(depth) orbit points has different signs.
bool order_distinguishes(const Representation& rho1, const Representation& rho2,
                         BoundaryPoint a1, BoundaryPoint a2, int depth);

}  // namespace surfrep
