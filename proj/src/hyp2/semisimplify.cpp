#include <cmath>

#include "surfrep/group.hpp"
#include "surfrep/hyp2.hpp"
#include "surfrep/representation.hpp"

namespace surfrep {

Representation semisimplify(const Representation& rho, BoundaryPoint r1) {
  Representation out;
  out.genus = rho.genus;
  double x = std::cos(r1.theta), y = std::sin(r1.theta);
  for (const Isometry& s : rho.images) {
    if (std::abs(boundary_gap(r1, s.apply(r1))) > 1e-9)
      throw NotFixing("a generator moves the boundary point");
    // s v = mu v on the fixed direction.  Output: diagonal part in a frame
    // sending r1 to infinity.
    double mu = (s.a * x + s.b * y) * x + (s.c * x + s.d * y) * y;
    double lambda = std::abs(mu);
    out.images.push_back({lambda, 0.0, 0.0, 1.0 / lambda});
  }
  out.residual = relator_residual(out);
  return out;
}

}  // namespace surfrep
