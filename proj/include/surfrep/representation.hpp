#pragma once

#include <vector>

#include "surfrep/hyp2.hpp"

namespace surfrep {

// Images of a1, b1, ..., ag, bg.  residual caches the relator residual.
struct Representation {
  int genus = 0;
  std::vector<Isometry> images;
  double residual = 0.0;

  const Isometry& a(int i) const { return images[2 * (i - 1)]; }
  const Isometry& b(int i) const { return images[2 * (i - 1) + 1]; }
  // Generator index k in 1..2g.
  const Isometry& gen(int k) const { return images[k - 1]; }
};

}  // namespace surfrep
