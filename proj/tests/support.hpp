#pragma once

// Shared helpers for the test binaries: samplers and brute-force oracles that
// do not reuse the library's own algorithms.

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "surfrep/families.hpp"
#include "surfrep/group.hpp"
#include "surfrep/hyp2.hpp"
#include "surfrep/lift.hpp"
#include "surfrep/rtree.hpp"

namespace testing_support {

using namespace surfrep;

inline Point random_point(std::mt19937_64& rng, double spread = 1.5) {
  std::uniform_real_distribution<double> x(-2.0, 2.0), t(-spread, spread);
  return {x(rng), std::exp(t(rng))};
}

inline BoundaryPoint random_boundary(std::mt19937_64& rng) {
  return {std::uniform_real_distribution<double>(0.0, kPi)(rng)};
}

// Minimizes f over the half-plane by repeated grid refinement in (x, log y).
inline Point grid_minimize(const std::function<double(Point)>& f, Point center, double half_x,
                           double half_t, int rounds = 70) {
  double cx = center.x, ct = std::log(center.y);
  const int m = 40;
  for (int r = 0; r < rounds; ++r) {
    double best = std::numeric_limits<double>::infinity();
    double bx = cx, bt = ct;
    for (int i = -m; i <= m; ++i)
      for (int j = -m; j <= m; ++j) {
        double x = cx + half_x * i / m, t = ct + half_t * j / m;
        double v = f({x, std::exp(t)});
        if (v < best) {
          best = v;
          bx = x;
          bt = t;
        }
      }
    cx = bx;
    ct = bt;
    half_x *= 0.6;
    half_t *= 0.6;
  }
  return {cx, std::exp(ct)};
}

inline double max_generator_displacement(const std::vector<Isometry>& gens, Point p) {
  double v = 0;
  for (const Isometry& s : gens) v = std::max(v, distance(p, s.apply(p)));
  return v;
}

inline double grid_min_displacement(const std::vector<Isometry>& gens) {
  auto f = [&](Point p) { return max_generator_displacement(gens, p); };
  Point best = grid_minimize(f, base_point(), 30.0, 12.0);
  return f(best);
}

inline bool non_elementary(const Representation& rho) {
  // Heuristic: no common boundary fixed point and no common interior fixed point.
  for (const Isometry& s : rho.images) {
    if (s.distance_to_identity() < 1e-9) continue;
    Kind k = classify(s);
    if (k.type == Kind::Type::Elliptic) continue;
    for (const BoundaryPoint& p : boundary_fixed_points(s)) {
      bool common = true;
      for (const Isometry& t : rho.images)
        if (std::abs(boundary_gap(p, t.apply(p))) > 1e-6) common = false;
      if (common) return false;
    }
  }
  return min_displacement(rho).d > 1e-3;
}

// Random tree on n vertices, each new vertex attached to an earlier one,
// with random rotations.
inline FatTree random_fat_tree(std::mt19937_64& rng, int n) {
  FatTree F;
  std::uniform_real_distribution<double> len(0.2, 3.0);
  F.tree.add_vertex();
  for (int v = 1; v < n; ++v) {
    int parent = std::uniform_int_distribution<int>(0, v - 1)(rng);
    F.tree.add_vertex();
    F.tree.add_edge(parent, v, len(rng));
  }
  for (int v = 0; v < n; ++v) {
    std::vector<int> rot = F.tree.incident[v];
    std::shuffle(rot.begin(), rot.end(), rng);
    F.rotation.push_back(rot);
  }
  return F;
}

// Star with the given number of leaves; leaf k is vertex k + 1, rotation in leaf order.
inline FatTree star(int leaves, double length = 1.0) {
  FatTree F;
  F.tree.add_vertex();
  for (int k = 0; k < leaves; ++k) {
    int v = F.tree.add_vertex();
    F.tree.add_edge(0, v, length);
  }
  F.rotation.resize(leaves + 1);
  for (int k = 0; k <= leaves; ++k) F.rotation[k] = F.tree.incident[k];
  return F;
}

// Leaves in depth-first order from the first leaf, children visited in
// rotation order after the edge towards the parent.
inline std::vector<int> contour_sequence(const FatTree& F) {
  const MetricTree& T = F.tree;
  std::vector<int> leaves = T.leaves();
  std::vector<int> out;
  std::function<void(int, int)> visit = [&](int v, int via) {
    if (T.incident[v].size() == 1 && via >= 0) {
      out.push_back(v);
      return;
    }
    const auto& rot = F.rotation[v];
    long start = via < 0 ? 0 : (std::find(rot.begin(), rot.end(), via) - rot.begin()) + 1;
    for (std::size_t k = 0; k < rot.size(); ++k) {
      int e = rot[(start + static_cast<long>(k)) % static_cast<long>(rot.size())];
      if (e == via) continue;
      visit(T.other(e, v), e);
    }
  };
  int root = leaves[0];
  out.push_back(root);
  int e = T.incident[root][0];
  visit(T.other(e, root), e);
  return out;
}

inline std::vector<Isometry> generator_list(const Representation& rho) { return rho.images; }

}  // namespace testing_support
