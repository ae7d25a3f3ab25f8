#pragma once

// Finite metric trees, planar (fat) structures, tree isometries and the unit
// edge Bass-Serre tree of the splitting pi1(S_{g-1}) * Z.

#include <array>
#include <vector>

#include "surfrep/cyclic.hpp"
#include "surfrep/group.hpp"

namespace surfrep {

struct MetricTree {
  struct Edge {
    int u = 0, v = 0;
    double length = 1.0;
  };

  std::vector<Edge> edges;
  std::vector<std::vector<int>> incident;

  int vertex_count() const { return static_cast<int>(incident.size()); }
  int add_vertex();
  int add_edge(int u, int v, double length);
  int other(int edge, int vertex) const;
  // Connected, acyclic, positive lengths.
  bool valid() const;
  // Degree-one vertices in increasing id order (the lone vertex of a point tree).
  std::vector<int> leaves() const;
  // Weighted distances from vertex v to every vertex.
  std::vector<double> distances_from(int v) const;
  // Edge ids along the path from u to v.
  std::vector<int> edge_path(int u, int v) const;
};

// A vertex, or a point on edge `edge` at distance `offset` from its u end.
struct TreePoint {
  int vertex = -1;
  int edge = -1;
  double offset = 0.0;

  static TreePoint at_vertex(int v) { return {v, -1, 0.0}; }
  static TreePoint on_edge(int e, double t) { return {-1, e, t}; }
};

double distance(const MetricTree& T, const TreePoint& p, const TreePoint& q);
// The point of [p, q] at distance s from p (clamped to the segment).
TreePoint point_along(const MetricTree& T, const TreePoint& p, const TreePoint& q, double s);
// Median of three points.
TreePoint tripod_center(const MetricTree& T, const TreePoint& x, const TreePoint& y,
                        const TreePoint& z);
// Equal as points of the tree, up to 1e-12.
bool same_point(const MetricTree& T, const TreePoint& p, const TreePoint& q);

// rotation[v] lists the edges at v in anticlockwise order.
struct FatTree {
  MetricTree tree;
  std::vector<std::vector<int>> rotation;
};

// Throws IncoherentStructure unless every rotation is a permutation of the incident edges.
void check_fat(const FatTree& F);
// Cyclic order on F.tree.leaves() read off a contour walk.
FiniteCyclicOrder ends_order(const FatTree& F);
// Sign of the germs at the median of three points, 0 when the median is one
// of them or two of them leave through the same germ.
int tree_triple_order(const FatTree& F, const TreePoint& x, const TreePoint& y, const TreePoint& z);
// Order of the ends of the rays from x_i through y_i.  Requires x_i to lie in
// the component of T \ {y_i} holding the other two y's, else throws NotInU.
int tree_segment_order(const FatTree& F, const std::array<TreePoint, 3>& x,
                       const std::array<TreePoint, 3>& y);

// Partial vertex map; -1 marks vertices outside the domain.
struct TreeIsometry {
  std::vector<int> vertex_map;

  TreeIsometry inverse(int vertex_count) const;
};

// max(0, d(v, f^2 v) - d(v, f v)) for a vertex where f^2 is defined.
// Throws NotIsometry when distances are not preserved.
double tree_translation_length(const MetricTree& T, const TreeIsometry& f);
bool is_isometry(const MetricTree& T, const TreeIsometry& f);
// Rotations are carried to rotations wherever the map is defined around a vertex.
bool preserves_fat_structure(const FatTree& F, const TreeIsometry& f);

// One partial isometry per generator of the surface group.
struct TreeAction {
  int genus = 2;
  std::vector<TreeIsometry> generators;
};

// Euler class of the induced action on ends, from order data on the orbits
// of the leaves x0 and y0.  Trees with fewer than three leaves give 0.
// Throws OrientationNotPreserved and HypothesisViolation.
long fat_action_euler(int g, const FatTree& F, const TreeAction& action, int x0, int y0);

// Exponent sums for genus 1; evaluation under the regular Fuchsian
// representation (tolerance 1e-6) from genus 2 on.
TrivialityTest surface_triviality(int genus);
// Sum of |n_i| over the normal form of w: the displacement d(1, w 1) of the
// base vertex in the Bass-Serre tree with unit edges.
double bass_serre_length(int g, const Word& w, const TrivialityTest& trivial = {});
// Translation length of w on the same tree; a conjugacy invariant.
double bass_serre_translation_length(int g, const Word& w, const TrivialityTest& trivial = {});

}  // namespace surfrep
