#include "surfrep/rtree.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "surfrep/families.hpp"

namespace surfrep {

int MetricTree::add_vertex() {
  incident.emplace_back();
  return vertex_count() - 1;
}

int MetricTree::add_edge(int u, int v, double length) {
  edges.push_back({u, v, length});
  int id = static_cast<int>(edges.size()) - 1;
  incident[u].push_back(id);
  incident[v].push_back(id);
  return id;
}

int MetricTree::other(int edge, int vertex) const {
  const Edge& e = edges[edge];
  return e.u == vertex ? e.v : e.u;
}

bool MetricTree::valid() const {
  const int n = vertex_count();
  if (n == 0) return false;
  if (static_cast<int>(edges.size()) != n - 1) return false;
  for (const Edge& e : edges)
    if (!(e.length > 0) || e.u == e.v || e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) return false;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int e : incident[v]) {
      int w = other(e, v);
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

std::vector<int> MetricTree::leaves() const {
  std::vector<int> out;
  if (vertex_count() == 1) return {0};
  for (int v = 0; v < vertex_count(); ++v)
    if (incident[v].size() == 1) out.push_back(v);
  return out;
}

std::vector<double> MetricTree::distances_from(int v) const {
  std::vector<double> d(vertex_count(), std::numeric_limits<double>::infinity());
  d[v] = 0;
  std::vector<int> stack{v};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int e : incident[x]) {
      int w = other(e, x);
      if (std::isinf(d[w])) {
        d[w] = d[x] + edges[e].length;
        stack.push_back(w);
      }
    }
  }
  return d;
}

std::vector<int> MetricTree::edge_path(int u, int v) const {
  std::vector<int> parent_edge(vertex_count(), -2);
  parent_edge[u] = -1;
  std::vector<int> stack{u};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    if (x == v) break;
    for (int e : incident[x]) {
      int w = other(e, x);
      if (parent_edge[w] == -2) {
        parent_edge[w] = e;
        stack.push_back(w);
      }
    }
  }
  std::vector<int> path;
  for (int x = v; x != u; x = other(parent_edge[x], x)) path.push_back(parent_edge[x]);
  std::reverse(path.begin(), path.end());
  return path;
}

namespace {

constexpr double kTreeTolerance = 1e-12;

struct End {
  int vertex;
  double reach;
};

std::vector<End> ends_of(const MetricTree& T, const TreePoint& p) {
  if (p.vertex >= 0) return {{p.vertex, 0.0}};
  const auto& e = T.edges[p.edge];
  return {{e.u, p.offset}, {e.v, e.length - p.offset}};
}

TreePoint normalize(const MetricTree& T, TreePoint p) {
  if (p.vertex >= 0) return p;
  const auto& e = T.edges[p.edge];
  if (p.offset <= kTreeTolerance) return TreePoint::at_vertex(e.u);
  if (p.offset >= e.length - kTreeTolerance) return TreePoint::at_vertex(e.v);
  return p;
}

// Point at distance s from `from` along edge `edge`, which starts at vertex `from`.
TreePoint along_edge(const MetricTree& T, int edge, int from, double s) {
  const auto& e = T.edges[edge];
  return normalize(T, TreePoint::on_edge(edge, e.u == from ? s : e.length - s));
}

}  // namespace

double distance(const MetricTree& T, const TreePoint& p, const TreePoint& q) {
  if (p.vertex < 0 && q.vertex < 0 && p.edge == q.edge) return std::abs(p.offset - q.offset);
  double best = std::numeric_limits<double>::infinity();
  for (const End& a : ends_of(T, p)) {
    std::vector<double> d = T.distances_from(a.vertex);
    for (const End& b : ends_of(T, q)) best = std::min(best, a.reach + d[b.vertex] + b.reach);
  }
  return best;
}

TreePoint point_along(const MetricTree& T, const TreePoint& p, const TreePoint& q, double s) {
  double total = distance(T, p, q);
  s = std::clamp(s, 0.0, total);
  if (p.vertex < 0 && q.vertex < 0 && p.edge == q.edge) {
    double dir = q.offset >= p.offset ? 1.0 : -1.0;
    return normalize(T, TreePoint::on_edge(p.edge, p.offset + dir * s));
  }
  End a{-1, 0}, b{-1, 0};
  double best = std::numeric_limits<double>::infinity();
  for (const End& ea : ends_of(T, p)) {
    std::vector<double> d = T.distances_from(ea.vertex);
    for (const End& eb : ends_of(T, q)) {
      double len = ea.reach + d[eb.vertex] + eb.reach;
      if (len < best) {
        best = len;
        a = ea;
        b = eb;
      }
    }
  }
  // Leg on p's own edge.
  if (s <= a.reach) {
    if (p.vertex >= 0) return p;
    return along_edge(T, p.edge, a.vertex, a.reach - s);
  }
  s -= a.reach;
  int v = a.vertex;
  for (int e : T.edge_path(a.vertex, b.vertex)) {
    double len = T.edges[e].length;
    if (s <= len) return along_edge(T, e, v, s);
    s -= len;
    v = T.other(e, v);
  }
  if (q.vertex >= 0) return q;
  return along_edge(T, q.edge, b.vertex, std::min(s, b.reach));
}

TreePoint tripod_center(const MetricTree& T, const TreePoint& x, const TreePoint& y,
                        const TreePoint& z) {
  double s = 0.5 * (distance(T, x, y) + distance(T, x, z) - distance(T, y, z));
  return point_along(T, x, y, s);
}

bool same_point(const MetricTree& T, const TreePoint& p, const TreePoint& q) {
  return distance(T, p, q) <= kTreeTolerance;
}

void check_fat(const FatTree& F) {
  const MetricTree& T = F.tree;
  if (static_cast<int>(F.rotation.size()) != T.vertex_count())
    throw IncoherentStructure("one rotation per vertex required");
  for (int v = 0; v < T.vertex_count(); ++v) {
    std::vector<int> a = F.rotation[v], b = T.incident[v];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw IncoherentStructure("rotation is not a permutation of the incident edges");
  }
}

FiniteCyclicOrder ends_order(const FatTree& F) {
  check_fat(F);
  const MetricTree& T = F.tree;
  std::vector<int> leaves = T.leaves();
  std::vector<int> leaf_index(T.vertex_count(), -1);
  for (std::size_t i = 0; i < leaves.size(); ++i) leaf_index[leaves[i]] = static_cast<int>(i);
  if (leaves.size() < 3) {
    std::vector<int> seq(leaves.size());
    for (std::size_t i = 0; i < seq.size(); ++i) seq[i] = static_cast<int>(i);
    return FiniteCyclicOrder::from_sequence(seq);
  }
  std::vector<int> seq{0};
  int v = leaves[0];
  int e = T.incident[v][0];
  for (std::size_t step = 0; step < 2 * T.edges.size(); ++step) {
    int w = T.other(e, v);
    if (leaf_index[w] >= 0 && w != leaves[0]) seq.push_back(leaf_index[w]);
    const auto& rot = F.rotation[w];
    auto pos = std::find(rot.begin(), rot.end(), e) - rot.begin();
    e = rot[(pos + 1) % static_cast<long>(rot.size())];
    v = w;
  }
  return FiniteCyclicOrder::from_sequence(seq);
}

namespace {

// First edge from vertex c towards point p (p != c).
int germ(const MetricTree& T, int c, const TreePoint& p) {
  if (p.vertex >= 0) return T.edge_path(c, p.vertex).front();
  const auto& e = T.edges[p.edge];
  if (e.u == c || e.v == c) return p.edge;
  std::vector<double> d = T.distances_from(c);
  int end = d[e.u] < d[e.v] ? e.u : e.v;
  return T.edge_path(c, end).front();
}

}  // namespace

int tree_triple_order(const FatTree& F, const TreePoint& x, const TreePoint& y, const TreePoint& z) {
  const MetricTree& T = F.tree;
  TreePoint c = normalize(T, tripod_center(T, x, y, z));
  if (same_point(T, c, x) || same_point(T, c, y) || same_point(T, c, z)) return 0;
  if (c.vertex < 0) return 0;
  const auto& rot = F.rotation[c.vertex];
  const long deg = static_cast<long>(rot.size());
  std::array<long, 3> pos;
  std::array<const TreePoint*, 3> pts{&x, &y, &z};
  for (int i = 0; i < 3; ++i) {
    int g = germ(T, c.vertex, *pts[i]);
    pos[i] = std::find(rot.begin(), rot.end(), g) - rot.begin();
  }
  if (pos[0] == pos[1] || pos[1] == pos[2] || pos[0] == pos[2]) return 0;
  long py = (pos[1] - pos[0] + deg) % deg, pz = (pos[2] - pos[0] + deg) % deg;
  return py < pz ? 1 : -1;
}

int tree_segment_order(const FatTree& F, const std::array<TreePoint, 3>& x,
                       const std::array<TreePoint, 3>& y) {
  const MetricTree& T = F.tree;
  for (int i = 0; i < 3; ++i) {
    double dxy = distance(T, x[i], y[i]);
    if (dxy <= kTreeTolerance) throw NotInU("segment of length zero");
    for (int j = 0; j < 3; ++j) {
      if (j == i) continue;
      if (dxy + distance(T, y[i], y[j]) - distance(T, x[i], y[j]) <= 1e-9)
        throw NotInU("x_i is cut off from the other endpoints by y_i");
    }
  }
  return tree_triple_order(F, y[0], y[1], y[2]);
}

TreeIsometry TreeIsometry::inverse(int vertex_count) const {
  TreeIsometry out{std::vector<int>(vertex_count, -1)};
  for (std::size_t v = 0; v < vertex_map.size(); ++v)
    if (vertex_map[v] >= 0) out.vertex_map[vertex_map[v]] = static_cast<int>(v);
  return out;
}

bool is_isometry(const MetricTree& T, const TreeIsometry& f) {
  const int n = T.vertex_count();
  if (static_cast<int>(f.vertex_map.size()) != n) return false;
  std::vector<bool> hit(n, false);
  for (int w : f.vertex_map) {
    if (w < -1 || w >= n) return false;
    if (w >= 0) {
      if (hit[w]) return false;
      hit[w] = true;
    }
  }
  for (int u = 0; u < n; ++u) {
    if (f.vertex_map[u] < 0) continue;
    std::vector<double> du = T.distances_from(u), dfu = T.distances_from(f.vertex_map[u]);
    for (int v = 0; v < n; ++v)
      if (f.vertex_map[v] >= 0 && std::abs(du[v] - dfu[f.vertex_map[v]]) > 1e-9) return false;
  }
  return true;
}

double tree_translation_length(const MetricTree& T, const TreeIsometry& f) {
  if (!is_isometry(T, f)) throw NotIsometry("map does not preserve distances");
  for (int v = 0; v < T.vertex_count(); ++v) {
    int fv = f.vertex_map[v];
    if (fv < 0 || f.vertex_map[fv] < 0) continue;
    std::vector<double> d = T.distances_from(v);
    return std::max(0.0, d[f.vertex_map[fv]] - d[fv]);
  }
  throw NotIsometry("map has no vertex where its square is defined");
}

bool preserves_fat_structure(const FatTree& F, const TreeIsometry& f) {
  const MetricTree& T = F.tree;
  for (int v = 0; v < T.vertex_count(); ++v) {
    int w = f.vertex_map[v];
    if (w < 0) continue;
    std::vector<long> pos;
    for (int e : F.rotation[v]) {
      int fn = f.vertex_map[T.other(e, v)];
      if (fn < 0) continue;
      const auto& rot = F.rotation[w];
      auto it = std::find_if(rot.begin(), rot.end(), [&](int e2) { return T.other(e2, w) == fn; });
      if (it == rot.end()) return false;
      pos.push_back(it - rot.begin());
    }
    if (pos.size() < 3) continue;
    // Cyclically increasing iff the forward gaps add up to exactly one turn.
    const long deg = static_cast<long>(F.rotation[w].size());
    long turn = 0;
    for (std::size_t k = 0; k < pos.size(); ++k) {
      long gap = (pos[(k + 1) % pos.size()] - pos[k] + deg) % deg;
      if (gap == 0) return false;
      turn += gap;
    }
    if (turn != deg) return false;
  }
  return true;
}

long fat_action_euler(int g, const FatTree& F, const TreeAction& action, int x0, int y0) {
  check_fat(F);
  const MetricTree& T = F.tree;
  std::vector<int> leaves = T.leaves();
  if (leaves.size() < 3) return 0;
  if (static_cast<int>(action.generators.size()) != 2 * g)
    throw HypothesisViolation("need one tree map per generator");
  std::vector<TreeIsometry> inverses;
  for (const TreeIsometry& f : action.generators) {
    if (!is_isometry(T, f)) throw NotIsometry("generator is not a tree isometry");
    if (!preserves_fat_structure(F, f)) throw OrientationNotPreserved("generator reverses a rotation");
    inverses.push_back(f.inverse(T.vertex_count()));
  }
  std::vector<int> leaf_index(T.vertex_count(), -1);
  for (std::size_t i = 0; i < leaves.size(); ++i) leaf_index[leaves[i]] = static_cast<int>(i);
  if (leaf_index[x0] < 0 || leaf_index[y0] < 0) throw HypothesisViolation("base points must be leaves");

  auto act = [&](const Word& w, int v) {
    for (auto it = w.rbegin(); it != w.rend() && v >= 0; ++it) {
      const TreeIsometry& f = *it > 0 ? action.generators[*it - 1] : inverses[-*it - 1];
      v = f.vertex_map[v];
    }
    if (v < 0 || leaf_index[v] < 0) throw HypothesisViolation("orbit leaves the truncated tree");
    return v;
  };

  FiniteCyclicOrder ends = ends_order(F);
  OrbitOrderData data;
  data.genus = g;
  data.words = orbit_words(g);
  std::vector<int> slot(T.vertex_count(), -1), kept;
  auto index = [&](int v) {
    if (slot[v] < 0) {
      slot[v] = static_cast<int>(kept.size());
      kept.push_back(leaf_index[v]);
    }
    return slot[v];
  };
  for (const Word& w : data.words) {
    data.x_point.push_back(index(act(w, x0)));
    data.y_point.push_back(index(act(w, y0)));
  }
  data.order = FiniteCyclicOrder::from_sign(static_cast<int>(kept.size()), [&](int a, int b, int c) {
    return ends(kept[a], kept[b], kept[c]);
  });
  return euler_from_order_data(data);
}

TrivialityTest surface_triviality(int genus) {
  if (genus <= 0) return [](const Word& w) { return reduce(w).empty(); };
  if (genus == 1) {
    return [](const Word& w) {
      long a = 0, b = 0;
      for (int x : w) (std::abs(x) == 1 ? a : b) += x > 0 ? 1 : -1;
      return a == 0 && b == 0;
    };
  }
  Representation rho = fuchsian_regular(genus);
  return [rho](const Word& w) { return evaluate(rho, w).distance_to_identity() < 1e-6; };
}

double bass_serre_length(int g, const Word& w, const TrivialityTest& trivial) {
  return static_cast<double>(free_product_normal_form(w, g, trivial).z_length());
}

double bass_serre_translation_length(int g, const Word& w, const TrivialityTest& trivial) {
  return static_cast<double>(cyclic_z_length(free_product_normal_form(w, g, trivial), trivial));
}

}  // namespace surfrep
