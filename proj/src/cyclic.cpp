#include "surfrep/cyclic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace surfrep {

FiniteCyclicOrder::FiniteCyclicOrder(int n)
    : n_(n), table_(static_cast<std::size_t>(n) * n * n, 0) {}

FiniteCyclicOrder FiniteCyclicOrder::from_sign(int n, const std::function<int(int, int, int)>& sign) {
  FiniteCyclicOrder o(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) o.set(x, y, z, sign(x, y, z));
  return o;
}

FiniteCyclicOrder FiniteCyclicOrder::from_boundary(const std::vector<BoundaryPoint>& points) {
  return from_sign(static_cast<int>(points.size()),
                   [&](int x, int y, int z) { return boundary_order(points[x], points[y], points[z]); });
}

FiniteCyclicOrder FiniteCyclicOrder::from_sequence(const std::vector<int>& circular) {
  const int n = static_cast<int>(circular.size());
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    if (circular[i] < 0 || circular[i] >= n || pos[circular[i]] >= 0)
      throw InvalidOrder("circular sequence is not a permutation");
    pos[circular[i]] = i;
  }
  return from_sign(n, [&](int x, int y, int z) {
    if (x == y || y == z || x == z) return 0;
    int py = (pos[y] - pos[x] + n) % n, pz = (pos[z] - pos[x] + n) % n;
    return py < pz ? 1 : -1;
  });
}

namespace {

// rank[y] = #{z : z <_{x0} y}; empty when <_{x0} is not a strict total order.
std::vector<int> ranks(const FiniteCyclicOrder& o, int x0) {
  const int n = o.size();
  std::vector<int> rank(n, -1);
  std::vector<bool> used(n, false);
  for (int y = 0; y < n; ++y) {
    if (y == x0) continue;
    int r = 0;
    for (int z = 0; z < n; ++z)
      if (z != x0 && z != y && o(x0, z, y) == 1) ++r;
    if (r >= n - 1 || used[r]) return {};
    used[r] = true;
    rank[y] = r;
  }
  for (int y = 0; y < n; ++y)
    for (int z = 0; z < n; ++z)
      if (y != x0 && z != x0 && y != z && (o(x0, y, z) == 1) != (rank[y] < rank[z])) return {};
  return rank;
}

}  // namespace

bool validate(const FiniteCyclicOrder& o) {
  const int n = o.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        int s = o(x, y, z);
        bool distinct = x != y && y != z && x != z;
        if (distinct != (s != 0)) return false;
        if (s != o(y, z, x) || s != -o(x, z, y)) return false;
      }
  if (n < 3) return true;
  for (int x = 0; x < n; ++x)
    if (ranks(o, x).empty()) return false;
  return true;
}

std::vector<int> linearize(const FiniteCyclicOrder& o, int x0) {
  const int n = o.size();
  if (x0 < 0 || x0 >= n) throw InvalidOrder("base point out of range");
  if (n <= 2) {
    std::vector<int> out;
    for (int y = 0; y < n; ++y)
      if (y != x0) out.push_back(y);
    return out;
  }
  std::vector<int> rank = ranks(o, x0);
  if (rank.empty()) throw InvalidOrder("cut order is not a strict total order");
  std::vector<int> out(n - 1);
  for (int y = 0; y < n; ++y)
    if (y != x0) out[rank[y]] = y;
  return out;
}

bool lifted_less(const FiniteCyclicOrder& o, int x0, long m, int y, long n, int z) {
  if (m != n) return m < n;
  if (y == z) return false;
  if (y == x0) return true;
  if (z == x0) return false;
  return o(x0, y, z) == 1;
}

bool preserves_order(const FiniteCyclicOrder& o, const std::vector<int>& f) {
  const int n = o.size();
  if (static_cast<int>(f.size()) != n) return false;
  std::vector<bool> hit(n, false);
  for (int v : f) {
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (o(x, y, z) != o(f[x], f[y], f[z])) return false;
  return true;
}

LiftedOrderBijection lift_bijection(const FiniteCyclicOrder& o, const std::vector<int>& f, int x0) {
  if (!preserves_order(o, f)) throw NotOrderPreserving("map does not preserve the cyclic order");
  const int n = o.size();
  LiftedOrderBijection L{f, std::vector<long>(n, 0)};
  const int fx0 = f[x0];
  for (int y = 0; y < n; ++y) {
    if (y == x0) continue;
    if (f[y] == x0)
      L.level[y] = 1;
    else
      L.level[y] = std::max(0, -o(x0, fx0, f[y]));
  }
  return L;
}

LiftedOrderBijection compose(const LiftedOrderBijection& f, const LiftedOrderBijection& g) {
  const std::size_t n = g.image.size();
  LiftedOrderBijection out{std::vector<int>(n), std::vector<long>(n)};
  for (std::size_t y = 0; y < n; ++y) {
    int gy = g.image[y];
    out.image[y] = f.image[gy];
    out.level[y] = g.level[y] + f.level[gy];
  }
  return out;
}

LiftedOrderBijection inverse(const LiftedOrderBijection& f) {
  const std::size_t n = f.image.size();
  LiftedOrderBijection out{std::vector<int>(n), std::vector<long>(n)};
  for (std::size_t y = 0; y < n; ++y) {
    out.image[f.image[y]] = static_cast<int>(y);
    out.level[f.image[y]] = -f.level[y];
  }
  return out;
}

LiftedOrderBijection level_shift(int n, long k) {
  LiftedOrderBijection out{std::vector<int>(n), std::vector<long>(n, k)};
  std::iota(out.image.begin(), out.image.end(), 0);
  return out;
}

std::optional<long> lift_difference(const LiftedOrderBijection& f, const LiftedOrderBijection& g) {
  if (f.image != g.image || f.image.empty()) return std::nullopt;
  long k = f.level[0] - g.level[0];
  for (std::size_t y = 0; y < f.image.size(); ++y)
    if (f.level[y] - g.level[y] != k) return std::nullopt;
  return k;
}

bool is_increasing(const FiniteCyclicOrder& o, const LiftedOrderBijection& f, int x0) {
  const int n = o.size();
  for (int y = 0; y < n; ++y)
    for (int z = 0; z < n; ++z)
      for (long m : {0L, 1L}) {
        if (!lifted_less(o, x0, 0, y, m, z)) continue;
        auto [ky, fy] = f(0, y);
        auto [kz, fz] = f(m, z);
        if (!lifted_less(o, x0, ky, fy, kz, fz)) return false;
      }
  return true;
}

LiftedOrderBijection transport(const FiniteCyclicOrder& o, int x0, int x1) {
  const int n = o.size();
  LiftedOrderBijection F = level_shift(n, 0);
  if (x0 == x1) return F;
  for (int y = 0; y < n; ++y) {
    if (y == x0) continue;
    F.level[y] = (y == x1 || o(x0, x1, y) != -1) ? 1 : 0;
  }
  return F;
}

namespace {

constexpr double kMergeTolerance = 1e-9;
constexpr double kAmbiguityTolerance = 1e-6;

// Clusters boundary angles; returns the cluster id of every input angle and
// the clusters in anticlockwise order.
std::vector<int> cluster_angles(const std::vector<double>& theta, int& clusters) {
  const std::size_t m = theta.size();
  std::vector<std::size_t> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return theta[i] < theta[j]; });
  std::vector<int> id(m, 0);
  int current = 0;
  for (std::size_t k = 1; k < m; ++k) {
    double gap = theta[idx[k]] - theta[idx[k - 1]];
    if (gap > kMergeTolerance && gap < kAmbiguityTolerance)
      throw HypothesisViolation("orbit points too close to order reliably");
    if (gap > kMergeTolerance) ++current;
    id[idx[k]] = current;
  }
  clusters = current + 1;
  if (m > 1 && clusters > 1) {
    double wrap = theta[idx[0]] + kPi - theta[idx[m - 1]];
    if (wrap > kMergeTolerance && wrap < kAmbiguityTolerance)
      throw HypothesisViolation("orbit points too close to order reliably");
    if (wrap <= kMergeTolerance) {
      for (int& v : id)
        if (v == current) v = 0;
      --clusters;
    }
  }
  return id;
}

std::map<Word, int> word_index(const std::vector<Word>& words) {
  std::map<Word, int> out;
  for (std::size_t i = 0; i < words.size(); ++i) out.emplace(words[i], static_cast<int>(i));
  return out;
}

void check_hypotheses(const OrbitOrderData& data) {
  auto index = word_index(data.words);
  const int x0 = data.x_point.at(index.at(Word{}));
  std::vector<int> pref_points;
  for (const Word& w : pref_set(data.genus)) pref_points.push_back(data.y_point.at(index.at(w)));
  std::sort(pref_points.begin(), pref_points.end());
  pref_points.erase(std::unique(pref_points.begin(), pref_points.end()), pref_points.end());
  if (std::find(pref_points.begin(), pref_points.end(), x0) != pref_points.end())
    throw HypothesisViolation("x0 lies in the P_ref orbit of y0");
  if (pref_points.size() < 2) throw HypothesisViolation("P_ref orbit of y0 has fewer than two points");
}

}  // namespace

OrbitOrderData orbit_order_data(const Representation& rho, BoundaryPoint x0, BoundaryPoint y0) {
  OrbitOrderData data;
  data.genus = rho.genus;
  data.words = orbit_words(rho.genus);
  std::vector<double> theta;
  for (const Word& w : data.words) {
    Isometry M = evaluate(rho, w);
    theta.push_back(M.apply(x0).theta);
    theta.push_back(M.apply(y0).theta);
  }
  int clusters = 0;
  std::vector<int> id = cluster_angles(theta, clusters);
  for (std::size_t i = 0; i < data.words.size(); ++i) {
    data.x_point.push_back(id[2 * i]);
    data.y_point.push_back(id[2 * i + 1]);
  }
  std::vector<int> seq(clusters);
  std::iota(seq.begin(), seq.end(), 0);
  data.order = FiniteCyclicOrder::from_sequence(seq);
  return data;
}

OrbitOrderData sample_orbit_order_data(const Representation& rho, std::mt19937_64& rng, int attempts) {
  std::uniform_real_distribution<double> angle(0.0, kPi);
  for (int k = 0; k < attempts; ++k) {
    try {
      OrbitOrderData data = orbit_order_data(rho, {angle(rng)}, {angle(rng)});
      check_hypotheses(data);
      return data;
    } catch (const HypothesisViolation&) {
    }
  }
  throw HypothesisViolation("no admissible base points found");
}

OrbitOrderData orbit_order_data(int genus, const FiniteCyclicOrder& o,
                                const std::vector<std::vector<int>>& generators, int x0, int y0) {
  if (static_cast<int>(generators.size()) != 2 * genus)
    throw InvalidRepresentation("need one permutation per generator");
  for (const auto& f : generators)
    if (!preserves_order(o, f)) throw NotOrderPreserving("generator does not preserve the order");
  const int n = o.size();
  auto act = [&](const Word& w, int x) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      const auto& f = generators[std::abs(*it) - 1];
      if (*it > 0) {
        x = f[x];
      } else {
        x = static_cast<int>(std::find(f.begin(), f.end(), x) - f.begin());
      }
    }
    return x;
  };
  for (int x = 0; x < n; ++x)
    if (act(relator(genus), x) != x) throw InvalidRepresentation("relator does not act trivially");

  OrbitOrderData data;
  data.genus = genus;
  data.words = orbit_words(genus);
  std::vector<int> remap(n, -1);
  std::vector<int> kept;
  auto slot = [&](int x) {
    if (remap[x] < 0) {
      remap[x] = static_cast<int>(kept.size());
      kept.push_back(x);
    }
    return remap[x];
  };
  for (const Word& w : data.words) {
    data.x_point.push_back(slot(act(w, x0)));
    data.y_point.push_back(slot(act(w, y0)));
  }
  data.order = FiniteCyclicOrder::from_sign(static_cast<int>(kept.size()), [&](int a, int b, int c) {
    return o(kept[a], kept[b], kept[c]);
  });
  return data;
}

long euler_from_order_data(const OrbitOrderData& data) {
  if (!validate(data.order)) throw HypothesisViolation("order data is not a cyclic order");
  // Every orbit word fixing x0 and y0: the trivial action, class 0.
  auto fixed = [](const std::vector<int>& pts) {
    return std::all_of(pts.begin(), pts.end(), [&](int p) { return p == pts.front(); });
  };
  if (fixed(data.x_point) && fixed(data.y_point)) return 0;
  check_hypotheses(data);
  auto index = word_index(data.words);
  const FiniteCyclicOrder& o = data.order;
  const int x0 = data.x_point[index.at(Word{})];
  auto gen_x0 = [&](int letter) { return data.x_point[index.at(Word{letter})]; };
  auto y_of = [&](const Word& w) { return data.y_point[index.at(reduce(w))]; };

  const Word w = relator(data.genus);
  long level = 0;
  // Apply the letters from the right; after letter j the point is prefix_{j-1}^-1 y0.
  for (std::size_t j = w.size(); j-- > 0;) {
    const int letter = w[j];
    Word before = inverse(Word(w.begin(), w.begin() + static_cast<long>(j) + 1));
    Word after = inverse(Word(w.begin(), w.begin() + static_cast<long>(j)));
    int p = y_of(before), q = y_of(after);
    if (letter > 0) {
      level += std::max(0, -o(x0, gen_x0(letter), q));
    } else {
      level -= std::max(0, -o(x0, gen_x0(-letter), p));
    }
  }
  return level;
}

namespace {

Isometry isometry_power(const Isometry& A, long k) {
  Isometry base = k < 0 ? A.inverse() : A;
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  Isometry out;
  while (e) {
    if (e & 1UL) out = (out * base).normalized();
    base = (base * base).normalized();
    e >>= 1;
  }
  return out;
}

}  // namespace

PowerOrderOracle isometry_power_oracle(const Isometry& A, BoundaryPoint a) {
  return [A, a](long i, long j, long k) {
    return boundary_order(isometry_power(A, i).apply(a), isometry_power(A, j).apply(a),
                          isometry_power(A, k).apply(a));
  };
}

DyadicAngle dyadic_angle_recovery(const PowerOrderOracle& oracle, int bits) {
  DyadicAngle out;
  double weight = 0.5;
  for (int n = 1; n <= bits; ++n, weight *= 0.5) {
    int s = oracle(0, 1L << (n - 1), 1L << n);
    if (s == 0) {
      if (n == 1) throw DegenerateAngle("rotation by half the circle is invisible to the order");
      out.digits.push_back(1);
      out.value += weight;
      out.terminated = true;
      break;
    }
    int digit = s < 0 ? 1 : 0;
    out.digits.push_back(digit);
    out.value += digit * weight;
  }
  return out;
}

namespace {

// Group index of every point in anticlockwise order from point 0; ties within 1e-9.
std::vector<int> circular_groups(const std::vector<BoundaryPoint>& pts, int& groups) {
  const std::size_t m = pts.size();
  std::vector<double> rel(m);
  for (std::size_t i = 0; i < m; ++i) {
    double r = wrap_pi(pts[i].theta - pts[0].theta);
    rel[i] = (r < kMergeTolerance || r > kPi - kMergeTolerance) ? 0.0 : r;
  }
  std::vector<std::size_t> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return rel[i] < rel[j]; });
  std::vector<int> id(m, 0);
  int current = 0;
  for (std::size_t k = 1; k < m; ++k) {
    if (rel[idx[k]] - rel[idx[k - 1]] > kMergeTolerance) ++current;
    id[idx[k]] = current;
  }
  groups = m ? current + 1 : 0;
  return id;
}

}  // namespace

bool order_distinguishes(const Representation& rho1, const Representation& rho2,
                         BoundaryPoint a1, BoundaryPoint a2, int depth) {
  std::vector<BoundaryPoint> p1, p2;
  for (const Word& w : ball(rho1.genus, depth)) {
    p1.push_back(evaluate(rho1, w).apply(a1));
    p2.push_back(evaluate(rho2, w).apply(a2));
  }
  int g1 = 0, g2 = 0;
  std::vector<int> c1 = circular_groups(p1, g1), c2 = circular_groups(p2, g2);
  if (g1 <= 2 && g2 <= 2) return false;
  return c1 != c2;
}

}  // namespace surfrep
