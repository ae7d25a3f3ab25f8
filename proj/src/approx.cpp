#include "surfrep/approx.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <random>

#include "surfrep/families.hpp"

namespace surfrep {

PlaneConfiguration::PlaneConfiguration(ScaledPlane plane, Representation rho,
                                       std::vector<Point> points, std::vector<std::string> labels)
    : plane_(plane), rho_(std::move(rho)), points_(std::move(points)), labels_(std::move(labels)) {
  if (points_.size() != labels_.size()) throw LabelMismatch("one label per point required");
}

Point PlaneConfiguration::translate(const Word& g, int i) const {
  return evaluate(rho_, g).apply(points_[i]);
}

double PlaneConfiguration::distance(const Word& g, int i, const Word& h, int j) const {
  return plane_.distance(translate(g, i), translate(h, j));
}

int PlaneConfiguration::orientation(const std::array<std::pair<Word, int>, 3>& t) const {
  std::array<Point, 3> p;
  for (int k = 0; k < 3; ++k) p[k] = translate(t[k].first, t[k].second);
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      if (surfrep::distance(p[a], p[b]) < 1e-9) return 0;
  try {
    Point F = fermat_point(p[0], p[1], p[2], plane_);
    for (const Point& q : p)
      if (surfrep::distance(F, q) < 1e-9) return 0;
    return segment_order(F, F, F, p[0], p[1], p[2]);
  } catch (const NotInU&) {
    return 0;
  } catch (const NonConvergence&) {
    return 0;
  }
}

TreeConfiguration::TreeConfiguration(FatTree tree, TreeAction action, std::vector<TreePoint> points,
                                     std::vector<std::string> labels)
    : tree_(std::move(tree)),
      action_(std::move(action)),
      points_(std::move(points)),
      labels_(std::move(labels)) {
  if (points_.size() != labels_.size()) throw LabelMismatch("one label per point required");
  check_fat(tree_);
  for (const TreeIsometry& f : action_.generators)
    inverses_.push_back(f.inverse(tree_.tree.vertex_count()));
}

TreePoint TreeConfiguration::translate(const Word& g, int i) const {
  const MetricTree& T = tree_.tree;
  TreePoint p = points_[i];
  for (auto it = g.rbegin(); it != g.rend(); ++it) {
    const TreeIsometry& f = *it > 0 ? action_.generators[*it - 1] : inverses_[-*it - 1];
    if (p.vertex >= 0) {
      p.vertex = f.vertex_map[p.vertex];
      if (p.vertex < 0) throw HypothesisViolation("word leaves the truncated tree");
      continue;
    }
    const auto& e = T.edges[p.edge];
    int fu = f.vertex_map[e.u], fv = f.vertex_map[e.v];
    if (fu < 0 || fv < 0) throw HypothesisViolation("word leaves the truncated tree");
    int image = -1;
    for (int e2 : T.incident[fu])
      if (T.other(e2, fu) == fv) image = e2;
    if (image < 0) throw NotIsometry("edge image is not an edge");
    double t = T.edges[image].u == fu ? p.offset : T.edges[image].length - p.offset;
    p = TreePoint::on_edge(image, t);
  }
  return p;
}

double TreeConfiguration::distance(const Word& g, int i, const Word& h, int j) const {
  return surfrep::distance(tree_.tree, translate(g, i), translate(h, j));
}

int TreeConfiguration::orientation(const std::array<std::pair<Word, int>, 3>& t) const {
  return tree_triple_order(tree_, translate(t[0].first, t[0].second),
                           translate(t[1].first, t[1].second), translate(t[2].first, t[2].second));
}

BassSerreConfiguration::BassSerreConfiguration(int genus, TrivialityTest trivial)
    : genus_(genus), trivial_(std::move(trivial)) {}

double BassSerreConfiguration::distance(const Word& g, int, const Word& h, int) const {
  return bass_serre_length(genus_, concat(inverse(g), h), trivial_);
}

namespace {

// Index in Kp of every label of K.
std::vector<int> match_labels(const Configuration& K, const Configuration& Kp) {
  const auto& a = K.labels();
  const auto& b = Kp.labels();
  if (a.size() != b.size()) throw LabelMismatch("configurations have different sizes");
  std::map<std::string, int> where;
  for (std::size_t j = 0; j < b.size(); ++j) where[b[j]] = static_cast<int>(j);
  if (where.size() != b.size()) throw LabelMismatch("duplicate label");
  std::vector<int> out;
  for (const std::string& s : a) {
    auto it = where.find(s);
    if (it == where.end()) throw LabelMismatch("label " + s + " missing");
    out.push_back(it->second);
  }
  return out;
}

}  // namespace

ApproxReport epsilon_check(const Configuration& K, const Configuration& Kp,
                           const std::vector<Word>& P, double eps) {
  std::vector<int> m = match_labels(K, Kp);
  ApproxReport r;
  const int p = static_cast<int>(m.size());
  for (const Word& g : P)
    for (const Word& h : P)
      for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
          r.distortion =
              std::max(r.distortion, std::abs(K.distance(g, i, h, j) - Kp.distance(g, m[i], h, m[j])));
  r.delta_gap = std::abs(K.delta() - Kp.delta());
  r.pass = r.distortion < eps && r.delta_gap < eps;
  return r;
}

ApproxReport oriented_check(const Configuration& K, const Configuration& Kp,
                            const std::vector<Word>& P, double eps) {
  ApproxReport r = epsilon_check(K, Kp, P, eps);
  std::vector<int> m = match_labels(K, Kp);
  const double A = kC0 * (K.delta() + eps) + 3 * eps;
  std::vector<std::pair<Word, int>> pts;
  for (const Word& g : P)
    for (int i = 0; i < static_cast<int>(m.size()); ++i) pts.emplace_back(g, i);
  const std::size_t n = pts.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        const auto &x = pts[a], &y = pts[b], &z = pts[c];
        double dxy = K.distance(x.first, x.second, y.first, y.second);
        double dxz = K.distance(x.first, x.second, z.first, z.second);
        double dyz = K.distance(y.first, y.second, z.first, z.second);
        if (!(dxy + dxz - dyz > 2 * A && dxy + dyz - dxz > 2 * A && dxz + dyz - dxy > 2 * A)) continue;
        std::array<std::pair<Word, int>, 3> t{x, y, z};
        std::array<std::pair<Word, int>, 3> tp{std::make_pair(x.first, m[x.second]),
                                               std::make_pair(y.first, m[y.second]),
                                               std::make_pair(z.first, m[z.second])};
        int s = K.orientation(t), sp = Kp.orientation(tp);
        if (s != sp) r.witnesses.push_back({t, s, sp});
      }
  r.order_agreement = r.witnesses.empty();
  r.pass = r.pass && r.order_agreement;
  return r;
}

Rescaling rescale(const Representation& rho) {
  double d = min_displacement(rho).d;
  return {ScaledPlane{std::max(1.0, d)}, d};
}

namespace {

using LComplex = std::complex<long double>;

struct LMobius {
  long double a = 1, b = 0, c = 0, d = 1;

  explicit LMobius(const Isometry& g) : a(g.a), b(g.b), c(g.c), d(g.d) {}
  LMobius inverse() const {
    LMobius m = *this;
    m.a = d;
    m.b = -b;
    m.c = -c;
    m.d = a;
    return m;
  }
  // Im(Mz) = det Im(z) / |cz + d|^2 avoids the cancellation of the plain quotient.
  LComplex apply(LComplex z) const {
    LComplex num = a * z + b, den = c * z + d;
    long double n2 = std::norm(den);
    long double re = (num.real() * den.real() + num.imag() * den.imag()) / n2;
    return {re, (a * d - b * c) * z.imag() / n2};
  }
};

long double ldistance(LComplex p, LComplex q) {
  return 2 * std::asinh(std::abs(p - q) / (2 * std::sqrt(p.imag() * q.imag())));
}

void check_non_elementary(const Representation& base) {
  for (const Isometry& s : base.images) {
    if (s.distance_to_identity() < 1e-9) continue;
    for (const BoundaryPoint& p : boundary_fixed_points(s)) {
      bool common = true;
      for (const Isometry& t : base.images)
        if (std::abs(boundary_gap(p, t.apply(p))) > 1e-6) common = false;
      if (common) throw HypothesisViolation("base generators share a fixed boundary point");
    }
    return;
  }
  throw HypothesisViolation("base representation is trivial");
}

}  // namespace

long double degeneration_distance(const Representation& base, BoundaryPoint a0, Point x0, long n,
                                  const Word& w) {
  const int g = base.genus + 1;
  const int bg = gen_b(g), ag = gen_a(g);
  LMobius M(axis_frame(x0, a0));
  LMobius Minv = M.inverse();
  const LComplex start(x0.x, x0.y);
  LComplex z = start;
  Word r = reduce(w);
  for (std::size_t k = r.size(); k-- > 0;) {
    int x = r[k];
    int gen = std::abs(x);
    if (gen == ag) continue;
    if (gen == bg) {
      long power = 0;
      while (true) {
        power += r[k] > 0 ? 1 : -1;
        if (k == 0 || std::abs(r[k - 1]) != bg) break;
        --k;
      }
      LComplex u = Minv.apply(z);
      u *= std::exp(static_cast<long double>(n) * static_cast<long double>(power));
      z = M.apply(u);
      continue;
    }
    LMobius s(base.gen(gen));
    z = (x > 0 ? s : s.inverse()).apply(z);
  }
  return ldistance(start, z);
}

std::vector<DegenerationRow> degeneration_table(int g, const Representation& base,
                                                BoundaryPoint a0, Point x0,
                                                const std::vector<Word>& words,
                                                const std::vector<long>& ns) {
  if (base.genus != g - 1) throw std::invalid_argument("base genus must be g - 1");
  check_non_elementary(base);
  check_not_fixed(base, a0);
  TrivialityTest trivial = surface_triviality(g - 1);
  std::vector<DegenerationRow> rows;
  for (long n : ns) {
    if (n < 1) throw std::invalid_argument("translation length n must be at least 1");
    for (const Word& w : words) {
      DegenerationRow row;
      row.n = n;
      row.word = to_string(w);
      row.scaled_distance = static_cast<double>(degeneration_distance(base, a0, x0, n, w) / n);
      row.tree_length = bass_serre_length(g, w, trivial);
      row.gap = std::abs(row.scaled_distance - row.tree_length);
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<Word> default_degeneration_words(int g) {
  if (g < 2) throw std::invalid_argument("degeneration needs genus at least 2");
  const int a1 = gen_a(1), b1 = gen_b(1), ag = gen_a(g), bg = gen_b(g);
  const int ah = gen_a(g - 1), bh = gen_b(g - 1);
  return {
      {a1},
      {ag, b1, -ag},
      {bg},
      {a1, bg, bh},
      {bg, a1, -bg},
      {bg, a1, bg, bg, ah, -bg, -bg},
  };
}

DegenerationSetup default_degeneration_setup(int g, std::uint64_t seed) {
  if (g < 2) throw std::invalid_argument("degeneration needs genus at least 2");
  DegenerationSetup s{random_representation(g - 1, seed), {}, base_point()};
  std::mt19937_64 rng(derive_seed(seed, 1));
  std::uniform_real_distribution<double> angle(0.0, kPi);
  for (int k = 0; k < 1000; ++k) {
    s.a0 = {angle(rng)};
    try {
      check_not_fixed(s.base, s.a0);
      return s;
    } catch (const FixedBoundaryPoint&) {
    }
  }
  throw SamplerExhausted("no admissible attracting point");
}

}  // namespace surfrep
