#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "surfrep/hyp2.hpp"

namespace surfrep {

namespace {

// Orientation-preserving isometry sending p to i and q onto the upper half of
// the imaginary axis.
Isometry frame(Point p, Point q) {
  Isometry to_i = Isometry::translation_to(p).inverse();
  double phi = direction_to(base_point(), to_i.apply(q));
  return Isometry::rotation((phi - kPi / 2) / 2) * to_i;
}

bool collinear(const std::vector<Point>& K) {
  std::size_t far = 1;
  for (std::size_t j = 1; j < K.size(); ++j)
    if (distance(K[0], K[j]) > distance(K[0], K[far])) far = j;
  if (distance(K[0], K[far]) < 1e-12) return true;
  Isometry f = frame(K[0], K[far]);
  for (const Point& p : K) {
    Point w = f.apply(p);
    if (std::asinh(std::abs(w.x) / w.y) > 1e-9) return false;
  }
  return true;
}

double residual(const Aligner& m, const std::vector<Point>& K, const std::vector<Point>& Kp) {
  double r = 0;
  for (std::size_t i = 0; i < K.size(); ++i) r = std::max(r, distance(m.apply(K[i]), Kp[i]));
  return r;
}

Isometry perturbation(const std::array<double, 3>& xi) {
  return Isometry::translation_to({xi[0], std::exp(xi[1])}) * Isometry::rotation(xi[2]);
}

// Nelder-Mead on the max-distance objective around a seed map.
Aligner refine(Aligner seed, const std::vector<Point>& K, const std::vector<Point>& Kp) {
  auto objective = [&](const std::array<double, 3>& xi) {
    Aligner m{perturbation(xi) * seed.g, seed.reflect};
    return residual(m, K, Kp);
  };
  using P = std::array<double, 3>;
  double scale = 0.1;
  P best{0, 0, 0};
  double fbest = objective(best);
  for (int restart = 0; restart < 6 && fbest > 1e-13; ++restart) {
    std::array<P, 4> s;
    std::array<double, 4> f;
    s[0] = best;
    for (int k = 0; k < 3; ++k) {
      s[k + 1] = best;
      s[k + 1][k] += scale;
    }
    for (int k = 0; k < 4; ++k) f[k] = objective(s[k]);
    for (int it = 0; it < 600; ++it) {
      std::array<int, 4> idx{0, 1, 2, 3};
      std::sort(idx.begin(), idx.end(), [&](int a, int b) { return f[a] < f[b]; });
      std::array<P, 4> s2;
      std::array<double, 4> f2;
      for (int k = 0; k < 4; ++k) {
        s2[k] = s[idx[k]];
        f2[k] = f[idx[k]];
      }
      s = s2;
      f = f2;
      if (f[3] - f[0] < 1e-15) break;
      P c{0, 0, 0};
      for (int k = 0; k < 3; ++k)
        for (int j = 0; j < 3; ++j) c[j] += s[k][j] / 3;
      auto at = [&](double t) {
        P p;
        for (int j = 0; j < 3; ++j) p[j] = c[j] + t * (s[3][j] - c[j]);
        return p;
      };
      P xr = at(-1);
      double fr = objective(xr);
      if (fr < f[0]) {
        P xe = at(-2);
        double fe = objective(xe);
        if (fe < fr) {
          s[3] = xe;
          f[3] = fe;
        } else {
          s[3] = xr;
          f[3] = fr;
        }
      } else if (fr < f[2]) {
        s[3] = xr;
        f[3] = fr;
      } else {
        P xc = at(fr < f[3] ? -0.5 : 0.5);
        double fc = objective(xc);
        if (fc < std::min(fr, f[3])) {
          s[3] = xc;
          f[3] = fc;
        } else {
          for (int k = 1; k < 4; ++k) {
            for (int j = 0; j < 3; ++j) s[k][j] = s[0][j] + 0.5 * (s[k][j] - s[0][j]);
            f[k] = objective(s[k]);
          }
        }
      }
    }
    int arg = static_cast<int>(std::min_element(f.begin(), f.end()) - f.begin());
    if (f[arg] < fbest) {
      fbest = f[arg];
      best = s[arg];
    }
    scale *= 0.1;
  }
  return {(perturbation(best) * seed.g).normalized(), seed.reflect};
}

}  // namespace

AlignResult align_configurations(const std::vector<Point>& K, const std::vector<Point>& Kp,
                                 bool allow_reflection) {
  if (K.size() != Kp.size() || K.size() < 3)
    throw DegenerateConfiguration("configurations need equal sizes of at least three");
  if (collinear(K) || collinear(Kp)) throw DegenerateConfiguration("all points collinear");

  const std::size_t anchors = std::min<std::size_t>(K.size(), 6);
  AlignResult best;
  best.residual = std::numeric_limits<double>::infinity();
  for (int reflect = 0; reflect <= (allow_reflection ? 1 : 0); ++reflect) {
    for (std::size_t i = 0; i < anchors; ++i) {
      for (std::size_t j = 0; j < anchors; ++j) {
        if (i == j) continue;
        Point p = reflect ? mirror(K[i]) : K[i];
        Point q = reflect ? mirror(K[j]) : K[j];
        if (distance(p, q) < 1e-9 || distance(Kp[i], Kp[j]) < 1e-9) continue;
        Aligner m{frame(Kp[i], Kp[j]).inverse() * frame(p, q), reflect == 1};
        double r = residual(m, K, Kp);
        if (r < best.residual) best = {m, r};
      }
    }
  }
  Aligner refined = refine(best.map, K, Kp);
  double r = residual(refined, K, Kp);
  if (r < best.residual) best = {refined, r};
  if (allow_reflection && !best.map.reflect && best.residual > 1e-9) {
    // Also polish the best mirrored seed; chirality can fool the anchor choice.
    Aligner m{frame(Kp[0], Kp[1]).inverse() * frame(mirror(K[0]), mirror(K[1])), true};
    Aligner rm = refine(m, K, Kp);
    double rr = residual(rm, K, Kp);
    if (rr < best.residual) best = {rm, rr};
  }
  return best;
}

}  // namespace surfrep
