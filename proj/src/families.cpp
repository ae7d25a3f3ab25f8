#include "surfrep/families.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "surfrep/group.hpp"

namespace surfrep {

namespace {

// Rotation about i by the geometric angle psi (anticlockwise).
Isometry turn(double psi) { return Isometry::rotation(-psi / 2); }

// Vertex half-angle of the regular n-gon with circumradius R.
double vertex_half_angle(int n, double R) {
  double alpha = kPi / n;
  double om = std::atanh(std::tanh(R) * std::cos(alpha));
  return std::acos(std::min(1.0, std::cosh(om) * std::sin(alpha)));
}

}  // namespace

double regular_polygon_radius(int g) {
  const int n = 4 * g;
  const double target = kPi / n;
  double lo = 1e-9, hi = 40.0;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    (vertex_half_angle(n, mid) > target ? lo : hi) = mid;
  }
  double R = 0.5 * (lo + hi);
  if (std::abs(vertex_half_angle(n, R) - target) > 1e-12)
    throw NonConvergence("polygon radius bisection failed");
  return R;
}

Representation fuchsian_regular(int g) {
  if (g < 2) throw std::invalid_argument("fuchsian_regular needs genus at least 2");
  const int n = 4 * g;
  const double R = regular_polygon_radius(g);
  const double h = std::atanh(std::tanh(R) * std::cos(kPi / n));
  auto side = [&](int j) { return 2 * kPi * j / n + kPi / n; };
  // Carries side i onto side j, the polygon landing across side j.
  auto pairing = [&](int i, int j) {
    return (turn(side(j)) * Isometry::axial(2 * h) * turn(kPi - side(i))).normalized();
  };
  std::vector<Isometry> images;
  for (int k = 0; k < g; ++k) {
    images.push_back(pairing(4 * k + 2, 4 * k));
    images.push_back(pairing(4 * k + 1, 4 * k + 3));
  }
  // The raw pairings have e = 2 - 2g; the mirror image gives the +(2g - 2) convention.
  for (Isometry& s : images) s = mirror(s);
  Representation rho = make_representation(g, std::move(images));
  if (!(rho.residual < 1e-8)) throw NonConvergence("polygon side pairings miss the relator");
  return rho;
}

Representation free_factor_rep(int g, const Isometry& X, const Isometry& Y) {
  if (g < 2) throw std::invalid_argument("free_factor_rep needs genus at least 2");
  std::vector<Isometry> images(2 * g, Isometry::identity());
  images[gen_a(1) - 1] = X;
  images[gen_a(2) - 1] = Y;
  return make_representation(g, std::move(images));
}

Isometry axis_frame(Point x0, BoundaryPoint a0) {
  Isometry T = Isometry::translation_to(x0);
  double phi = T.inverse().apply(a0).theta;
  return T * Isometry::rotation(phi);
}

Isometry degenerating_element(Point x0, BoundaryPoint a0, double n) {
  return conjugate(axis_frame(x0, a0), Isometry::axial(n));
}

void check_not_fixed(const Representation& base, BoundaryPoint a0) {
  for (const Isometry& s : base.images)
    if (std::abs(boundary_gap(a0, s.apply(a0))) <= 1e-6)
      throw FixedBoundaryPoint("a base generator fixes the attracting point");
}

Representation rho_n_prime(const Representation& base, BoundaryPoint a0, Point x0, long n) {
  if (n < 1) throw std::invalid_argument("translation length n must be at least 1");
  check_not_fixed(base, a0);
  std::vector<Isometry> images = base.images;
  images.push_back(Isometry::identity());
  images.push_back(degenerating_element(x0, a0, static_cast<double>(n)));
  return make_representation(base.genus + 1, std::move(images));
}

Representation double_cover_pullback(const Representation& rho) {
  const int g = rho.genus;
  const Word x{gen_a(g)}, y{gen_b(g)};
  std::vector<Word> words;
  for (int i = 1; i < g; ++i) {
    words.push_back({gen_a(i)});
    words.push_back({gen_b(i)});
  }
  for (int i = 1; i < g; ++i) {
    words.push_back(concat(concat(x, {gen_a(i)}), inverse(x)));
    words.push_back(concat(concat(x, {gen_b(i)}), inverse(x)));
  }
  words.push_back(power(x, 2));
  words.push_back(y);
  std::vector<Isometry> images;
  for (const Word& w : words) images.push_back(evaluate(rho, w));
  Representation cover = make_representation(2 * g - 1, std::move(images));
  if (!(cover.residual < 1e-6)) throw RewritingFailure("pulled back relator does not vanish");
  return cover;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t i) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (i + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Isometry random_isometry(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (;;) {
    double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
    double det = a * d - b * c;
    if (std::abs(det) < 0.1) continue;
    if (det < 0) {
      a = -a;
      b = -b;
    }
    return Isometry::from_entries(a, b, c, d);
  }
}

namespace {

using Vec6 = std::array<double, 6>;

Isometry exp_sl2(double x1, double x2, double x3) {
  double delta = x1 * x1 + x2 * x3;
  double c, s;
  if (delta > 1e-12) {
    double r = std::sqrt(delta);
    c = std::cosh(r);
    s = std::sinh(r) / r;
  } else if (delta < -1e-12) {
    double r = std::sqrt(-delta);
    c = std::cos(r);
    s = std::sin(r) / r;
  } else {
    c = 1 + delta / 2;
    s = 1 + delta / 6;
  }
  return {c + s * x1, s * x2, s * x3, c - s * x1};
}

struct HandleProblem {
  Isometry A0, B0, target_inv;

  std::pair<Isometry, Isometry> at(const Vec6& p) const {
    return {A0 * exp_sl2(p[0], p[1], p[2]), B0 * exp_sl2(p[3], p[4], p[5])};
  }
  std::array<double, 3> residual(const Vec6& p) const {
    auto [A, B] = at(p);
    Isometry M = A * B * A.inverse() * B.inverse() * target_inv;
    // Either sign of M is acceptable in PSL(2, R).
    double s = M.a + M.d >= 0 ? 1.0 : -1.0;
    return {s * 0.5 * (M.a - M.d), s * M.b, s * M.c};
  }
};

double norm3(const std::array<double, 3>& r) { return std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]); }

// Damped minimum-norm Newton steps on the three residual components.
bool solve_handle(const HandleProblem& prob, Vec6& p) {
  auto r = prob.residual(p);
  double nr = norm3(r);
  double lambda = 1e-8;
  for (int it = 0; it < 80; ++it) {
    if (nr < 1e-14) return true;
    double J[3][6];
    for (int j = 0; j < 6; ++j) {
      const double h = 1e-7;
      Vec6 pp = p, pm = p;
      pp[j] += h;
      pm[j] -= h;
      auto rp = prob.residual(pp), rm = prob.residual(pm);
      for (int i = 0; i < 3; ++i) J[i][j] = (rp[i] - rm[i]) / (2 * h);
    }
    double G[3][3];
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) {
        G[i][k] = i == k ? lambda : 0.0;
        for (int j = 0; j < 6; ++j) G[i][k] += J[i][j] * J[k][j];
      }
    // Solve G w = r by Cramer's rule.
    double det = G[0][0] * (G[1][1] * G[2][2] - G[1][2] * G[2][1]) -
                 G[0][1] * (G[1][0] * G[2][2] - G[1][2] * G[2][0]) +
                 G[0][2] * (G[1][0] * G[2][1] - G[1][1] * G[2][0]);
    if (!std::isfinite(det) || std::abs(det) < 1e-300) return false;
    std::array<double, 3> w;
    for (int c = 0; c < 3; ++c) {
      double M[3][3];
      for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) M[i][k] = k == c ? r[i] : G[i][k];
      w[c] = (M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
              M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
              M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0])) /
             det;
    }
    Vec6 step;
    for (int j = 0; j < 6; ++j) step[j] = -(J[0][j] * w[0] + J[1][j] * w[1] + J[2][j] * w[2]);
    double t = 1.0;
    bool accepted = false;
    for (int k = 0; k < 30; ++k, t *= 0.5) {
      Vec6 q;
      for (int j = 0; j < 6; ++j) q[j] = p[j] + t * step[j];
      auto rq = prob.residual(q);
      double nq = norm3(rq);
      if (std::isfinite(nq) && nq < nr) {
        p = q;
        r = rq;
        nr = nq;
        accepted = true;
        break;
      }
    }
    if (!accepted) return nr < 1e-12;
  }
  return nr < 1e-12;
}

}  // namespace

Representation random_representation(int g, std::uint64_t seed) {
  if (g < 1) throw std::invalid_argument("genus must be positive");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<Isometry> images;
    Isometry partial;
    for (int i = 1; i < g; ++i) {
      Isometry A = random_isometry(rng), B = random_isometry(rng);
      images.push_back(A);
      images.push_back(B);
      partial = partial * A * B * A.inverse() * B.inverse();
    }
    Isometry target = partial.inverse();
    if (coin(rng)) target = {-target.a, -target.b, -target.c, -target.d};
    HandleProblem prob{random_isometry(rng), random_isometry(rng), target.inverse()};
    Vec6 p{};
    if (!solve_handle(prob, p)) continue;
    auto [A, B] = prob.at(p);
    images.push_back(A.normalized());
    images.push_back(B.normalized());
    Representation rho = make_representation(g, std::move(images));
    if (rho.residual < 1e-8) return rho;
  }
  throw SamplerExhausted("no valid representation after the retry cap");
}

}  // namespace surfrep
