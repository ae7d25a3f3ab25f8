#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "support.hpp"
#include "surfrep/hyp2.hpp"

using namespace surfrep;
using namespace testing_support;

namespace {

// Hyperbolic length of the circle arc through p and q whose center sits at
// height h above the real axis on their perpendicular bisector, by quadrature.
double arc_length(Point p, Point q, double h) {
  // center (cx, h) equidistant from p and q
  double mx = (p.x + q.x) / 2, my = (p.y + q.y) / 2;
  double dx = q.x - p.x, dy = q.y - p.y;
  double cx = std::abs(dx) < 1e-15 ? 0.0 : mx - (h - my) * dy / dx;
  double r = std::hypot(p.x - cx, p.y - h);
  double a0 = std::atan2(p.y - h, p.x - cx), a1 = std::atan2(q.y - h, q.x - cx);
  const int m = 20000;
  double len = 0;
  for (int k = 0; k < m; ++k) {
    double t = a0 + (a1 - a0) * (k + 0.5) / m;
    double y = h + r * std::sin(t);
    len += r * std::abs(a1 - a0) / m / y;
  }
  return len;
}

// Golden-section search over the family of arcs.
double numeric_geodesic_length(Point p, Point q) {
  double lo = -5.0, hi = std::min(p.y, q.y) - 1e-6;
  const double phi = (std::sqrt(5.0) - 1) / 2;
  for (int it = 0; it < 80; ++it) {
    double a = hi - phi * (hi - lo), b = lo + phi * (hi - lo);
    if (arc_length(p, q, a) < arc_length(p, q, b))
      hi = b;
    else
      lo = a;
  }
  return arc_length(p, q, (lo + hi) / 2);
}

// Position of each angle in increasing order, then the circular sign.
int circular_sign(double a, double b, double c) {
  if (a == b || b == c || a == c) return 0;
  std::vector<double> v{a, b, c};
  std::sort(v.begin(), v.end());
  auto pos = [&](double t) { return std::find(v.begin(), v.end(), t) - v.begin(); };
  long pa = pos(a), pb = pos(b), pc = pos(c);
  return ((pb - pa + 3) % 3 == 1 && (pc - pa + 3) % 3 == 2) ? 1 : -1;
}

}  // namespace

TEST(Distance, VerticalGeodesic) { EXPECT_NEAR(distance({0, 1}, {0, 2}), std::log(2.0), 1e-14); }

TEST(Distance, SamePointIsZero) {
  Point p{0.3, 0.7};
  EXPECT_EQ(distance(p, p), 0.0);
}

TEST(Distance, MatchesNumericGeodesicLength) {
  double d = distance({0, 1}, {1, 1});
  EXPECT_NEAR(d, std::acosh(1.5), 1e-12);
  EXPECT_NEAR(d, numeric_geodesic_length({0, 1}, {1, 1}), 1e-6);
  EXPECT_NEAR(distance({-0.4, 0.3}, {1.2, 2.5}), numeric_geodesic_length({-0.4, 0.3}, {1.2, 2.5}),
              1e-6);
}

TEST(Distance, TriangleInequalityAndInvariance) {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 10000; ++k) {
    Point p = random_point(rng), q = random_point(rng), r = random_point(rng);
    EXPECT_LE(distance(p, r), distance(p, q) + distance(q, r) + 1e-12);
    Isometry g = random_isometry(rng);
    EXPECT_NEAR(distance(g.apply(p), g.apply(q)), distance(p, q), 1e-9);
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(Isometry::identity()).type, Kind::Type::Identity);
  Kind h = classify({2, 0, 0, 0.5});
  EXPECT_EQ(h.type, Kind::Type::Hyperbolic);
  EXPECT_NEAR(h.value, 2 * std::log(2.0), 1e-12);
  Kind e = classify(Isometry::rotation(kPi / 3));
  EXPECT_EQ(e.type, Kind::Type::Elliptic);
  EXPECT_NEAR(e.value, kPi / 3, 1e-12);
  EXPECT_EQ(classify({1, 1, 0, 1}).type, Kind::Type::Parabolic);
}

TEST(Classify, ConjugationInvariant) {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 1000; ++k) {
    Isometry A = random_isometry(rng), g = random_isometry(rng);
    Kind a = classify(A), b = classify(conjugate(g, A));
    ASSERT_EQ(a.type, b.type);
    EXPECT_NEAR(a.value, b.value, 1e-9 * std::max(1.0, a.value));
  }
}

TEST(Classify, TraceRelations) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 1000; ++k) {
    Isometry A = random_isometry(rng);
    Kind a = classify(A);
    if (a.type == Kind::Type::Hyperbolic) {
      EXPECT_NEAR(std::abs(A.trace()), 2 * std::cosh(a.value / 2), 1e-9 * std::abs(A.trace()));
    } else if (a.type == Kind::Type::Elliptic) {
      EXPECT_NEAR(std::abs(A.trace()), 2 * std::abs(std::cos(a.value)), 1e-9);
    }
  }
}

TEST(BoundaryFixedPoints, Examples) {
  auto d = boundary_fixed_points({2, 0, 0, 0.5});
  ASSERT_EQ(d.size(), 2u);
  std::vector<double> t{boundary_to_real(d[0]), boundary_to_real(d[1])};
  std::sort(t.begin(), t.end());
  EXPECT_NEAR(t[0], 0.0, 1e-12);
  EXPECT_TRUE(std::isinf(t[1]));
  auto u = boundary_fixed_points({1, 1, 0, 1});
  ASSERT_EQ(u.size(), 1u);
  EXPECT_TRUE(std::isinf(boundary_to_real(u[0])));
  EXPECT_TRUE(boundary_fixed_points(Isometry::rotation(0.4)).empty());
}

TEST(BoundaryFixedPoints, AreFixed) {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 500; ++k) {
    Isometry A = random_isometry(rng);
    for (BoundaryPoint p : boundary_fixed_points(A))
      EXPECT_LT(std::abs(boundary_gap(p, A.apply(p))), 1e-9);
  }
}

TEST(BoundaryOrder, Examples) {
  EXPECT_EQ(boundary_order({0.1}, {0.5}, {1.0}), 1);
  EXPECT_EQ(boundary_order({0.1}, {0.1}, {1.0}), 0);
  EXPECT_EQ(boundary_order({0.5}, {0.1}, {1.0}), -1);
  EXPECT_EQ(circular_sign(0.5, 0.1, 1.0), -1);
}

TEST(BoundaryOrder, MatchesCircularSequenceAndAxioms) {
  std::mt19937_64 rng(5);
  std::vector<BoundaryPoint> pts;
  for (int k = 0; k < 1000; ++k) pts.push_back(random_boundary(rng));
  std::uniform_int_distribution<int> pick(0, 999);
  for (int k = 0; k < 200000; ++k) {
    BoundaryPoint a = pts[pick(rng)], b = pts[pick(rng)], c = pts[pick(rng)], d = pts[pick(rng)];
    int s = boundary_order(a, b, c);
    ASSERT_EQ(s, circular_sign(a.theta, b.theta, c.theta));
    ASSERT_EQ(s, boundary_order(b, c, a));
    ASSERT_EQ(s, -boundary_order(a, c, b));
    // transitivity: o(a,b,c) = o(a,c,d) = 1 implies o(a,b,d) = 1
    if (s == 1 && boundary_order(a, c, d) == 1) {
      ASSERT_EQ(boundary_order(a, b, d), 1);
    }
  }
}

TEST(BoundaryOrder, PreservedByIsometries) {
  std::mt19937_64 rng(6);
  for (int k = 0; k < 1000; ++k) {
    BoundaryPoint a = random_boundary(rng), b = random_boundary(rng), c = random_boundary(rng);
    Isometry g = random_isometry(rng);
    if (std::abs(boundary_gap(a, b)) < 1e-6 || std::abs(boundary_gap(b, c)) < 1e-6 ||
        std::abs(boundary_gap(a, c)) < 1e-6)
      continue;
    EXPECT_EQ(boundary_order(g.apply(a), g.apply(b), g.apply(c)), boundary_order(a, b, c));
  }
}

TEST(FermatPoint, EquilateralAroundCenter) {
  Point q{0.7, 1.8};
  Point F = fermat_point(exp_map(q, 0.2, 3), exp_map(q, 0.2 + 2 * kPi / 3, 3),
                         exp_map(q, 0.2 + 4 * kPi / 3, 3));
  EXPECT_LT(distance(F, q), 1e-9);
}

TEST(FermatPoint, CollinearReturnsMiddle) {
  Point x1{0, 0.5}, x2{0, 1.3}, x3{0, 4};
  EXPECT_LT(distance(fermat_point(x1, x2, x3), x2), 1e-12);
}

TEST(FermatPoint, MatchesGridOracle) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 20; ++k) {
    Point x1 = random_point(rng), x2 = random_point(rng), x3 = random_point(rng);
    auto f = [&](Point p) { return distance(p, x1) + distance(p, x2) + distance(p, x3); };
    Point G = grid_minimize(f, x1, 6.0, 4.0);
    Point F = fermat_point(x1, x2, x3);
    EXPECT_LT(distance(F, G), 1e-4);
    EXPECT_LE(f(F), f(G) + 1e-9);
  }
}

TEST(FermatPoint, FatTriplesHaveInteriorFermatPoint) {
  std::mt19937_64 rng(8);
  int fat = 0;
  for (int k = 0; k < 2000; ++k) {
    Point x1 = random_point(rng, 3), x2 = random_point(rng, 3), x3 = random_point(rng, 3);
    if (!fat_triple_predicate(x1, x2, x3, kC0 * kDeltaH2)) continue;
    ++fat;
    Point F = fermat_point(x1, x2, x3);
    for (Point p : {x1, x2, x3}) EXPECT_GT(distance(F, p), 1e-6);
  }
  EXPECT_GT(fat, 50);
}

TEST(FatTriple, Examples) {
  Point q{0, 1};
  double side = 10;
  // circumradius from the right triangle at the center: sinh(side/2) = sinh(R) sin(pi/3)
  double R = std::asinh(std::sinh(side / 2) / std::sin(kPi / 3));
  Point a = exp_map(q, 0, R), b = exp_map(q, 2 * kPi / 3, R), c = exp_map(q, 4 * kPi / 3, R);
  EXPECT_NEAR(distance(a, b), side, 1e-9);
  EXPECT_TRUE(fat_triple_predicate(a, b, c, 1.0));
  EXPECT_FALSE(fat_triple_predicate(a, a, c, 0.0));
  EXPECT_FALSE(fat_triple_predicate({0, 1}, {0, 2}, {0, 5}, 0.0));
}

TEST(SegmentOrder, FermatPointCaseIsBoundaryOrderOfRays) {
  std::mt19937_64 rng(9);
  int checked = 0;
  for (int k = 0; k < 500; ++k) {
    Point y1 = random_point(rng, 3), y2 = random_point(rng, 3), y3 = random_point(rng, 3);
    if (!fat_triple_predicate(y1, y2, y3, kC0 * kDeltaH2)) continue;
    Point F = fermat_point(y1, y2, y3);
    // ray endpoints by walking far along each ray and reading the real coordinate
    auto far_end = [&](Point y) {
      Point p = exp_map(F, direction_to(F, y), 30.0);
      return boundary_from_real(p.x);
    };
    int expect = boundary_order(far_end(y1), far_end(y2), far_end(y3));
    EXPECT_EQ(segment_order(F, F, F, y1, y2, y3), expect);
    ++checked;
  }
  EXPECT_GT(checked, 10);
}

TEST(SegmentOrder, StableSwapAndIsometryCovariance) {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> ang(0, 2 * kPi), small(0, 0.009);
  for (int k = 0; k < 200; ++k) {
    Point c = random_point(rng);
    double phi = ang(rng);
    Point y1 = exp_map(c, phi, 3), y2 = exp_map(c, phi + 2.0, 3.5), y3 = exp_map(c, phi + 4.2, 2.5);
    Point F = fermat_point(y1, y2, y3);
    int s = segment_order(F, F, F, y1, y2, y3);
    Point x1 = exp_map(F, ang(rng), small(rng)), x2 = exp_map(F, ang(rng), small(rng)),
          x3 = exp_map(F, ang(rng), small(rng));
    std::array<Point, 3> X{x1, x2, x3}, Y{y1, y2, y3};
    if (convex_condition(X, Y)) {
      EXPECT_EQ(segment_order(x1, x2, x3, y1, y2, y3), s);
    }
    EXPECT_EQ(segment_order(F, F, F, y1, y3, y2), -s);
    Isometry g = random_isometry(rng);
    EXPECT_EQ(segment_order(g.apply(F), g.apply(F), g.apply(F), g.apply(y1), g.apply(y2),
                            g.apply(y3)),
              s);
    EXPECT_EQ(segment_order(mirror(F), mirror(F), mirror(F), mirror(y1), mirror(y2), mirror(y3)),
              -s);
  }
}

TEST(Align, RecoversKnownIsometry) {
  std::mt19937_64 rng(11);
  std::vector<Point> K;
  for (int k = 0; k < 6; ++k) K.push_back(random_point(rng));
  Isometry g = random_isometry(rng);
  std::vector<Point> Kp;
  for (Point p : K) Kp.push_back(g.apply(p));
  AlignResult r = align_configurations(K, Kp, false);
  EXPECT_LT(r.residual, 1e-9);
  EXPECT_FALSE(r.map.reflect);
  for (std::size_t i = 0; i < K.size(); ++i) EXPECT_LT(distance(r.map.apply(K[i]), Kp[i]), 1e-9);
}

TEST(Align, MirrorNeedsReflection) {
  std::vector<Point> K{{0, 1}, {2, 1.5}, {-0.5, 4}};
  std::vector<Point> Kp;
  for (Point p : K) Kp.push_back(mirror(p));
  AlignResult no = align_configurations(K, Kp, false);
  EXPECT_GT(no.residual, 0.1);
  AlignResult yes = align_configurations(K, Kp, true);
  EXPECT_LT(yes.residual, 1e-9);
  EXPECT_TRUE(yes.map.reflect);
}

TEST(MinDisplacement, CommonFixedPoint) {
  DisplacementResult r =
      min_displacement(std::vector<Isometry>{Isometry::rotation(0.3), Isometry::rotation(1.1)});
  EXPECT_NEAR(r.d, 0.0, 1e-9);
  EXPECT_LT(distance(r.minimizer, base_point()), 1e-6);
}

TEST(MinDisplacement, SingleHyperbolic) {
  DisplacementResult r = min_displacement(std::vector<Isometry>{{2, 0, 0, 0.5}});
  EXPECT_NEAR(r.d, 2 * std::log(2.0), 1e-9);
  EXPECT_NEAR(r.minimizer.x, 0.0, 1e-9);
  EXPECT_TRUE(r.attained);
}

TEST(MinDisplacement, MatchesGridOracle) {
  for (int k = 0; k < 5; ++k) {
    Representation rho = random_representation(2, derive_seed(100, k));
    EXPECT_NEAR(min_displacement(rho).d, grid_min_displacement(rho.images), 1e-4);
  }
}

TEST(MinDisplacement, ConjugationInvariant) {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 10; ++k) {
    Representation rho = random_representation(2, derive_seed(101, k));
    Isometry g = random_isometry(rng);
    std::vector<Isometry> conj;
    for (const Isometry& s : rho.images) conj.push_back(conjugate(g, s));
    EXPECT_NEAR(min_displacement(conj).d, min_displacement(rho).d, 1e-6);
  }
}

TEST(MinDisplacement, ScaledPlaneDividesByScale) {
  Representation rho = random_representation(2, derive_seed(102, 0));
  EXPECT_NEAR(min_displacement(rho, ScaledPlane{4}).d, min_displacement(rho).d / 4, 1e-8);
}

TEST(Semisimplify, UpperTriangularGivesDiagonalParts) {
  Representation rho;
  rho.genus = 1;
  rho.images = {{2, 0.7, 0, 0.5}, {3, -1.2, 0, 1.0 / 3}};
  Representation s = semisimplify(rho, boundary_from_real(INFINITY));
  EXPECT_NEAR(s.images[0].a, 2, 1e-12);
  EXPECT_NEAR(s.images[0].d, 0.5, 1e-12);
  EXPECT_NEAR(s.images[1].a, 3, 1e-12);
  EXPECT_EQ(s.images[1].b, 0.0);
  EXPECT_EQ(s.images[1].c, 0.0);
}

TEST(Semisimplify, ParabolicBecomesTrivial) {
  Representation rho;
  rho.genus = 1;
  rho.images = {{1, 0.7, 0, 1}, {1, -2, 0, 1}};
  Representation s = semisimplify(rho, boundary_from_real(INFINITY));
  for (const Isometry& m : s.images) EXPECT_LT(m.distance_to_identity(), 1e-12);
}

TEST(Semisimplify, TranslationLengthsFromEigenvalues) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-2, 2);
  Isometry g = random_isometry(rng);
  BoundaryPoint r1 = g.apply(boundary_from_real(INFINITY));
  Representation rho;
  rho.genus = 2;
  std::vector<double> lambdas;
  for (int k = 0; k < 4; ++k) {
    double lam = std::exp(u(rng));
    lambdas.push_back(lam);
    rho.images.push_back(conjugate(g, {lam, u(rng), 0, 1 / lam}));
  }
  Representation s = semisimplify(rho, r1);
  for (int k = 0; k < 4; ++k) {
    Kind kind = classify(s.images[k]);
    EXPECT_NEAR(kind.value, std::abs(2 * std::log(lambdas[k])), 1e-9);
  }
  EXPECT_THROW(semisimplify(rho, {r1.theta + 0.3}), NotFixing);
}

TEST(Delta, BigQuadrupleCalibration) {
  EXPECT_NEAR(delta_estimate(big_quadruple(ScaledPlane{}), ScaledPlane{}), kDeltaH2,
              0.01 * kDeltaH2);
  EXPECT_NEAR(kDeltaH2, std::log(1 + std::sqrt(2.0)), 1e-15);
  EXPECT_NEAR(kC0, std::log(3.0) / (2 * std::log(1 + std::sqrt(2.0))), 1e-15);
  ScaledPlane ten{10};
  EXPECT_NEAR(ten.delta() * ten.scale, kDeltaH2, 1e-12);
  EXPECT_NEAR(delta_estimate(big_quadruple(ten), ten), kDeltaH2 / 10, 0.001 * kDeltaH2);
  EXPECT_NEAR(delta_estimate(big_quadruple(ScaledPlane{}, {3, 0.2}), ScaledPlane{}), kDeltaH2,
              0.01 * kDeltaH2);
}

TEST(Delta, TreeTripodIsZero) {
  Quadruple q;
  q.dAB1 = q.dAB2 = q.dAB3 = 1;
  q.dB1B2 = q.dB1B3 = q.dB2B3 = 2;
  EXPECT_EQ(delta_estimate(q), 0.0);
  q.dB1B3 = 1.5;
  EXPECT_THROW(delta_estimate(q), NotBig);
}

TEST(DistanceToAxis, CosineLawInequality) {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> len(0.1, 4);
  for (int k = 0; k < 2000; ++k) {
    Isometry g = random_isometry(rng);
    double l = len(rng);
    Isometry u = conjugate(g, Isometry::axial(l));
    Point x = random_point(rng);
    Point p = g.inverse().apply(x);
    double r = std::asinh(std::abs(p.x) / p.y);
    double lhs = std::cosh(distance(x, u.apply(x)));
    double rhs = 1 + (std::cosh(l) - 1) * std::cosh(r) * std::cosh(r);
    EXPECT_GE(lhs, rhs - 1e-9 * rhs);
  }
}
