#pragma once

// Geometry of the hyperbolic plane in the upper half-plane model.
//
// Boundary points are coded by an angle theta in [0, pi): the direction of the
// vector (cos theta, sin theta), on which an isometry acts linearly.  In
// half-plane terms theta corresponds to t = cot(theta), so theta = 0 is the
// point at infinity.  Increasing theta is the positive (anticlockwise) sense.

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "surfrep/errors.hpp"

namespace surfrep {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
// ln(1 + sqrt 2)
inline constexpr double kDeltaH2 = 0.88137358701954302523;
// ln 3 / (2 ln(1 + sqrt 2)), the fatness constant of Fermat point triples
inline constexpr double kC0 = 0.62323871786490792095;

struct Point {
  double x = 0.0;
  double y = 1.0;

  Complex z() const { return {x, y}; }
  static Point from(Complex w) { return {w.real(), w.imag()}; }
};

inline Point base_point() { return {0.0, 1.0}; }

struct BoundaryPoint {
  double theta = 0.0;
};

// Reduces an angle to [0, pi).
double wrap_pi(double theta);
// Boundary point of the real number t (and of infinity for t = +-inf).
BoundaryPoint boundary_from_real(double t);
// Half-plane coordinate of a boundary point; +inf for theta = 0.
double boundary_to_real(BoundaryPoint p);
// Signed angular gap from p to q in (-pi/2, pi/2].
double boundary_gap(BoundaryPoint p, BoundaryPoint q);

struct Isometry {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

  static Isometry identity() { return {}; }
  // Normalizes to determinant one; throws NotIsometry when det <= 0.
  static Isometry from_entries(double a, double b, double c, double d);
  // Rotation about i shifting every boundary angle by +theta.
  static Isometry rotation(double theta);
  // z -> e^t z: translation by t along the imaginary axis, attracting infinity.
  static Isometry axial(double t);
  // Orientation-preserving map sending i to p (affine, no rotation).
  static Isometry translation_to(Point p);
  static Isometry rotation_about(Point p, double theta);

  double det() const { return a * d - b * c; }
  double trace() const { return a + d; }
  Isometry inverse() const { return {d, -b, -c, a}; }
  Isometry normalized() const;
  Isometry operator*(const Isometry& o) const;

  Complex apply(Complex z) const;
  // Imaginary part as y / |cz + d|^2, which assumes determinant one.
  Point apply(Point p) const;
  BoundaryPoint apply(BoundaryPoint p) const;

  // True when the stored matrix is literally +-I.
  bool is_exact_identity() const;
  // min over the sign of the largest entry deviation from the identity.
  double distance_to_identity() const;
};

// g A g^-1
Isometry conjugate(const Isometry& g, const Isometry& A);
// Conjugation by the reflection z -> -conj(z).
Isometry mirror(const Isometry& A);
Point mirror(Point p);

struct Kind {
  enum class Type { Identity, Elliptic, Parabolic, Hyperbolic };
  Type type = Type::Identity;
  // Rotation angle in (0, pi) for Elliptic, translation length for Hyperbolic.
  double value = 0.0;
};

inline constexpr double kTraceTolerance = 1e-9;

double distance(Point p, Point q);
Kind classify(const Isometry& A);
std::vector<BoundaryPoint> boundary_fixed_points(const Isometry& A);
int boundary_order(BoundaryPoint a, BoundaryPoint b, BoundaryPoint c);

// Geodesic through p leaving in the unit direction of angle phi (measured in
// the orthonormal frame aligned with the x and y axes), followed for length t.
Point exp_map(Point p, double phi, double t);
// Angle of the unit direction at p pointing towards q.
double direction_to(Point p, Point q);
// Endpoint of the geodesic ray from x through y.  Requires x != y.
BoundaryPoint ray_endpoint(Point x, Point y);

struct ScaledPlane {
  double scale = 1.0;

  double delta() const { return kDeltaH2 / scale; }
  double distance(Point p, Point q) const { return surfrep::distance(p, q) / scale; }
};

Point fermat_point(Point x1, Point x2, Point x3, const ScaledPlane& plane = {},
                   int max_iterations = 10000);
bool fat_triple_predicate(Point x1, Point x2, Point x3, double A,
                          const ScaledPlane& plane = {});
bool convex_condition(const std::array<Point, 3>& x, const std::array<Point, 3>& y);
int segment_order(Point x1, Point x2, Point x3, Point y1, Point y2, Point y3);

// An isometry possibly preceded by the reflection z -> -conj(z).
struct Aligner {
  Isometry g;
  bool reflect = false;

  Point apply(Point p) const { return g.apply(reflect ? mirror(p) : p); }
};

struct AlignResult {
  Aligner map;
  double residual = 0.0;
};

AlignResult align_configurations(const std::vector<Point>& K, const std::vector<Point>& Kp,
                                 bool allow_reflection);

struct Representation;

struct DisplacementResult {
  double d = 0.0;
  Point minimizer;
  // False when the iterates escaped towards the boundary; d is then an
  // estimate of the infimum.
  bool attained = true;
  int iterations = 0;
};

DisplacementResult min_displacement(const std::vector<Isometry>& generators,
                                    const ScaledPlane& plane = {}, int max_iterations = 2000);
DisplacementResult min_displacement(const Representation& rho, const ScaledPlane& plane = {},
                                    int max_iterations = 2000);
// max over generators of d(x, s x) in the plane's metric.
double max_displacement(const std::vector<Isometry>& generators, Point x,
                        const ScaledPlane& plane = {});

// Diagonal parts diag(|mu|, 1/|mu|) of a representation fixing r1, where mu is
// the eigenvalue on r1; r1 becomes infinity.  Throws NotFixing.
Representation semisimplify(const Representation& rho, BoundaryPoint r1);

// Pairwise distances of a quadruple (A, B1, B2, B3).
struct Quadruple {
  double dAB1 = 0, dAB2 = 0, dAB3 = 0;
  double dB1B2 = 0, dB1B3 = 0, dB2B3 = 0;
};

double delta_estimate(const Quadruple& q);
double delta_estimate(const std::array<Point, 4>& quad, const ScaledPlane& plane);
// A big quadruple of the plane: B1, B3 on a geodesic through A, B2 on the
// perpendicular, all at distance one from A in the plane's metric.
std::array<Point, 4> big_quadruple(const ScaledPlane& plane, Point center = base_point());

}  // namespace surfrep
