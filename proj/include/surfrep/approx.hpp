#pragma once

// Equivariant epsilon-approximations between orbit configurations in scaled
// hyperbolic planes and trees, and the degeneration experiment for rho'_n.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "surfrep/group.hpp"
#include "surfrep/hyp2.hpp"
#include "surfrep/representation.hpp"
#include "surfrep/rtree.hpp"

namespace surfrep {

// Labeled points of a space carrying an action of the surface group.
class Configuration {
 public:
  virtual ~Configuration() = default;

  virtual const std::vector<std::string>& labels() const = 0;
  virtual double delta() const = 0;
  // d(rho(g) x_i, rho(h) x_j)
  virtual double distance(const Word& g, int i, const Word& h, int j) const = 0;
  // Cyclic order of three translated points seen from their center; 0 when undefined.
  virtual int orientation(const std::array<std::pair<Word, int>, 3>& triple) const = 0;
};

class PlaneConfiguration : public Configuration {
 public:
  PlaneConfiguration(ScaledPlane plane, Representation rho, std::vector<Point> points,
                     std::vector<std::string> labels);

  const std::vector<std::string>& labels() const override { return labels_; }
  double delta() const override { return plane_.delta(); }
  double distance(const Word& g, int i, const Word& h, int j) const override;
  int orientation(const std::array<std::pair<Word, int>, 3>& triple) const override;

  Point translate(const Word& g, int i) const;

 private:
  ScaledPlane plane_;
  Representation rho_;
  std::vector<Point> points_;
  std::vector<std::string> labels_;
};

class TreeConfiguration : public Configuration {
 public:
  TreeConfiguration(FatTree tree, TreeAction action, std::vector<TreePoint> points,
                    std::vector<std::string> labels);

  const std::vector<std::string>& labels() const override { return labels_; }
  double delta() const override { return 0.0; }
  double distance(const Word& g, int i, const Word& h, int j) const override;
  int orientation(const std::array<std::pair<Word, int>, 3>& triple) const override;

  // Throws HypothesisViolation when the word leaves the domain of the partial maps.
  TreePoint translate(const Word& g, int i) const;

 private:
  FatTree tree_;
  TreeAction action_;
  std::vector<TreeIsometry> inverses_;
  std::vector<TreePoint> points_;
  std::vector<std::string> labels_;
};

// The base vertex of the unit-edge Bass-Serre tree, distances from normal forms.
class BassSerreConfiguration : public Configuration {
 public:
  BassSerreConfiguration(int genus, TrivialityTest trivial);

  const std::vector<std::string>& labels() const override { return labels_; }
  double delta() const override { return 0.0; }
  double distance(const Word& g, int i, const Word& h, int j) const override;
  int orientation(const std::array<std::pair<Word, int>, 3>&) const override { return 0; }

 private:
  int genus_;
  TrivialityTest trivial_;
  std::vector<std::string> labels_{"x0"};
};

struct OrderWitness {
  std::array<std::pair<Word, int>, 3> triple;
  int sign = 0;
  int sign_prime = 0;
};

struct ApproxReport {
  double distortion = 0.0;
  double delta_gap = 0.0;
  bool order_agreement = true;
  std::vector<OrderWitness> witnesses;
  bool pass = false;
};

// Max distortion over g, h in P and all label pairs, and the delta gap.
// Throws LabelMismatch when the label sets differ.
ApproxReport epsilon_check(const Configuration& K, const Configuration& Kp,
                           const std::vector<Word>& P, double eps);
// Also compares orientations of every triple of translated points that is fat
// at level C0 (delta(K) + eps) + 3 eps in K.
ApproxReport oriented_check(const Configuration& K, const Configuration& Kp,
                            const std::vector<Word>& P, double eps);

struct Rescaling {
  ScaledPlane plane;
  double d = 0.0;
};

// scale = max(1, d(rho)).
Rescaling rescale(const Representation& rho);

struct DegenerationRow {
  long n = 0;
  std::string word;
  double scaled_distance = 0.0;
  double tree_length = 0.0;
  double gap = 0.0;
};

// d(x0, rho'_n(w) x0) with the point pushed through the word one letter at a
// time in extended precision; b_g powers are applied in the axis frame.
long double degeneration_distance(const Representation& base, BoundaryPoint a0, Point x0, long n,
                                  const Word& w);
std::vector<DegenerationRow> degeneration_table(int g, const Representation& base,
                                                BoundaryPoint a0, Point x0,
                                                const std::vector<Word>& words,
                                                const std::vector<long>& ns);
// Word set with z-profiles summing to 0, 0, 1, 1, 2 and 5.
std::vector<Word> default_degeneration_words(int g);

struct DegenerationSetup {
  Representation base;
  BoundaryPoint a0;
  Point x0;
};

// Random genus g - 1 base, a0 drawn until no base generator fixes it, x0 = i.
DegenerationSetup default_degeneration_setup(int g, std::uint64_t seed);

}  // namespace surfrep
