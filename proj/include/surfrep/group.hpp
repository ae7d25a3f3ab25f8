#pragma once

// Words in the surface group <a1, b1, ..., ag, bg | [a1,b1]...[ag,bg]>.
//
// A letter is a signed generator index: a_i is 2i - 1, b_i is 2i, and the
// negative of an index is the inverse generator.  Commutators follow
// [x, y] = x y x^-1 y^-1.

#include <functional>
#include <string>
#include <vector>

#include "surfrep/hyp2.hpp"
#include "surfrep/representation.hpp"

namespace surfrep {

using Word = std::vector<int>;

inline int gen_a(int i) { return 2 * i - 1; }
inline int gen_b(int i) { return 2 * i; }

struct Presentation {
  int genus = 2;

  int generator_count() const { return 2 * genus; }
  Word relator() const;
  std::string generator_name(int letter) const;
};

Word reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& u, const Word& v);
Word power(const Word& w, long n);
Word cyclic_reduce(const Word& w);
Word commutator(const Word& x, const Word& y);
Word relator(int g);

// Power-compressed form such as "b3 a1 b3^-2"; the empty word prints as "1".
std::string to_string(const Word& w);
// Inverse of to_string.  Also accepts upper-case letters for inverses and
// '.' or '*' as separators.  Throws ParseError.
Word parse_word(const std::string& text, int genus);

// All reduced words of length at most radius.
std::vector<Word> ball(int g, int radius);
// Prefixes of the relator and their inverses, reduced and deduplicated.
std::vector<Word> pref_set(int g);
// pref_set together with every generator and its inverse.
std::vector<Word> orbit_words(int g);

// Returns true when a word of the genus g - 1 surface group is trivial.
using TrivialityTest = std::function<bool(const Word&)>;

struct Syllable {
  Word u;
  long n = 0;
};

// u1 z^n1 u2 z^n2 ... uk z^nk with u2..uk nontrivial and n1..n(k-1) nonzero.
// The identity has no syllables.
struct FreeProductElement {
  std::vector<Syllable> syllables;

  long z_length() const;
  bool is_identity() const { return syllables.empty(); }
  std::string to_string() const;
};

// Image under a_g -> 1, b_g -> z.  Inner syllables are merged when `trivial`
// reports them trivial; without a test only free reduction is used.
FreeProductElement free_product_normal_form(const Word& w, int g,
                                            const TrivialityTest& trivial = {});
FreeProductElement multiply(const FreeProductElement& x, const FreeProductElement& y,
                            const TrivialityTest& trivial = {});
// Sum of |n| over the cyclic normal form (minimal length in the conjugacy class).
long cyclic_z_length(const FreeProductElement& x, const TrivialityTest& trivial = {});

struct Twist {
  int handle = 1;
  long power = 0;
};

// b_i -> b_i a_i^n, every other generator fixed.
Word dehn_twist(const Twist& t, const Word& w);

// Product of the generator images.  Letters whose image is exactly +-I are
// dropped and the rest freely reduced before multiplying.
Isometry evaluate(const Representation& rho, const Word& w);
double relator_residual(const Representation& rho);
Representation make_representation(int genus, std::vector<Isometry> images);
// |trace| of rho(w) for each word.
std::vector<double> trace_signature(const Representation& rho, const std::vector<Word>& words);

}  // namespace surfrep
