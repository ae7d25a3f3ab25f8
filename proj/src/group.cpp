#include "surfrep/group.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <set>
#include <sstream>

namespace surfrep {

Word Presentation::relator() const { return surfrep::relator(genus); }

std::string Presentation::generator_name(int letter) const {
  int k = std::abs(letter);
  std::string s = (k % 2 == 1 ? "a" : "b") + std::to_string((k + 1) / 2);
  return letter < 0 ? s + "^-1" : s;
}

Word reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int x : w) {
    if (x == 0) continue;
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

Word concat(const Word& u, const Word& v) {
  Word w = u;
  w.insert(w.end(), v.begin(), v.end());
  return reduce(w);
}

Word power(const Word& w, long n) {
  Word base = n < 0 ? inverse(w) : w;
  Word out;
  for (long k = 0; k < std::labs(n); ++k) out.insert(out.end(), base.begin(), base.end());
  return reduce(out);
}

Word cyclic_reduce(const Word& w) {
  Word r = reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<long>(lo), r.begin() + static_cast<long>(hi));
}

Word commutator(const Word& x, const Word& y) {
  Word w = x;
  w.insert(w.end(), y.begin(), y.end());
  Word xi = inverse(x), yi = inverse(y);
  w.insert(w.end(), xi.begin(), xi.end());
  w.insert(w.end(), yi.begin(), yi.end());
  return reduce(w);
}

Word relator(int g) {
  Word w;
  for (int i = 1; i <= g; ++i) {
    Word c = {gen_a(i), gen_b(i), -gen_a(i), -gen_b(i)};
    w.insert(w.end(), c.begin(), c.end());
  }
  return w;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  Presentation names;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long n = static_cast<long>(j - i) * (w[i] < 0 ? -1 : 1);
    if (i > 0) out << ' ';
    out << names.generator_name(std::abs(w[i]));
    if (n != 1) out << '^' << n;
    i = j;
  }
  return out.str();
}

Word parse_word(const std::string& text, int genus) {
  Word w;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) { throw ParseError(why + " in word '" + text + "'"); };
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '.' || ch == '*') {
      ++i;
      continue;
    }
    if (ch == '1') {
      ++i;
      continue;
    }
    char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (lower != 'a' && lower != 'b') fail("unexpected character");
    bool inverted = std::isupper(static_cast<unsigned char>(ch));
    ++i;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) fail("missing generator index");
    int idx = std::stoi(text.substr(start, i - start));
    if (idx < 1 || idx > genus) fail("generator index out of range");
    long n = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      start = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i || (i - start == 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
        fail("bad exponent");
      n = std::stol(text.substr(start, i - start));
    }
    int letter = lower == 'a' ? gen_a(idx) : gen_b(idx);
    if (inverted) letter = -letter;
    for (long k = 0; k < std::labs(n); ++k) w.push_back(n < 0 ? -letter : letter);
  }
  return reduce(w);
}

std::vector<Word> ball(int g, int radius) {
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (int r = 1; r <= radius; ++r) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (int k = 1; k <= 2 * g; ++k) {
        for (int x : {k, -k}) {
          const Word& w = out[i];
          if (!w.empty() && w.back() == -x) continue;
          Word v = w;
          v.push_back(x);
          out.push_back(std::move(v));
        }
      }
    }
    begin = end;
  }
  return out;
}

namespace {

void push_unique(std::vector<Word>& out, std::set<Word>& seen, const Word& w) {
  if (seen.insert(w).second) out.push_back(w);
}

}  // namespace

std::vector<Word> pref_set(int g) {
  Word w = relator(g);
  std::vector<Word> out;
  std::set<Word> seen;
  for (std::size_t k = 0; k <= w.size(); ++k) {
    Word p = reduce(Word(w.begin(), w.begin() + static_cast<long>(k)));
    push_unique(out, seen, p);
    push_unique(out, seen, inverse(p));
  }
  return out;
}

std::vector<Word> orbit_words(int g) {
  std::vector<Word> out = pref_set(g);
  std::set<Word> seen(out.begin(), out.end());
  for (int k = 1; k <= 2 * g; ++k) {
    push_unique(out, seen, Word{k});
    push_unique(out, seen, Word{-k});
  }
  return out;
}

long FreeProductElement::z_length() const {
  long s = 0;
  for (const Syllable& y : syllables) s += std::labs(y.n);
  return s;
}

std::string FreeProductElement::to_string() const {
  if (syllables.empty()) return "1";
  std::string out;
  for (const Syllable& y : syllables) {
    if (!y.u.empty()) out += (out.empty() ? "" : "·") + surfrep::to_string(y.u);
    if (y.n != 0) out += (out.empty() ? "" : "·") + std::string("z^") + std::to_string(y.n);
  }
  return out;
}

namespace {

bool is_trivial(const Word& u, const TrivialityTest& trivial) {
  return u.empty() || (trivial && trivial(u));
}

FreeProductElement normalize(std::vector<Syllable> s, const TrivialityTest& trivial) {
  for (Syllable& y : s) y.u = reduce(y.u);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (is_trivial(s[i].u, trivial)) {
        s[i - 1].n += s[i].n;
        s.erase(s.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
    if (changed) continue;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i].n == 0) {
        s[i].u = concat(s[i].u, s[i + 1].u);
        s[i].n = s[i + 1].n;
        s.erase(s.begin() + static_cast<long>(i) + 1);
        changed = true;
        break;
      }
    }
  }
  if (!s.empty() && is_trivial(s[0].u, trivial)) s[0].u.clear();
  if (s.size() == 1 && s[0].u.empty() && s[0].n == 0) s.clear();
  return {s};
}

}  // namespace

FreeProductElement free_product_normal_form(const Word& w, int g, const TrivialityTest& trivial) {
  const int ag = gen_a(g), bg = gen_b(g);
  std::vector<Syllable> s{Syllable{}};
  for (int x : reduce(w)) {
    int k = std::abs(x);
    if (k == ag) continue;
    if (k == bg) {
      s.back().n += x > 0 ? 1 : -1;
      continue;
    }
    if (s.back().n != 0) s.push_back(Syllable{});
    s.back().u.push_back(x);
  }
  return normalize(std::move(s), trivial);
}

FreeProductElement multiply(const FreeProductElement& x, const FreeProductElement& y,
                            const TrivialityTest& trivial) {
  std::vector<Syllable> s = x.syllables;
  s.insert(s.end(), y.syllables.begin(), y.syllables.end());
  return normalize(std::move(s), trivial);
}

long cyclic_z_length(const FreeProductElement& x, const TrivialityTest& trivial) {
  // Syllable i is the separator u_i followed by the block z^{n_i}, read cyclically.
  std::vector<Syllable> s = x.syllables;
  bool changed = true;
  while (changed && s.size() > 1) {
    changed = false;
    for (std::size_t i = 0; i < s.size() && !changed; ++i) {
      std::size_t prev = (i + s.size() - 1) % s.size();
      if (is_trivial(s[i].u, trivial)) {
        s[prev].n += s[i].n;
        s.erase(s.begin() + static_cast<long>(i));
        changed = true;
      } else if (s[i].n == 0) {
        std::size_t next = (i + 1) % s.size();
        s[next].u = concat(s[i].u, s[next].u);
        s.erase(s.begin() + static_cast<long>(i));
        changed = true;
      }
    }
  }
  long total = 0;
  for (const Syllable& y : s) total += std::labs(y.n);
  return total;
}

Word dehn_twist(const Twist& t, const Word& w) {
  const int a = gen_a(t.handle), b = gen_b(t.handle);
  Word out;
  for (int x : w) {
    if (x == b) {
      out.push_back(b);
      Word p = power(Word{a}, t.power);
      out.insert(out.end(), p.begin(), p.end());
    } else if (x == -b) {
      Word p = power(Word{a}, -t.power);
      out.insert(out.end(), p.begin(), p.end());
      out.push_back(-b);
    } else {
      out.push_back(x);
    }
  }
  return reduce(out);
}

Isometry evaluate(const Representation& rho, const Word& w) {
  Word kept;
  kept.reserve(w.size());
  for (int x : w)
    if (!rho.gen(std::abs(x)).is_exact_identity()) kept.push_back(x);
  Isometry m;
  for (int x : reduce(kept)) {
    const Isometry& s = rho.gen(std::abs(x));
    m = m * (x > 0 ? s : s.inverse());
  }
  return m;
}

double relator_residual(const Representation& rho) {
  return evaluate(rho, relator(rho.genus)).distance_to_identity();
}

Representation make_representation(int genus, std::vector<Isometry> images) {
  Representation rho{genus, std::move(images), 0.0};
  rho.residual = relator_residual(rho);
  return rho;
}

std::vector<double> trace_signature(const Representation& rho, const std::vector<Word>& words) {
  std::vector<double> out;
  out.reserve(words.size());
  for (const Word& w : words) out.push_back(std::abs(evaluate(rho, w).trace()));
  return out;
}

}  // namespace surfrep
