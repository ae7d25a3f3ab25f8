#pragma once

// Text formats: representation files, point lists and word lists.

#include <iosfwd>
#include <string>
#include <vector>

#include "surfrep/group.hpp"
#include "surfrep/hyp2.hpp"
#include "surfrep/representation.hpp"

namespace surfrep {

// "genus <g>" then 2g lines "a b c d"; '#' starts a comment.  Each matrix
// must have |det - 1| < 1e-6.  Throws ParseError.
Representation read_rep(std::istream& in);
Representation read_rep_file(const std::string& path);
// Entries are written with 17 significant digits so that reading back is exact.
void write_rep(std::ostream& out, const Representation& rho);
void write_rep_file(const std::string& path, const Representation& rho);

// One "x y" pair per line with y > 0.
std::vector<Point> read_points(std::istream& in);
std::vector<Point> read_points_file(const std::string& path);

// One word per line in the syntax of parse_word.
std::vector<Word> read_words(std::istream& in, int genus);
std::vector<Word> read_words_file(const std::string& path, int genus);

// Numbers printed with 12 significant digits.
std::string format_number(double v);

}  // namespace surfrep
