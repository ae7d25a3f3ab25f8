#include "surfrep/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace surfrep {

namespace {

// Lines with comments stripped; blank lines dropped.
std::vector<std::pair<int, std::string>> content_lines(std::istream& in) {
  std::vector<std::pair<int, std::string>> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.emplace_back(number, line);
  }
  return out;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return in;
}

[[noreturn]] void fail(int line, const std::string& why) {
  throw ParseError("line " + std::to_string(line) + ": " + why);
}

// All whitespace-separated doubles of a line; fails on trailing junk.
std::vector<double> numbers(int line, const std::string& text) {
  std::istringstream ss(text);
  std::vector<double> out;
  std::string tok;
  while (ss >> tok) {
    std::size_t used = 0;
    double v;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      fail(line, "not a number: " + tok);
    }
    if (used != tok.size() || !std::isfinite(v)) fail(line, "not a number: " + tok);
    out.push_back(v);
  }
  return out;
}

}  // namespace

Representation read_rep(std::istream& in) {
  auto lines = content_lines(in);
  if (lines.empty()) throw ParseError("empty representation file");
  std::istringstream head(lines[0].second);
  std::string key;
  int g = 0;
  std::string extra;
  if (!(head >> key >> g) || key != "genus" || (head >> extra)) fail(lines[0].first, "expected 'genus <g>'");
  if (g < 1) fail(lines[0].first, "genus must be positive");
  if (static_cast<int>(lines.size()) != 1 + 2 * g)
    throw ParseError("expected " + std::to_string(2 * g) + " matrix lines, found " +
                     std::to_string(lines.size() - 1));
  std::vector<Isometry> images;
  for (int k = 1; k <= 2 * g; ++k) {
    auto v = numbers(lines[k].first, lines[k].second);
    if (v.size() != 4) fail(lines[k].first, "expected four matrix entries");
    double det = v[0] * v[3] - v[1] * v[2];
    if (!(std::abs(det - 1) < 1e-6)) fail(lines[k].first, "determinant is not 1");
    images.push_back({v[0], v[1], v[2], v[3]});
  }
  return make_representation(g, std::move(images));
}

Representation read_rep_file(const std::string& path) {
  auto in = open(path);
  return read_rep(in);
}

void write_rep(std::ostream& out, const Representation& rho) {
  out << "genus " << rho.genus << '\n';
  char buf[128];
  for (const Isometry& s : rho.images) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g %.17g\n", s.a, s.b, s.c, s.d);
    out << buf;
  }
}

void write_rep_file(const std::string& path, const Representation& rho) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  write_rep(out, rho);
}

std::vector<Point> read_points(std::istream& in) {
  std::vector<Point> out;
  for (const auto& [line, text] : content_lines(in)) {
    auto v = numbers(line, text);
    if (v.size() != 2) fail(line, "expected 'x y'");
    if (!(v[1] > 0)) fail(line, "point must lie in the upper half-plane");
    out.push_back({v[0], v[1]});
  }
  return out;
}

std::vector<Point> read_points_file(const std::string& path) {
  auto in = open(path);
  return read_points(in);
}

std::vector<Word> read_words(std::istream& in, int genus) {
  std::vector<Word> out;
  for (const auto& [line, text] : content_lines(in)) {
    try {
      out.push_back(parse_word(text, genus));
    } catch (const ParseError& e) {
      fail(line, e.what());
    }
  }
  return out;
}

std::vector<Word> read_words_file(const std::string& path, int genus) {
  auto in = open(path);
  return read_words(in, genus);
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace surfrep
