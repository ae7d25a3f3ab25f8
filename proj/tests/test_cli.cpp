#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "cli.hpp"
#include "support.hpp"
#include "surfrep/approx.hpp"
#include "surfrep/io.hpp"

using namespace surfrep;
namespace fs = std::filesystem;

namespace {

struct Result {
  int status;
  std::string out, err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

class Scratch : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("surfrep_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_F(Scratch, EulerOfTrivialRep) {
  std::string path = file("trivial.rep", "genus 2\n1 0 0 1\n1 0 0 1\n1 0 0 1\n1 0 0 1\n");
  Result r = run({"euler", "--rep", path});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "e = 0\n");
}

TEST_F(Scratch, EulerOfFuchsianFile) {
  std::ostringstream text;
  write_rep(text, fuchsian_regular(2));
  Result r = run({"euler", "--rep", file("f2.rep", text.str())});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "e = 2\n");
}

TEST_F(Scratch, MalformedInputFailsWithOneLine) {
  Result r = run({"euler", "--rep", file("bad.rep", "genus 2\n1 0 0 1\n")});
  EXPECT_NE(r.status, 0);
  EXPECT_EQ(lines(r.err).size(), 1u);
  Result missing = run({"euler", "--rep", (dir_ / "nope.rep").string()});
  EXPECT_NE(missing.status, 0);
  EXPECT_EQ(lines(missing.err).size(), 1u);
  Result r2 = run({"euler"});
  EXPECT_NE(r2.status, 0);
  EXPECT_EQ(lines(r2.err).size(), 1u);
  EXPECT_NE(run({"frobnicate"}).status, 0);
  EXPECT_NE(run({}).status, 0);
  EXPECT_NE(run({"degenerate", "--genus", "3", "--n", "16,x"}).status, 0);
  EXPECT_NE(run({"angle", "--theta-over-pi", "0.3", "--bits", "0"}).status, 0);
}

TEST(Cli, ScanHistogram) {
  Result r = run({"scan", "--genus", "2", "--samples", "300", "--seed", "1"});
  EXPECT_EQ(r.status, 0);
  auto L = lines(r.out);
  ASSERT_EQ(L.size(), 7u);
  long total = 0;
  for (int e = -2; e <= 2; ++e) {
    std::string prefix = "e = " + std::to_string(e) + ": ";
    ASSERT_EQ(L[e + 2].rfind(prefix, 0), 0u) << L[e + 2];
    total += std::stol(L[e + 2].substr(prefix.size()));
  }
  EXPECT_EQ(total, 300);
  EXPECT_EQ(L[5], "samples = 300");
  EXPECT_EQ(L[6], "violations = 0");
  EXPECT_EQ(run({"scan", "--genus", "2", "--samples", "300", "--seed", "1"}).out, r.out);
}

TEST(Cli, DegenerateCsv) {
  std::vector<std::string> args{"degenerate", "--genus", "3", "--n", "16,64,256", "--words", "default"};
  Result r = run(args);
  ASSERT_EQ(r.status, 0) << r.err;
  auto L = lines(r.out);
  ASSERT_FALSE(L.empty());
  EXPECT_EQ(L[0], "n,word,scaled_distance,tree_length,gap");
  EXPECT_EQ(L.size(), 1 + 3 * default_degeneration_words(3).size());
  std::map<std::string, std::vector<double>> gaps;
  for (std::size_t k = 1; k < L.size(); ++k) {
    std::vector<std::string> f;
    std::stringstream ss(L[k]);
    for (std::string c; std::getline(ss, c, ',');) f.push_back(c);
    ASSERT_EQ(f.size(), 5u) << L[k];
    gaps[f[1]].push_back(std::stod(f[4]));
  }
  for (const auto& [word, g] : gaps) {
    ASSERT_EQ(g.size(), 3u);
    for (std::size_t k = 1; k < g.size(); ++k) EXPECT_LE(g[k], g[k - 1] + 1e-12) << word;
  }
  EXPECT_EQ(run(args).out, r.out);
}

TEST_F(Scratch, DegenerateWordFile) {
  std::string words = file("w.txt", "b3\na1 b3 a2\n");
  Result r = run({"degenerate", "--genus", "3", "--n", "4", "--words", words, "--seed", "2"});
  ASSERT_EQ(r.status, 0) << r.err;
  auto L = lines(r.out);
  ASSERT_EQ(L.size(), 3u);
  EXPECT_EQ(L[1].rfind("4,b3,1,1,", 0), 0u) << L[1];
}

TEST(Cli, Angle) {
  Result r = run({"angle", "--theta-over-pi", "0.375", "--bits", "10"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "digits = 0 1 1\nterminated = yes\ntheta/pi = 0.375\n");
  Result d = run({"angle", "--theta-over-pi", "0.5", "--bits", "10"});
  EXPECT_NE(d.status, 0);
  EXPECT_EQ(lines(d.err).size(), 1u);
}

TEST_F(Scratch, AlignAndMinDisp) {
  std::mt19937_64 rng(3);
  Isometry g = random_isometry(rng);
  std::ostringstream a, b;
  for (int k = 0; k < 4; ++k) {
    Point p = testing_support::random_point(rng);
    Point q = g.apply(p);
    a << format_number(p.x) << ' ' << format_number(p.y) << '\n';
    b << format_number(q.x) << ' ' << format_number(q.y) << '\n';
  }
  Result r = run({"align", "--config", file("a.pts", a.str()), "--config", file("b.pts", b.str())});
  ASSERT_EQ(r.status, 0) << r.err;
  auto L = lines(r.out);
  ASSERT_EQ(L.size(), 3u);
  ASSERT_EQ(L[0].rfind("residual = ", 0), 0u);
  EXPECT_LT(std::stod(L[0].substr(11)), 1e-9);
  EXPECT_EQ(L[1], "reflect = no");
  EXPECT_NE(run({"align", "--config", file("c.pts", a.str())}).status, 0);

  std::ostringstream rep;
  write_rep(rep, fuchsian_regular(2));
  Result m = run({"min-disp", "--rep", file("f2.rep", rep.str())});
  ASSERT_EQ(m.status, 0) << m.err;
  auto M = lines(m.out);
  ASSERT_EQ(M.size(), 3u);
  EXPECT_NEAR(std::stod(M[0].substr(4)), min_displacement(fuchsian_regular(2)).d, 1e-9);
}
