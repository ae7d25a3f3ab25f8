#include "cli.hpp"

#include <CLI11.hpp>

#include <map>
#include <ostream>
#include <sstream>

#include "surfrep/approx.hpp"
#include "surfrep/cyclic.hpp"
#include "surfrep/families.hpp"
#include "surfrep/hyp2.hpp"
#include "surfrep/io.hpp"
#include "surfrep/lift.hpp"

namespace surfrep::cli {

namespace {

std::vector<long> parse_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("bad integer '" + tok + "' in list");
    }
    if (used != tok.size()) throw ParseError("bad integer '" + tok + "' in list");
    out.push_back(v);
  }
  if (out.empty()) throw ParseError("empty list");
  return out;
}

int cmd_euler(const std::string& path, std::ostream& out) {
  Representation rho = read_rep_file(path);
  out << "e = " << euler_milnor(rho) << '\n';
  return 0;
}

int cmd_scan(int genus, long samples, std::uint64_t seed, std::ostream& out) {
  if (genus < 1) throw ParseError("genus must be positive");
  const long bound = 2L * genus - 2;
  std::map<long, long> histogram;
  for (long e = -bound; e <= bound; ++e) histogram[e] = 0;
  long violations = 0;
  for (long i = 0; i < samples; ++i) {
    long e = euler_milnor(random_representation(genus, derive_seed(seed, static_cast<std::uint64_t>(i))));
    ++histogram[e];
    if (e < -bound || e > bound) ++violations;
  }
  for (const auto& [e, count] : histogram) out << "e = " << e << ": " << count << '\n';
  out << "samples = " << samples << '\n';
  out << "violations = " << violations << '\n';
  return violations == 0 ? 0 : 3;
}

int cmd_degenerate(int genus, const std::string& ns, const std::string& words_arg,
                   std::uint64_t seed, std::ostream& out) {
  std::vector<long> n_values = parse_list(ns);
  std::vector<Word> words = words_arg == "default" ? default_degeneration_words(genus)
                                                   : read_words_file(words_arg, genus);
  DegenerationSetup s = default_degeneration_setup(genus, seed);
  auto rows = degeneration_table(genus, s.base, s.a0, s.x0, words, n_values);
  out << "n,word,scaled_distance,tree_length,gap\n";
  for (const DegenerationRow& r : rows)
    out << r.n << ',' << r.word << ',' << format_number(r.scaled_distance) << ','
        << format_number(r.tree_length) << ',' << format_number(r.gap) << '\n';
  return 0;
}

int cmd_angle(double x, int bits, std::ostream& out) {
  if (bits < 1 || bits > 60) throw ParseError("bits must be in 1..60");
  Isometry A = Isometry::rotation(x * kPi);
  DyadicAngle r = dyadic_angle_recovery(isometry_power_oracle(A, BoundaryPoint{0.0}), bits);
  out << "digits =";
  for (int d : r.digits) out << ' ' << d;
  out << '\n';
  out << "terminated = " << (r.terminated ? "yes" : "no") << '\n';
  out << "theta/pi = " << format_number(r.value) << '\n';
  return 0;
}

int cmd_align(const std::vector<std::string>& configs, bool allow_reflection, std::ostream& out) {
  if (configs.size() != 2) throw ParseError("align needs exactly two --config files");
  auto K = read_points_file(configs[0]);
  auto Kp = read_points_file(configs[1]);
  AlignResult r = align_configurations(K, Kp, allow_reflection);
  const Isometry& g = r.map.g;
  out << "residual = " << format_number(r.residual) << '\n';
  out << "reflect = " << (r.map.reflect ? "yes" : "no") << '\n';
  out << "map = " << format_number(g.a) << ' ' << format_number(g.b) << ' ' << format_number(g.c)
      << ' ' << format_number(g.d) << '\n';
  return 0;
}

int cmd_min_disp(const std::string& path, std::ostream& out) {
  Representation rho = read_rep_file(path);
  DisplacementResult r = min_displacement(rho);
  out << "d = " << format_number(r.d) << '\n';
  out << "minimizer = " << format_number(r.minimizer.x) << ' ' << format_number(r.minimizer.y) << '\n';
  out << "attained = " << (r.attained ? "yes" : "no") << '\n';
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Euler classes, displacement and degenerations of surface group representations",
               "surfrep"};
  app.require_subcommand(1);

  std::string rep_path;
  auto* euler = app.add_subcommand("euler", "Euler class of a representation file");
  euler->add_option("--rep", rep_path, "representation file")->required();

  int genus = 2;
  long samples = 10000;
  std::uint64_t seed = 1;
  auto* scan = app.add_subcommand("scan", "Euler class histogram of random representations");
  scan->add_option("--genus", genus)->required();
  scan->add_option("--samples", samples)->required()->check(CLI::NonNegativeNumber);
  scan->add_option("--seed", seed)->required();

  std::string n_list, words = "default";
  auto* degen = app.add_subcommand("degenerate", "CSV of the rho'_n degeneration experiment");
  degen->add_option("--genus", genus)->required();
  degen->add_option("--n", n_list, "comma separated translation lengths")->required();
  degen->add_option("--words", words, "'default' or a word file");
  degen->add_option("--seed", seed);

  double theta_over_pi = 0;
  int bits = 20;
  auto* angle = app.add_subcommand("angle", "recover a rotation angle from order data");
  angle->add_option("--theta-over-pi", theta_over_pi)->required();
  angle->add_option("--bits", bits)->required();

  std::vector<std::string> configs;
  bool allow_reflection = false;
  auto* align = app.add_subcommand("align", "align two point configurations");
  align->add_option("--config", configs, "point file (give twice)")->required()->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  align->add_flag("--allow-reflection", allow_reflection);

  auto* mind = app.add_subcommand("min-disp", "minimal displacement of a representation file");
  mind->add_option("--rep", rep_path, "representation file")->required();

  std::vector<std::string> storage{"surfrep"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << '\n';
    return e.get_exit_code() ? e.get_exit_code() : 2;
  }

  try {
    if (*euler) return cmd_euler(rep_path, out);
    if (*scan) return cmd_scan(genus, samples, seed, out);
    if (*degen) return cmd_degenerate(genus, n_list, words, seed, out);
    if (*angle) return cmd_angle(theta_over_pi, bits, out);
    if (*align) return cmd_align(configs, allow_reflection, out);
    if (*mind) return cmd_min_disp(rep_path, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace surfrep::cli
