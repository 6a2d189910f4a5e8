#include "glres/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "glres/export.hpp"
#include "glres/verify.hpp"

namespace glres {

namespace {

struct Config {
  std::string input;
  std::optional<int> d, n;
  std::uint64_t seed = 0;
  int bound = 5;
  std::optional<int> dmax;
  std::string format = "text";
  std::string out;
  std::string checks;
  std::optional<int> degree;
};

void add_input_options(CLI::App* cmd, Config& c) {
  auto* in = cmd->add_option("--input", c.input, "inverse system JSON file");
  auto* d = cmd->add_option("--d", c.d, "number of variables (random instance)");
  auto* n = cmd->add_option("--n", c.n, "phi has degree 2n-2 (random instance)");
  auto* seed = cmd->add_option("--seed", c.seed, "random seed")->capture_default_str();
  auto* bound = cmd->add_option("--bound", c.bound, "coefficients drawn from [-bound, bound]")->capture_default_str();
  in->excludes(d)->excludes(n)->excludes(seed)->excludes(bound);
}

InverseSystem load_input(const Config& c) {
  if (!c.input.empty()) return load_invsys(c.input);
  if (!c.d || !c.n) throw InputError("give either --input or both --d and --n");
  if (*c.d < 3 || *c.d > kMaxVars) throw InputError("--d must lie in [3, 12]");
  if (*c.n < 2) throw InputError("--n must be at least 2");
  if (c.bound < 0) throw InputError("--bound must be nonnegative");
  try {
    return random_invsys(*c.d, *c.n, c.seed, c.bound);
  } catch (const std::runtime_error& e) {
    throw InadmissibleError(e.what());
  }
}

void emit(const Config& c, const std::string& text, std::ostream& out) {
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw InputError("cannot write " + c.out);
  f << text;
}

void print_summary(const Resolution& res, std::ostream& out) {
  out << "delta = " << to_string(res.delta()) << "\nbetti = (";
  for (int r = 0; r <= res.d; ++r) out << res.bases[r].size() << (r < res.d ? "," : ")\n");
  out << "twists = (";
  for (int r = 0; r <= res.d; ++r) out << res.twist[r] << (r < res.d ? "," : ")\n");
}

std::vector<std::string> split_checks(const std::string& s) {
  if (s.empty()) return all_check_names();
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto& known = all_check_names();
    if (std::find(known.begin(), known.end(), item) == known.end())
      throw InputError("unknown check: " + item);
    out.push_back(item);
  }
  if (out.empty()) throw InputError("--checks is empty");
  return out;
}

int cmd_resolve(const Config& c, std::ostream& out) {
  const Format f = parse_format(c.format);
  const Resolution res = build_resolution(load_input(c));
  print_summary(res, out);
  emit(c, export_resolution(res, f), out);
  return kExitPass;
}

int cmd_verify(const Config& c, std::ostream& out) {
  const Format f = parse_format(c.format);
  if (f == Format::Cas) throw InputError("verify reports support text and json only");
  const auto names = split_checks(c.checks);
  const InverseSystem phi = load_input(c);
  const int floor = 2 * phi.n() + phi.d() - 2;
  if (c.dmax && *c.dmax < floor)
    throw InputError("--dmax must be at least 2n+d-2 = " + std::to_string(floor));
  const Resolution res = build_resolution(phi);
  const Report rep = run_checks(res, names, c.dmax.value_or(-1));
  emit(c, f == Format::Json ? rep.json() : rep.text(), out);
  return rep.passed() ? kExitPass : kExitCheckFailed;
}

void print_polys(const std::vector<Polynomial>& ps, std::ostream& out) {
  for (std::size_t i = 0; i < ps.size(); ++i) out << "  " << i + 1 << ": " << ps[i].str() << "\n";
}

int cmd_ann(const Config& c, std::ostream& out, std::ostream& err) {
  const InverseSystem phi = load_input(c);
  const int j = c.degree.value_or(phi.n());
  if (j < 0) throw InputError("--degree must be nonnegative");
  const auto oracle = ann_degree(phi, j);
  out << "ann(phi) in degree " << j << " from the catalecticant kernel (" << oracle.size() << "):\n";
  print_polys(oracle, out);
  const Catalecticant cat = delta_and_Q(phi);
  if (!cat.admissible()) {
    err << "notice: delta = 0, so there is no resolution to compare against\n";
    return kExitInadmissible;
  }
  if (j != phi.n()) {
    out << "b1 columns live in degree " << phi.n() << "; no comparison in degree " << j << "\n";
    return kExitPass;
  }
  const Resolution res = build_resolution(phi);
  std::vector<Polynomial> cols;
  for (std::size_t k = 0; k < res.b(1).cols(); ++k) cols.push_back(res.b(1)(0, k));
  out << "columns of b1 (" << cols.size() << "):\n";
  print_polys(cols, out);
  const CheckResult r = check_ann_match(res);
  out << "spans " << (r.pass ? "agree" : "differ: " + r.witness) << "\n";
  return r.pass ? kExitPass : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Explicit Gorenstein-linear resolutions from inverse systems"};
  app.require_subcommand(1);
  Config c;
  auto* resolve = app.add_subcommand("resolve", "build the resolution and dump it");
  auto* verify = app.add_subcommand("verify", "build the resolution and run checks");
  auto* ann = app.add_subcommand("ann", "compare ann(phi) with the columns of b1");
  for (auto* cmd : {resolve, verify, ann}) add_input_options(cmd, c);
  resolve->add_option("--format", c.format, "text, json or cas")->capture_default_str();
  resolve->add_option("--out", c.out, "write the dump here instead of stdout");
  verify->add_option("--format", c.format, "text or json")->capture_default_str();
  verify->add_option("--out", c.out, "write the report here instead of stdout");
  verify->add_option("--dmax", c.dmax, "exactness degree bound (default 2n+d)");
  verify->add_option("--checks", c.checks, "comma-separated subset of " + [] {
    std::string s;
    for (const auto& nm : all_check_names()) s += (s.empty() ? "" : ",") + nm;
    return s;
  }());
  ann->add_option("--degree", c.degree, "degree of the annihilator piece (default n)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInputError;
  }
  try {
    if (*resolve) return cmd_resolve(c, out);
    if (*verify) return cmd_verify(c, out);
    return cmd_ann(c, out, err);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InadmissibleError& e) {
    err << "inadmissible: " << e.what() << "\n";
    return kExitInadmissible;
  }
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace glres
