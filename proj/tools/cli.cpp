// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <CLI/CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "bracketframe/bracket.hpp"
#include "bracketframe/gabor.hpp"
#include "bracketframe/generators.hpp"
#include "bracketframe/io.hpp"
#include "bracketframe/ortho.hpp"
#include "bracketframe/report.hpp"

namespace bracketframe::cli {

namespace {

using nlohmann::json;

constexpr double bench_tolerance = 1e-10;

std::int64_t parse_int(const std::string& text, const std::string& spec) {
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw BadParameter("window '" + spec + "': '" + text + "' is not an integer");
  }
  return value;
}

double parse_real(const std::string& text, const std::string& spec) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw BadParameter("window '" + spec + "': '" + text + "' is not a number");
  }
  return value;
}

// Step count token: 17, -3, L, L/4, 2L, 2*L.
std::int64_t parse_steps(const std::string& token, std::int64_t L, const std::string& spec) {
  if (token == "L") return L;
  if (token.rfind("L/", 0) == 0) {
    const std::int64_t k = parse_int(token.substr(2), spec);
    if (k == 0 || L % k != 0) {
      throw BadParameter("window '" + spec + "': L/" + std::to_string(k) +
                         " is not a whole number of steps at L=" + std::to_string(L));
    }
    return L / k;
  }
  if (!token.empty() && token.back() == 'L') {
    std::string factor = token.substr(0, token.size() - 1);
    if (!factor.empty() && factor.back() == '*') factor.pop_back();
    return parse_int(factor, spec) * L;
  }
  return parse_int(token, spec);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

LatticeGrid make_grid(const RunConfig& c) {
  const std::int64_t p = c.p.value_or(c.L);
  const std::int64_t q = c.q.value_or(c.L);
  if (c.L <= 0 || p <= 0 || q <= 0) {
    throw InvalidArgument("lattice (L, p, q) must be positive, got (" + std::to_string(c.L) +
                          ", " + std::to_string(p) + ", " + std::to_string(q) + ")");
  }
  return LatticeGrid(c.L, p, q);
}

void validate(const RunConfig& c) {
  const auto in_unit = [](double x) { return x > 0.0 && x < 1.0; };
  if (!in_unit(c.tol) || !in_unit(c.zero_tol) || !in_unit(c.cg_tol)) {
    throw InvalidArgument("tolerances tol, zero_tol and cg_tol must lie in (0, 1)");
  }
  if (c.dep_tol && !(*c.dep_tol > 0.0)) throw InvalidArgument("dep_tol must be positive");
  if (c.repeat <= 0) throw InvalidArgument("repeat must be positive");
  if (c.max_iter <= 0) throw InvalidArgument("max_iter must be positive");
}

Period parse_period(const std::string& text) {
  if (text == "a") return Period::shift_a;
  if (text == "1/b" || text == "inv_b") return Period::inv_b;
  throw InvalidArgument("period must be 'a' or '1/b', got '" + text + "'");
}

void emit(const RunConfig& c, const json& doc, std::ostream& out) {
  if (c.output.empty()) {
    out << doc.dump(2) << '\n';
  } else {
    write_json_file(c.output, doc);
  }
}

SampledSignal require_window(const RunConfig& c, const LatticeGrid& grid) {
  if (c.window.empty()) throw InvalidArgument("--window is required");
  return parse_window(c.window, grid);
}

int run_bracket(const RunConfig& c, std::ostream& out) {
  const LatticeGrid grid = make_grid(c);
  const SampledSignal f = require_window(c, grid);
  const SampledSignal g = c.window2.empty() ? f : parse_window(c.window2, grid);
  const BracketFn h = bracket(f, g, parse_period(c.period));
  if (!c.csv.empty()) {
    std::ofstream csv(c.csv);
    if (!csv) throw MalformedInput("cannot write " + c.csv);
    write_csv(csv, h);
  }
  json doc = to_json(h);
  const Complex integral = h.integral();
  doc["integral"] = {{"re", integral.real()}, {"im", integral.imag()}};
  doc["max_abs"] = h.max_abs();
  if (h.max_imag_abs() <= 1e-10) {
    const ValueRange range = ess_range(h);
    doc["inf"] = range.inf;
    doc["sup"] = range.sup;
  }
  emit(c, doc, out);
  return 0;
}

int run_gram_schmidt(const RunConfig& c, std::ostream& out) {
  const LatticeGrid grid = make_grid(c);
  std::vector<SampledSignal> inputs;
  if (!c.input.empty()) inputs = signals_from_json(read_json_file(c.input), grid.p(), grid.q());
  for (const std::string& spec : c.signals) inputs.push_back(parse_window(spec, grid));
  for (const SampledSignal& s : inputs) require_same_grid(grid, s.grid(), "gram-schmidt input");
  if (inputs.empty()) throw InvalidArgument("gram-schmidt needs --in or at least one --signal");

  const AOrthoSystem sys = gram_schmidt(inputs, parse_period(c.period), c.dep_tol);
  json members = json::array();
  for (const SampledSignal& e : sys.members()) members.push_back(to_json(e));
  emit(c,
       {{"period", c.period},
        {"members", members},
        {"orthonormality_residual", sys.orthonormality_residual()}},
       out);
  return 0;
}

int run_frame_analyze(const RunConfig& c, std::ostream& out) {
  const LatticeGrid grid = make_grid(c);
  const SampledSignal g = require_window(c, grid);
  AnalysisOptions options;
  options.tol = c.tol;
  options.zero_tol = c.zero_tol;
  options.max_iter = c.max_iter;
  options.domain_margin_steps = c.margin;
  options.probe_seed = c.seed;
  const FrameReport report = analyze_frame(g, options);
  emit(c, to_json(report), out);

  const bool lower_bound_vanishes = report.tightness.g0_over_b_range.inf <= c.tol ||
                                    report.spectral.lambda_min <= c.tol;
  const bool incomplete = report.completeness &&
                          report.completeness->kind == CompletenessKind::incomplete;
  return c.strict && (lower_bound_vanishes || incomplete) ? 1 : 0;
}

int run_complete(const RunConfig& c, std::ostream& out) {
  const LatticeGrid grid = make_grid(c);
  const SampledSignal g = require_window(c, grid);
  const CompletenessVerdict v = completeness_check(g, c.zero_tol);
  json doc = to_json(v);
  doc["lattice"] = {{"L", grid.L()}, {"p", grid.p()}, {"q", grid.q()}};
  doc["zero_tol"] = c.zero_tol;
  emit(c, doc, out);
  return c.strict && v.kind == CompletenessKind::incomplete ? 1 : 0;
}

int run_reconstruct(const RunConfig& c, std::ostream& out) {
  const LatticeGrid grid = make_grid(c);
  const SampledSignal g = require_window(c, grid);
  if (c.input.empty()) throw InvalidArgument("reconstruct needs --in <signal.json>");
  const SampledSignal f = signal_from_json(read_json_file(c.input), grid.p(), grid.q());
  require_same_grid(grid, f.grid(), "reconstruct input");

  const std::int64_t margin = c.margin < 0 ? g.size() : c.margin;
  const WHSystem sys = WHSystem::around_window(g, margin);
  const SampledSignal rec = frame_reconstruct(f, sys, c.cg_tol, c.max_iter);
  const double err = max_abs_difference(rec, f) / std::max(f.max_abs(), 1e-300);
  const double l2 = (rec - f).norm() / std::max(f.norm(), 1e-300);
  emit(c,
       {{"reconstruction", to_json(rec)},
        {"relative_l2_error", l2},
        {"relative_sup_error", err},
        {"cg_tol", c.cg_tol},
        {"domain", {{"lo", std::min(sys.domain_lo(), f.offset())},
                    {"hi", std::max(sys.domain_hi(), f.end())}}}},
       out);
  return c.strict && l2 > c.cg_tol ? 1 : 0;
}

template <class Fn>
double mean_wall_ns(int repeat, Fn&& fn) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  for (int i = 0; i < repeat; ++i) fn();
  const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - start);
  return static_cast<double>(ns.count()) / repeat;
}

int run_bench(const RunConfig& c, std::ostream& out) {
  if (c.op != "naive" && c.op != "compressed" && c.op != "both") {
    throw InvalidArgument("--op must be naive, compressed or both");
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> lattices;
  if (c.p || c.q) {
    lattices.emplace_back(c.p.value_or(c.L), c.q.value_or(c.L));
  } else {
    lattices = {{c.L, c.L}, {c.L, 2 * c.L}, {2 * c.L, 3 * c.L}};
  }

  std::ostringstream csv;
  csv.precision(17);
  csv << "op,L,p,q,wall_time_ns,max_rel_err\n";
  double worst = 0.0;
  for (const auto& [p, q] : lattices) {
    RunConfig lc = c;
    lc.p = p;
    lc.q = q;
    const LatticeGrid grid = make_grid(lc);
    const SampledSignal g = parse_window(c.window.empty() ? "gaussian:c=1,hw=2" : c.window, grid);
    const WHSystem sys = WHSystem::around_window(g, q);

    std::mt19937_64 rng(c.seed);
    std::normal_distribution<double> normal;
    std::vector<Complex> samples(static_cast<std::size_t>(sys.domain_size()));
    for (Complex& v : samples) v = {normal(rng), normal(rng)};
    const SampledSignal f(grid, sys.domain_lo(), std::move(samples));

    const SampledSignal reference = frame_operator_naive(f, sys);
    const double scale = std::max(reference.max_abs(), 1e-300);
    const double err = max_abs_difference(frame_operator_compressed(f, sys), reference) / scale;
    worst = std::max(worst, err);

    if (c.op != "compressed") {
      const double t = mean_wall_ns(c.repeat, [&] { (void)frame_operator_naive(f, sys); });
      csv << "naive," << grid.L() << ',' << p << ',' << q << ',' << static_cast<long long>(t)
          << ',' << 0.0 << '\n';
    }
    if (c.op != "naive") {
      const double t = mean_wall_ns(c.repeat, [&] { (void)frame_operator_compressed(f, sys); });
      csv << "compressed," << grid.L() << ',' << p << ',' << q << ','
          << static_cast<long long>(t) << ',' << err << '\n';
    }
  }

  if (c.csv.empty() && c.output.empty()) {
    out << csv.str();
  } else {
    std::ofstream file(c.csv.empty() ? c.output : c.csv);
    if (!file) throw MalformedInput("cannot write " + (c.csv.empty() ? c.output : c.csv));
    file << csv.str();
  }
  return worst <= bench_tolerance ? 0 : 1;
}

}  // namespace

SampledSignal parse_window(const std::string& spec, const LatticeGrid& grid) {
  const std::size_t colon = spec.find(':');
  if (colon == std::string::npos) {
    throw UnknownWindow("window '" + spec + "': expected <kind>:<parameters>");
  }
  const std::string kind = spec.substr(0, colon);
  const std::string params = spec.substr(colon + 1);

  if (kind == "indicator") {
    const std::vector<std::string> parts = split(params, ',');
    if (parts.size() != 2) throw BadParameter("window '" + spec + "': expected <start>,<len>");
    const std::int64_t start = parse_steps(parts[0], grid.L(), spec);
    const std::int64_t len = parse_steps(parts[1], grid.L(), spec);
    if (len <= 0) throw BadParameter("window '" + spec + "': length must be positive");
    return indicator(grid, start, len);
  }

  if (kind == "gaussian") {
    double c = 1.0;
    std::optional<double> hw;
    for (const std::string& kv : split(params, ',')) {
      const std::size_t eq = kv.find('=');
      if (eq == std::string::npos) throw BadParameter("window '" + spec + "': expected key=value");
      const std::string key = kv.substr(0, eq);
      const double value = parse_real(kv.substr(eq + 1), spec);
      if (key == "c") {
        c = value;
      } else if (key == "hw") {
        hw = value;
      } else {
        throw BadParameter("window '" + spec + "': unknown key '" + key + "'");
      }
    }
    if (!hw) throw BadParameter("window '" + spec + "': missing hw=<halfwidth>");
    try {
      return gaussian(grid, c, *hw);
    } catch (const InvalidArgument& e) {
      throw BadParameter("window '" + spec + "': " + e.what());
    }
  }

  if (kind == "file") {
    if (params.empty()) throw BadParameter("window '" + spec + "': missing path");
    SampledSignal f(grid);
    try {
      f = signal_from_json(read_json_file(params), grid.p(), grid.q());
    } catch (const MalformedInput& e) {
      throw BadParameter("window file " + params + ": " + e.what());
    }
    if (f.grid() != grid) {
      throw GridMismatch("window file " + params + " has L=" + std::to_string(f.grid().L()) +
                         " but the run uses L=" + std::to_string(grid.L()));
    }
    return f;
  }

  throw UnknownWindow("window '" + spec + "': unknown kind '" + kind +
                      "' (expected indicator, gaussian or file)");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    switch (config.command) {
      case Command::bracket: return run_bracket(config, out);
      case Command::gram_schmidt: return run_gram_schmidt(config, out);
      case Command::frame_analyze: return run_frame_analyze(config, out);
      case Command::complete: return run_complete(config, out);
      case Command::reconstruct: return run_reconstruct(config, out);
      case Command::bench: return run_bench(config, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bracket products, a-orthogonality and Weyl-Heisenberg frame analysis on a "
               "uniform grid."};
  app.require_subcommand(1);
  RunConfig config;

  const auto lattice = [&config](CLI::App* sub) {
    sub->add_option("--L", config.L, "grid density: samples per unit length")->capture_default_str();
    sub->add_option("--p", config.p, "shift a = p/L in grid steps (default L)");
    sub->add_option("--q", config.q, "inverse modulation 1/b = q/L in grid steps (default L)");
    sub->add_option("--out,--report", config.output, "output path (default stdout)");
    sub->add_flag("--strict", config.strict, "exit 1 when the verdict fails");
  };
  const std::string window_help =
      "indicator:<start>,<len> | gaussian:c=<c>,hw=<hw> | file:<path>; steps may be "
      "written L, L/k, kL";

  CLI::App* bracket_cmd = app.add_subcommand("bracket", "bracket product <f,g>_P on one period");
  lattice(bracket_cmd);
  bracket_cmd->add_option("--window,--f", config.window, window_help)->required();
  bracket_cmd->add_option("--g", config.window2, "second operand (default f)");
  bracket_cmd->add_option("--period", config.period, "a or 1/b")->capture_default_str();
  bracket_cmd->add_option("--csv", config.csv, "also write t,re,im CSV");
  bracket_cmd->callback([&config] { config.command = Command::bracket; });

  CLI::App* gs_cmd = app.add_subcommand("gram-schmidt", "orthonormalise in the bracket product");
  lattice(gs_cmd);
  gs_cmd->add_option("--in", config.input, "Signal JSON: one object, an array or {signals:[...]}");
  gs_cmd->add_option("--signal", config.signals, window_help);
  gs_cmd->add_option("--period", config.period, "a or 1/b")->capture_default_str();
  gs_cmd->add_option("--dep-tol", config.dep_tol, "absolute dependence threshold");
  gs_cmd->callback([&config] { config.command = Command::gram_schmidt; });

  CLI::App* fa_cmd = app.add_subcommand("frame-analyze", "frame report for (g, a, b) as JSON");
  lattice(fa_cmd);
  fa_cmd->add_option("--window", config.window, window_help)->required();
  fa_cmd->add_option("--tol", config.tol)->capture_default_str();
  fa_cmd->add_option("--zero-tol", config.zero_tol)->capture_default_str();
  fa_cmd->add_option("--max-iter", config.max_iter)->capture_default_str();
  fa_cmd->add_option("--margin", config.margin, "analysis domain margin in steps (default: window width)");
  fa_cmd->add_option("--seed", config.seed, "probe seed")->capture_default_str();
  fa_cmd->callback([&config] { config.command = Command::frame_analyze; });

  CLI::App* complete_cmd = app.add_subcommand("complete", "completeness at ab = 1 (p = q)");
  lattice(complete_cmd);
  complete_cmd->add_option("--window", config.window, window_help)->required();
  complete_cmd->add_option("--zero-tol", config.zero_tol)->capture_default_str();
  complete_cmd->callback([&config] { config.command = Command::complete; });

  CLI::App* rec_cmd = app.add_subcommand("reconstruct", "f = S S^{-1} f through the frame");
  lattice(rec_cmd);
  rec_cmd->add_option("--in", config.input, "Signal JSON to reconstruct")->required();
  rec_cmd->add_option("--window", config.window, window_help)->required();
  rec_cmd->add_option("--cg-tol", config.cg_tol)->capture_default_str();
  rec_cmd->add_option("--max-iter", config.max_iter)->capture_default_str();
  rec_cmd->add_option("--margin", config.margin, "analysis domain margin in steps (default: window width)");
  rec_cmd->callback([&config] { config.command = Command::reconstruct; });

  CLI::App* bench_cmd = app.add_subcommand(
      "bench",
      "naive vs compressed frame operator. CSV columns: op,L,p,q,wall_time_ns,max_rel_err "
      "(error of compressed against naive). Without --p/--q runs (p,q) = (L,L), (L,2L), "
      "(2L,3L).");
  lattice(bench_cmd);
  bench_cmd->add_option("--op", config.op, "naive, compressed or both")->capture_default_str();
  bench_cmd->add_option("--repeat", config.repeat)->capture_default_str();
  bench_cmd->add_option("--window", config.window, "default gaussian:c=1,hw=2");
  bench_cmd->add_option("--csv", config.csv, "CSV path (default stdout)");
  bench_cmd->add_option("--seed", config.seed)->capture_default_str();
  bench_cmd->callback([&config] { config.command = Command::bench; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return run(config, out, err);
}

}  // namespace bracketframe::cli
