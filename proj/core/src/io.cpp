// SPDX-License-Identifier: Apache-2.0
#include "bracketframe/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>

#include "bracketframe/error.hpp"

namespace bracketframe {

using nlohmann::json;

namespace {

json samples_json(std::span<const Complex> samples, bool imag) {
  json out = json::array();
  for (const Complex& v : samples) out.push_back(imag ? v.imag() : v.real());
  return out;
}

json range_json(const ValueRange& r) { return json::array({r.inf, r.sup}); }

// NaN and infinities have no JSON literal; they are written as null.
json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

std::int64_t require_int(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key) || !doc.at(key).is_number_integer()) {
    throw MalformedInput(std::string("signal JSON: missing integer field \"") + key + "\"");
  }
  return doc.at(key).get<std::int64_t>();
}

std::vector<Complex> read_samples(const json& doc) {
  if (!doc.contains("re") || !doc.at("re").is_array()) {
    throw MalformedInput("signal JSON: missing array field \"re\"");
  }
  const json& re = doc.at("re");
  const json* im = nullptr;
  if (doc.contains("im")) {
    if (!doc.at("im").is_array()) throw MalformedInput("signal JSON: \"im\" must be an array");
    im = &doc.at("im");
    if (im->size() != re.size()) {
      throw MalformedInput("signal JSON: \"re\" and \"im\" differ in length");
    }
  }
  std::vector<Complex> out(re.size());
  for (std::size_t i = 0; i < re.size(); ++i) {
    if (!re[i].is_number() || (im && !(*im)[i].is_number())) {
      throw MalformedInput("signal JSON: sample " + std::to_string(i) + " is not a number");
    }
    out[i] = {re[i].get<double>(), im ? (*im)[i].get<double>() : 0.0};
  }
  return out;
}

}  // namespace

json to_json(const SampledSignal& f) {
  return {{"L", f.grid().L()},
          {"offset", f.offset()},
          {"re", samples_json(f.samples(), false)},
          {"im", samples_json(f.samples(), true)}};
}

json to_json(const PeriodicSignal& h) {
  return {{"L", h.grid().L()},
          {"offset", 0},
          {"period_steps", h.period_len()},
          {"re", samples_json(h.samples(), false)},
          {"im", samples_json(h.samples(), true)}};
}

json to_json(const CompletenessVerdict& v) {
  return {{"verdict", to_string(v.kind)},
          {"zero_fraction", v.zero_fraction},
          {"rows", v.rows},
          {"columns", v.columns},
          {"translates", v.translates},
          {"half_line", v.half_line},
          {"sup_criterion_complete", v.sup_criterion_complete},
          {"verdicts_agree", v.verdicts_agree}};
}

json to_json(const FrameReport& r) {
  const TightnessVerdict& t = r.tightness;
  json gk = json::array();
  for (const auto& [k, value] : t.gk_residuals) gk.push_back({{"k", k}, {"max_abs", value}});

  json doc = {
      {"lattice",
       {{"L", r.grid.L()},
        {"p", r.grid.p()},
        {"q", r.grid.q()},
        {"a", {{"num", r.grid.p()}, {"den", r.grid.L()}}},
        {"b", {{"num", r.grid.L()}, {"den", r.grid.q()}}},
        {"ab", {{"num", r.ab.num}, {"den", r.ab.den}}},
        {"critical", r.grid.is_critical()},
        {"density_admissible", r.density_admissible}}},
      {"domain", {{"lo", r.domain_lo}, {"hi", r.domain_hi}}},
      {"tolerances",
       {{"tol", r.options.tol},
        {"zero_tol", r.options.zero_tol},
        {"eig_tol", r.options.eig_tol},
        {"max_iter", r.options.max_iter},
        {"probe_count", r.options.probe_count},
        {"probe_seed", r.options.probe_seed}}},
      {"G0_range", range_json(t.g0_range)},
      {"bG0_range", range_json(t.g0_over_b_range)},
      {"Gk_residuals", gk},
      {"tight", t.tight},
      {"tight_bound", t.tight_bound},
      {"deviation", t.deviation},
      {"normalized_tight", t.normalized_tight},
      {"orthonormal_basis", t.orthonormal_basis},
      {"adjoint_gram_residual", t.adjoint_gram_residual},
      {"norm_defect", t.norm_defect},
      {"fixed_point_residual", t.fixed_point_residual},
      {"modulation_periodization_sup", r.modulation_periodization_sup},
      {"riesz_bounds",
       {{"A", r.riesz.A},
        {"B", r.riesz.B},
        {"synthesis_min", number_or_null(r.riesz.synthesis_min)},
        {"synthesis_max", number_or_null(r.riesz.synthesis_max)}}},
      {"spectral_bounds",
       {{"lambda_min", r.spectral.lambda_min},
        {"lambda_max", r.spectral.lambda_max},
        {"iterations_min", r.spectral.iterations_min},
        {"iterations_max", r.spectral.iterations_max},
        {"converged", r.spectral_converged}}},
      {"a_frame_bounds", range_json(r.a_frame)},
      {"window_norm", r.window_norm},
      {"wiener_amalgam_norm", r.wiener_amalgam_norm}};
  doc["completeness"] = r.completeness ? to_json(*r.completeness) : json(nullptr);
  return doc;
}

SampledSignal signal_from_json(const json& doc, std::int64_t p, std::int64_t q) {
  const std::int64_t L = require_int(doc, "L");
  const std::int64_t offset = require_int(doc, "offset");
  if (L <= 0 || p <= 0 || q <= 0) {
    throw MalformedInput("signal JSON: L, p and q must be positive");
  }
  return SampledSignal(LatticeGrid(L, p, q), offset, read_samples(doc));
}

PeriodicSignal periodic_from_json(const json& doc, std::int64_t p, std::int64_t q) {
  const std::int64_t L = require_int(doc, "L");
  const std::int64_t period = require_int(doc, "period_steps");
  if (L <= 0 || p <= 0 || q <= 0 || period <= 0) {
    throw MalformedInput("periodic JSON: L, p, q and period_steps must be positive");
  }
  std::vector<Complex> samples = read_samples(doc);
  if (static_cast<std::int64_t>(samples.size()) != period) {
    throw MalformedInput("periodic JSON: sample count differs from period_steps");
  }
  return PeriodicSignal(LatticeGrid(L, p, q), period, std::move(samples));
}

std::vector<SampledSignal> signals_from_json(const json& doc, std::int64_t p, std::int64_t q) {
  const json* list = &doc;
  if (doc.is_object() && doc.contains("signals")) list = &doc.at("signals");
  std::vector<SampledSignal> out;
  if (list->is_array()) {
    for (const json& item : *list) out.push_back(signal_from_json(item, p, q));
  } else {
    out.push_back(signal_from_json(*list, p, q));
  }
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw MalformedInput(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw MalformedInput("cannot write " + path);
  out << doc.dump(2) << '\n';
}

void write_csv(std::ostream& out, const PeriodicSignal& h) {
  const auto old_precision = out.precision(std::numeric_limits<double>::max_digits10);
  out << "t,re,im\n";
  for (std::int64_t r = 0; r < h.period_len(); ++r) {
    const Complex v = h.samples()[static_cast<std::size_t>(r)];
    out << static_cast<double>(r) * h.grid().dt() << ',' << v.real() << ',' << v.imag() << '\n';
  }
  out.precision(old_precision);
}

}  // namespace bracketframe
