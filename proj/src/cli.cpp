// Copyright 2026 The multiport Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "multiport/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "multiport/core.hpp"
#include "multiport/feasibility.hpp"
#include "multiport/fock.hpp"
#include "multiport/report.hpp"
#include "multiport/sweep.hpp"
#include "multiport/synthesis.hpp"

namespace multiport::cli {

namespace {

using report::CsvTable;
using report::Json;

const char* const kCommands[] = {"simulate", "check", "synthesize", "multiphoton", "sweep"};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  if (out.empty() || (text.size() && text.back() == ',')) {
    throw Error(ErrorKind::kInconsistentInput, "empty list item in '" + text + "'");
  }
  return out;
}

[[noreturn]] void bad_number(const std::string& s) {
  throw Error(ErrorKind::kInconsistentInput, "cannot parse number '" + s + "'");
}

// Parses s[pos..] as a plain decimal, advancing pos.
double read_decimal(const std::string& s, std::size_t& pos) {
  if (pos >= s.size()) bad_number(s);
  const char* begin = s.c_str() + pos;
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || !std::isfinite(v)) bad_number(s);
  pos += static_cast<std::size_t>(end - begin);
  return v;
}

double parse_real(const std::string& s) {
  if (s.empty()) bad_number(s);
  std::size_t pos = 0;
  double sign = 1.0;
  if (s[pos] == '+' || s[pos] == '-') sign = s[pos++] == '-' ? -1.0 : 1.0;
  double value;
  if (s.compare(pos, 2, "pi") == 0) {
    value = kPi;
    pos += 2;
  } else {
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) bad_number(s);
    value = read_decimal(s, pos);
    const bool star = pos < s.size() && s[pos] == '*';
    if (star) ++pos;
    if (s.compare(pos, 2, "pi") == 0) {
      value *= kPi;
      pos += 2;
    } else if (star) {
      bad_number(s);
    }
  }
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) bad_number(s);
    const double divisor = read_decimal(s, pos);
    if (divisor == 0.0) bad_number(s);
    value /= divisor;
  }
  if (pos != s.size()) bad_number(s);
  return sign * value;
}

double parse_plain(const std::string& s) {
  std::size_t pos = 0;
  const double v = read_decimal(s, pos);
  if (pos != s.size()) bad_number(s);
  return v;
}

Complex parse_complex(std::string s) {
  std::string t;
  for (char ch : s)
    if (ch != ' ') t += ch;
  if (t.empty()) bad_number(s);
  const bool imaginary = t.back() == 'i' || t.back() == 'j';
  if (!imaginary) return Complex(parse_plain(t), 0.0);
  t.pop_back();
  // Split at the last sign that is not an exponent sign.
  std::size_t split_at = std::string::npos;
  for (std::size_t k = t.size(); k-- > 1;) {
    if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
      split_at = k;
      break;
    }
  }
  auto imag_part = [&](const std::string& u) {
    if (u.empty() || u == "+") return 1.0;
    if (u == "-") return -1.0;
    return parse_plain(u);
  };
  if (split_at == std::string::npos) return Complex(0.0, imag_part(t));
  return Complex(parse_plain(t.substr(0, split_at)), imag_part(t.substr(split_at)));
}

// ---------------------------------------------------------------------------

struct Options {
  std::string format = "json";
  int d = 0;
  std::string phases;
  std::string phases_complex;
  int input_port = 0;
  std::string fock;
  int max_photons = 6;
  std::string target;
  std::string state;
  bool same_port = false;
  bool two_port = false;
  std::string two_modes;
  double tolerance = kDefaultTolerance;
  std::string method = "auto";
  int restarts = 64;
  std::uint64_t seed = SearchConfig{}.seed;
  int max_iterations = SearchConfig{}.max_iterations;
  int threads = 1;
  std::string kind = "simplex";
  double step = 0.02;
  int resolution = 200;
  double threshold = 1e-6;
  double gap_threshold = 1e-4;
  std::size_t max_points = 100000;

  bool d_set = false;
  bool format_set = false;
  bool restarts_set = false;
};

struct Output {
  Json doc;
  CsvTable table;
  int code = kOk;
};

std::optional<Dimension> given_dimension(const Options& o) {
  if (!o.d_set) return std::nullopt;
  return Dimension(o.d);
}

void check_dimension(const Options& o, std::size_t size, const char* what) {
  if (auto d = given_dimension(o); d && d->size() != size) {
    throw Error(ErrorKind::kDimensionMismatch, std::string(what) + " has " +
                                                   std::to_string(size) + " entries but --d is " +
                                                   std::to_string(d->value()));
  }
}

PhaseVector read_phases(const Options& o) {
  const bool radians = !o.phases.empty();
  const bool complex = !o.phases_complex.empty();
  if (radians == complex) {
    throw Error(ErrorKind::kInvalidConfig, "give exactly one of --phases or --phases-complex");
  }
  PhaseVector lambda = radians ? PhaseVector::from_radians(parse_reals(o.phases))
                               : PhaseVector::from_complex(parse_complexes(o.phases_complex));
  check_dimension(o, lambda.size(), "phase list");
  return lambda;
}

ProbabilityDistribution read_target(const Options& o) {
  if (o.target.empty()) throw Error(ErrorKind::kInvalidConfig, "--target is required");
  ProbabilityDistribution target(parse_reals(o.target));
  return target;
}

SearchConfig search_config(const Options& o) {
  SearchConfig cfg;
  cfg.restarts = o.restarts;
  cfg.seed = o.seed;
  cfg.max_iterations = o.max_iterations;
  cfg.tolerance = o.tolerance;
  cfg.not_found_threshold = std::max(cfg.not_found_threshold, o.tolerance);
  cfg.threads = o.threads;
  cfg.validate();
  return cfg;
}

std::string fmt(double v) { return report::format_double(v); }

Json concurrence_rows(const ConcurrenceMatrix& c) {
  Json rows = Json::array();
  for (std::size_t m = 0; m < c.size(); ++m) {
    Json row = Json::array();
    for (std::size_t n = 0; n < c.size(); ++n) row.push_back(c(static_cast<long>(m), static_cast<long>(n)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json labelled_probabilities(const FockVector& v) {
  Json out = Json::array();
  const auto p = v.probabilities();
  for (std::size_t i = 0; i < p.size(); ++i) out.push_back(Json::array({v.basis[i].label(), p[i]}));
  return out;
}

CsvTable check_table(const FeasibilityReport& r, const std::string& verdict) {
  CsvTable t({"item", "m", "p", "value"});
  t.add({"verdict", "", "", verdict});
  for (const auto& pm : r.polygon_margins) {
    t.add({"polygon_margin", std::to_string(pm.m), std::to_string(pm.p), fmt(pm.margin)});
  }
  for (std::size_t i = 0; i < r.exact_residuals.size(); ++i) {
    t.add({"exact_residual", "", std::to_string(i + 1), fmt(std::abs(r.exact_residuals[i]))});
  }
  for (const auto& n : r.notes) t.add({"note", "", "", n});
  return t;
}

// ---------------------------------------------------------------------------

Output cmd_simulate(const Options& o) {
  const PhaseVector lambda = read_phases(o);
  const AmplitudeVector c = output_amplitudes(lambda, o.input_port);
  const Matrix u = interferometer(lambda);

  Json input;
  input["d"] = lambda.size();
  input["phases_radians"] = lambda.radians();
  input["input_port"] = o.input_port;

  Json result;
  result["amplitudes"] = report::complex_list(c.values());
  const std::vector<double> probs = c.probabilities();
  result["probabilities"] = probs;
  result["concurrence"] = concurrence_rows(concurrence_matrix(c));

  double total = 0.0;
  for (double p : probs) total += p;
  Json residuals;
  residuals["unitarity_defect"] = u.unitarity_defect();
  residuals["norm_defect"] = std::abs(total - 1.0);

  CsvTable table({"kind", "label", "re", "im", "probability"});
  for (std::size_t m = 0; m < c.size(); ++m) {
    table.add({"mode", std::to_string(m), fmt(c[m].real()), fmt(c[m].imag()), fmt(probs[m])});
  }
  const ConcurrenceMatrix conc = concurrence_matrix(c);
  for (std::size_t m = 0; m < c.size(); ++m)
    for (std::size_t n = m + 1; n < c.size(); ++n)
      table.add({"concurrence", std::to_string(m) + "-" + std::to_string(n),
                 fmt(conc(static_cast<long>(m), static_cast<long>(n))), "", ""});

  if (!o.fock.empty()) {
    const FockState in(parse_ints(o.fock));
    input["fock"] = in.occupations();
    const FockVector v = propagate(in, transfer_matrix(lambda), {o.max_photons});
    result["fock_amplitudes"] = report::fock_json(v);
    result["fock_probabilities"] = labelled_probabilities(v);
    residuals["fock_norm_defect"] = std::abs(v.norm() - 1.0);
    const auto fp = v.probabilities();
    for (std::size_t i = 0; i < v.basis.size(); ++i) {
      table.add({"fock", v.basis[i].label(), fmt(v.amplitudes[i].real()),
                 fmt(v.amplitudes[i].imag()), fmt(fp[i])});
    }
  }
  return {report::document("simulate", input, result, residuals), std::move(table), kOk};
}

Output check_two_modes(const Options& o) {
  const auto d = given_dimension(o);
  if (!d) throw Error(ErrorKind::kInvalidConfig, "--two-modes needs --d");
  const std::vector<int> ab = parse_ints(o.two_modes);
  if (ab.size() != 2) throw Error(ErrorKind::kInconsistentInput, "--two-modes takes a,b");
  const TwoModeVerdict v = two_mode_only_verdict(*d, ab[0], ab[1]);
  Json input{{"d", d->value()}, {"a", ab[0]}, {"b", ab[1]}};
  Json result{{"verdict", to_string(v)}};
  CsvTable table({"item", "m", "p", "value"});
  table.add({"verdict", "", "", to_string(v)});
  return {report::document("check", input, result, Json::object()), std::move(table),
          v == TwoModeVerdict::kPossible ? kOk : kInfeasible};
}

Output check_two_photon(const Options& o) {
  const ProbabilityDistribution target = read_target(o);
  const bool same = o.same_port;
  const TwoPhotonReport r = same ? two_photon_same_port_conditions(target, o.tolerance)
                                 : two_photon_two_port_conditions(target, o.tolerance);
  Json input;
  input["mode"] = same ? "two-photon-same-port" : "two-photon-two-port";
  input["input_state"] = same ? "200" : "110";
  input["basis_order"] = {"200", "020", "002", "110", "101", "011"};
  input["target"] = std::vector<double>(target.values().begin(), target.values().end());
  input["tolerance"] = o.tolerance;
  Json result = report::feasibility_json(r.report);
  if (r.magnitudes) result["magnitudes"] = *r.magnitudes;
  if (r.phases) {
    result["lambda_radians"] = r.phases->radians();
    result["lambda"] = report::complex_list(r.phases->values());
  }
  Json residuals;
  residuals["relations"] = r.relation_residuals;
  if (r.round_trip_residual) residuals["round_trip"] = *r.round_trip_residual;
  CsvTable table = check_table(r.report, to_string(r.report.verdict));
  for (std::size_t i = 0; i < 3; ++i) {
    table.add({"relation_residual", std::to_string(i), "", fmt(r.relation_residuals[i])});
  }
  if (r.round_trip_residual) table.add({"round_trip_residual", "", "", fmt(*r.round_trip_residual)});
  return {report::document("check", input, result, residuals), std::move(table),
          r.report.verdict == Verdict::kInfeasible ? kInfeasible : kOk};
}

Output check_state(const Options& o) {
  const AmplitudeVector c(parse_complexes(o.state));
  check_dimension(o, c.size(), "state");
  const FeasibilityReport r = exact_feasibility(c, o.tolerance);
  const PhaseRecovery rec = phases_for_state(c, o.tolerance);
  Json input{{"d", c.size()}, {"state", report::complex_list(c.values())}, {"tolerance", o.tolerance}};
  Json result = report::feasibility_json(r);
  if (rec.phases) {
    result["lambda_radians"] = rec.phases->radians();
    result["lambda"] = report::complex_list(rec.phases->values());
  }
  Json residuals;
  residuals["max_exact_residual"] = r.max_exact_residual();
  residuals["unit_modulus_deviations"] = rec.deviations;
  return {report::document("check", input, result, residuals),
          check_table(r, to_string(r.verdict)),
          r.verdict == Verdict::kInfeasible ? kInfeasible : kOk};
}

Output check_target(const Options& o) {
  const ProbabilityDistribution target = read_target(o);
  check_dimension(o, target.size(), "target");
  FeasibilityReport r = polygon_inequalities(target);
  const FeasibilityReport conc = concurrence_inequalities(concurrence_matrix(target));
  Json input;
  input["d"] = target.size();
  input["target"] = std::vector<double>(target.values().begin(), target.values().end());
  input["tolerance"] = o.tolerance;
  Json synthesis;
  // Sufficiency is known for d <= 3, so a closed-form synthesis settles it.
  if (r.verdict == Verdict::kNecessaryPassed && target.size() <= 3) {
    const SynthesisOutcome s = target.size() == 2 ? synthesize_2port(target, o.tolerance)
                                                  : synthesize_3port(target, o.tolerance);
    r.verdict = s.ok() ? Verdict::kFeasible : Verdict::kInfeasible;
    r.notes.insert(r.notes.end(), s.notes.begin(), s.notes.end());
    synthesis = report::synthesis_json(s);
  }
  Json result = report::feasibility_json(r);
  result["concurrence_verdict"] = to_string(conc.verdict);
  if (!synthesis.is_null()) result["synthesis"] = std::move(synthesis);
  Json residuals;
  residuals["min_polygon_margin"] = r.min_polygon_margin();
  return {report::document("check", input, result, residuals), check_table(r, to_string(r.verdict)),
          r.verdict == Verdict::kInfeasible ? kInfeasible : kOk};
}

Output cmd_check(const Options& o) {
  if (o.same_port && o.two_port) {
    throw Error(ErrorKind::kInvalidConfig, "choose one two-photon input configuration");
  }
  if (!o.two_modes.empty()) return check_two_modes(o);
  if (o.same_port || o.two_port) return check_two_photon(o);
  if (!o.state.empty()) return check_state(o);
  return check_target(o);
}

Output cmd_synthesize(const Options& o) {
  const ProbabilityDistribution target = read_target(o);
  check_dimension(o, target.size(), "target");
  const SearchConfig cfg = search_config(o);
  SynthesisOutcome s;
  if (o.method == "auto") {
    s = synthesize(target, cfg);
  } else if (o.method == "closed-form") {
    if (target.size() == 2) {
      s = synthesize_2port(target, cfg.tolerance);
    } else if (target.size() == 3) {
      s = synthesize_3port(target, cfg.tolerance);
    } else {
      throw Error(ErrorKind::kInvalidConfig, "closed-form synthesis needs d = 2 or 3");
    }
  } else {
    s = synthesize_search(target, cfg);
  }
  Json input;
  input["d"] = target.size();
  input["target"] = std::vector<double>(target.values().begin(), target.values().end());
  input["method"] = o.method;
  input["tolerance"] = cfg.tolerance;
  if (s.provenance || o.method == "search") {
    input["search"] = {{"restarts", cfg.restarts},
                       {"seed", cfg.seed},
                       {"max_iterations", cfg.max_iterations}};
  }
  Json residuals;
  if (s.result) residuals["magnitude_residual"] = s.result->residual;

  CsvTable table({"k", "lambda_radians", "lambda_re", "lambda_im", "achieved_probability",
                  "target_probability", "status", "method", "residual"});
  if (s.result) {
    const auto rad = s.result->lambda.radians();
    const auto ach = s.result->achieved.probabilities();
    for (std::size_t k = 0; k < target.size(); ++k) {
      table.add({std::to_string(k), fmt(rad[k]), fmt(s.result->lambda[k].real()),
                 fmt(s.result->lambda[k].imag()), fmt(ach[k]), fmt(target[k]), to_string(s.status),
                 to_string(s.result->method), fmt(s.result->residual)});
    }
  } else {
    for (std::size_t k = 0; k < target.size(); ++k) {
      table.add({std::to_string(k), "", "", "", "", fmt(target[k]), to_string(s.status), "", ""});
    }
  }
  const int code = s.status == SynthesisStatus::kSuccess      ? kOk
                   : s.status == SynthesisStatus::kInfeasible ? kInfeasible
                                                              : kNotFound;
  return {report::document("synthesize", input, report::synthesis_json(s), residuals),
          std::move(table), code};
}

Output cmd_multiphoton(const Options& o) {
  const PhaseVector lambda = read_phases(o);
  if (o.fock.empty()) throw Error(ErrorKind::kInvalidConfig, "--fock is required");
  const FockState in(parse_ints(o.fock));
  const FockVector v = propagate(in, transfer_matrix(lambda), {o.max_photons});
  Json input;
  input["d"] = lambda.size();
  input["phases_radians"] = lambda.radians();
  input["fock"] = in.occupations();
  input["max_photons"] = o.max_photons;
  Json result;
  result["basis_size"] = v.basis.size();
  result["amplitudes"] = report::fock_json(v);
  result["probabilities"] = labelled_probabilities(v);
  if (lambda.size() == 3 && in.total() == 2) {
    const auto pres = presentation_amplitudes(v);
    Json probs = Json::array();
    for (const auto& a : pres) probs.push_back(std::norm(a));
    result["presentation"] = {{"order", {"200", "020", "002", "110", "101", "011"}},
                              {"probabilities", std::move(probs)}};
  }
  Json residuals{{"norm_defect", std::abs(v.norm() - 1.0)}};
  CsvTable table({"label", "re", "im", "probability"});
  const auto p = v.probabilities();
  for (std::size_t i = 0; i < v.basis.size(); ++i) {
    table.add({v.basis[i].label(), fmt(v.amplitudes[i].real()), fmt(v.amplitudes[i].imag()),
               fmt(p[i])});
  }
  return {report::document("multiphoton", input, result, residuals), std::move(table), kOk};
}

Output cmd_sweep(const Options& o) {
  Json input;
  input["kind"] = o.kind;
  Json result;
  Json rows = Json::array();
  if (o.kind == "simplex") {
    if (o.d_set && o.d != 3) throw Error(ErrorKind::kInvalidConfig, "simplex sweep is d = 3 only");
    const SearchConfig cfg = search_config(o);
    input.update({{"d", 3}, {"step", o.step}, {"restarts", cfg.restarts}, {"seed", cfg.seed}});
    const auto out = simplex_sweep(o.step, cfg, o.max_points);
    CsvTable table({"p", "closed_form", "search", "closed_form_residual", "search_residual", "agree"});
    std::size_t disagreements = 0;
    for (const auto& r : out) {
      if (!r.agree) ++disagreements;
      table.add({report::join(r.target), to_string(r.closed_form), to_string(r.search),
                 fmt(r.closed_form_residual), fmt(r.search_residual), r.agree ? "1" : "0"});
      rows.push_back({{"p", r.target},
                      {"closed_form", to_string(r.closed_form)},
                      {"search", to_string(r.search)},
                      {"closed_form_residual", r.closed_form_residual},
                      {"search_residual", r.search_residual},
                      {"agree", r.agree}});
    }
    result = {{"points", out.size()}, {"disagreements", disagreements}, {"rows", std::move(rows)}};
    return {report::document("sweep", input, result, Json::object()), std::move(table), kOk};
  }
  if (o.kind == "phase-grid") {
    const int d = o.d_set ? o.d : 3;
    input.update({{"d", d}, {"resolution", o.resolution}, {"threshold", o.threshold}});
    std::vector<PhaseGridRow> grid;
    const PhaseGridSummary s = phase_grid_sweep(d, o.resolution, o.threshold, o.max_points, &grid);
    CsvTable table({"theta", "magnitudes", "two_nonzero"});
    for (const auto& r : grid) {
      table.add({report::join(r.theta), report::join(r.magnitudes), r.two_nonzero ? "1" : "0"});
      if (r.two_nonzero) rows.push_back({{"theta", r.theta}, {"magnitudes", r.magnitudes}});
    }
    result = {{"points", s.points}, {"two_nonzero", s.two_nonzero}, {"flagged_rows", std::move(rows)}};
    return {report::document("sweep", input, result, Json::object()), std::move(table), kOk};
  }
  if (o.kind == "sufficiency") {
    const int d = o.d_set ? o.d : 4;
    Options tuned = o;
    if (!o.restarts_set) tuned.restarts = 256;
    const SearchConfig cfg = search_config(tuned);
    input.update({{"d", d},
                  {"step", o.step},
                  {"restarts", cfg.restarts},
                  {"seed", cfg.seed},
                  {"gap_threshold", o.gap_threshold}});
    const auto out = sufficiency_sweep(d, o.step, cfg, o.gap_threshold, o.max_points);
    CsvTable table({"p", "polygon", "min_margin", "status", "best_residual", "seed",
                    "restarts_run", "best_restart", "gap"});
    std::size_t passed = 0, gaps = 0;
    for (const auto& r : out) {
      const bool searched = r.polygon != Verdict::kInfeasible;
      if (searched) ++passed;
      if (r.gap) ++gaps;
      table.add({report::join(r.target), to_string(r.polygon), fmt(r.min_margin),
                 searched ? to_string(r.status) : "", searched ? fmt(r.best_residual) : "",
                 searched ? std::to_string(r.seed) : "",
                 searched ? std::to_string(r.restarts_run) : "",
                 searched ? std::to_string(r.best_restart) : "", r.gap ? "1" : "0"});
      if (r.gap) {
        rows.push_back({{"p", r.target},
                        {"min_margin", r.min_margin},
                        {"best_residual", r.best_residual},
                        {"seed", r.seed},
                        {"restarts_run", r.restarts_run},
                        {"best_restart", r.best_restart}});
      }
    }
    result = {{"points", out.size()},
              {"polygon_passed", passed},
              {"gaps", gaps},
              {"gap_rows", std::move(rows)},
              {"note", "gap rows are numerical evidence, not a proof of infeasibility"}};
    return {report::document("sweep", input, result, Json::object()), std::move(table), kOk};
  }
  throw Error(ErrorKind::kInvalidConfig, "unknown sweep kind '" + o.kind + "'");
}

// ---------------------------------------------------------------------------

std::string config_value(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer() || v.is_number_unsigned()) return v.dump();
  if (v.is_number_float()) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
    return buf;
  }
  if (v.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + config_value(v[i]);
    return out;
  }
  throw Error(ErrorKind::kInvalidConfig, "unsupported config value " + v.dump());
}

bool is_command(const std::string& s) {
  for (const char* c : kCommands)
    if (s == c) return true;
  return false;
}

// Splices a JSON run spec into the argument list. Explicit arguments come
// last so they override the file.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::vector<std::string> rest;
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw Error(ErrorKind::kInvalidConfig, "--config needs a path");
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (!path) return args;

  std::ifstream in(*path);
  if (!in) throw Error(ErrorKind::kInvalidConfig, "cannot read config file " + *path);
  Json spec;
  try {
    spec = Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::kInvalidConfig, std::string("config is not valid JSON: ") + e.what());
  }
  if (!spec.is_object()) throw Error(ErrorKind::kInvalidConfig, "config must be a JSON object");

  std::optional<std::string> command;
  std::vector<std::string> from_file;
  for (const auto& [key, value] : spec.items()) {
    if (key == "command") {
      command = value.get<std::string>();
      continue;
    }
    std::string flag = "--" + key;
    std::replace(flag.begin(), flag.end(), '_', '-');
    if (value.is_boolean()) {
      if (value.get<bool>()) from_file.push_back(flag);
      continue;
    }
    from_file.push_back(flag);
    from_file.push_back(config_value(value));
  }

  auto pos = std::find_if(rest.begin(), rest.end(), is_command);
  if (pos != rest.end()) {
    if (command && *command != *pos) {
      throw Error(ErrorKind::kInvalidConfig, "config command '" + *command +
                                                 "' conflicts with '" + *pos + "'");
    }
    command = *pos;
    rest.erase(pos);
  }
  if (!command) throw Error(ErrorKind::kInvalidConfig, "no command given");
  std::vector<std::string> out{*command};
  out.insert(out.end(), from_file.begin(), from_file.end());
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

void emit(const Output& o, const Options& opts, const std::string& command, std::ostream& out) {
  std::string format = opts.format;
  // Sweeps are tabular; they default to CSV.
  if (command == "sweep" && !opts.format_set) format = "csv";
  if (format == "csv") {
    o.table.write(out);
  } else if (format == "pretty") {
    out << report::dump_pretty(o.doc);
  } else {
    out << report::dump_json(o.doc);
  }
}

}  // namespace

std::vector<double> parse_reals(const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split(text)) out.push_back(parse_real(item));
  return out;
}

std::vector<Complex> parse_complexes(const std::string& text) {
  std::vector<Complex> out;
  for (const auto& item : split(text)) out.push_back(parse_complex(item));
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  for (const auto& item : split(text)) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw Error(ErrorKind::kInconsistentInput, "cannot parse integer '" + item + "'");
    }
    out.push_back(v);
  }
  return out;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  Options o;
  if (const char* env = std::getenv(kToleranceEnv); env && *env) {
    try {
      o.tolerance = parse_plain(trim(env));
    } catch (const Error&) {
      err << "error: " << kToleranceEnv << " is not a number: '" << env << "'\n";
      return kInvalidInput;
    }
  }

  CLI::App app{"Simulate and design phase settings for symmetric-multiport interferometers",
               "multiport"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.set_version_flag("--version", report::version());
  auto* format = app.add_option("--format", o.format, "Output format")
                     ->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("--config", "JSON run spec; explicit flags override it");

  auto add_d = [&](CLI::App* sub) { return sub->add_option("--d", o.d, "Number of ports"); };
  auto add_phases = [&](CLI::App* sub) {
    sub->add_option("--phases", o.phases, "Phases in radians (pi/6, 1/3, ... allowed)");
    sub->add_option("--phases-complex", o.phases_complex, "Unit-modulus phases as a+bi literals");
  };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--restarts", o.restarts, "Search restarts");
    sub->add_option("--seed", o.seed, "Search seed");
    sub->add_option("--max-iterations", o.max_iterations, "Iterations per restart");
    sub->add_option("--threads", o.threads, "Worker threads (results do not depend on it)");
  };
  auto add_tolerance = [&](CLI::App* sub) {
    sub->add_option("--tolerance", o.tolerance, "Feasibility tolerance");
  };

  std::vector<CLI::Option*> d_opts, restart_opts;

  auto* simulate = app.add_subcommand("simulate", "Propagate one photon (or a Fock state)");
  d_opts.push_back(add_d(simulate));
  add_phases(simulate);
  simulate->add_option("--input-port", o.input_port, "Single-photon input port");
  simulate->add_option("--fock", o.fock, "Input occupations, e.g. 2,0,0");
  simulate->add_option("--max-photons", o.max_photons, "Photon-number guard");

  auto* check = app.add_subcommand("check", "Feasibility of a target");
  d_opts.push_back(add_d(check));
  check->add_option("--target", o.target, "Target probabilities");
  check->add_option("--state", o.state, "Target amplitudes as a+bi literals");
  check->add_flag("--two-photon-same-port", o.same_port, "Target is for input |200>");
  check->add_flag("--two-photon-two-port", o.two_port, "Target is for input |110>");
  check->add_option("--two-modes", o.two_modes, "Modes a,b for a two-mode-only state");
  add_tolerance(check);

  auto* synth = app.add_subcommand("synthesize", "Find phases for a target distribution");
  d_opts.push_back(add_d(synth));
  synth->add_option("--target", o.target, "Target probabilities")->required();
  synth->add_option("--method", o.method, "auto, closed-form or search")
      ->check(CLI::IsMember({"auto", "closed-form", "search"}));
  add_search(synth);
  restart_opts.push_back(synth->get_option("--restarts"));
  add_tolerance(synth);

  auto* multi = app.add_subcommand("multiphoton", "Propagate a Fock state");
  d_opts.push_back(add_d(multi));
  add_phases(multi);
  multi->add_option("--fock", o.fock, "Input occupations")->required();
  multi->add_option("--max-photons", o.max_photons, "Photon-number guard");

  auto* sweep = app.add_subcommand("sweep", "Grid experiments");
  d_opts.push_back(add_d(sweep));
  sweep->add_option("--kind", o.kind, "simplex, phase-grid or sufficiency")
      ->check(CLI::IsMember({"simplex", "phase-grid", "sufficiency"}));
  sweep->add_option("--step", o.step, "Simplex grid step");
  sweep->add_option("--resolution", o.resolution, "Phase grid steps per 2 pi");
  sweep->add_option("--threshold", o.threshold, "Zero threshold on magnitudes (phase grid)");
  sweep->add_option("--gap-threshold", o.gap_threshold, "Residual marking a sufficiency gap");
  sweep->add_option("--max-points", o.max_points, "Grid size cap");
  add_search(sweep);
  restart_opts.push_back(sweep->get_option("--restarts"));
  add_tolerance(sweep);

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> args;
  try {
    args = expand_config(raw_args);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  o.format_set = format->count() > 0;
  for (auto* opt : d_opts) o.d_set = o.d_set || opt->count() > 0;
  for (auto* opt : restart_opts) o.restarts_set = o.restarts_set || opt->count() > 0;

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (o.d_set) Dimension{o.d};
    const Output result = command == "simulate"      ? cmd_simulate(o)
                          : command == "check"       ? cmd_check(o)
                          : command == "synthesize"  ? cmd_synthesize(o)
                          : command == "multiphoton" ? cmd_multiphoton(o)
                                                     : cmd_sweep(o);
    emit(result, o, command, out);
    return result.code;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return kInvalidInput;
  }
}

}  // namespace multiport::cli
