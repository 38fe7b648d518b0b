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

#include "multiport/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#ifndef MULTIPORT_VERSION
#define MULTIPORT_VERSION "unknown"
#endif

namespace multiport::report {

namespace {

void write_string(std::string& out, const std::string& s) {
  // Reuse the library's escaping for strings.
  out += Json(s).dump();
}

void write_json(std::string& out, const Json& j, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(2 * depth), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) { out += "{}"; return; }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        write_string(out, key);
        out += ": ";
        write_json(out, value, depth + 1);
      }
      out += "\n" + close + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) { out += "[]"; return; }
      // Arrays of scalars stay on one line.
      const bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
      if (flat) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out += ", ";
          write_json(out, j[i], depth + 1);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        write_json(out, j[i], depth + 1);
      }
      out += "\n" + close + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      out += std::isfinite(v) ? format_double(v) : "null";
      return;
    }
    case Json::value_t::string:
      write_string(out, j.get<std::string>());
      return;
    default:
      out += j.dump();
      return;
  }
}

void write_pretty(std::string& out, const Json& j, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * depth), ' ');
  auto scalar = [](const Json& v) -> std::string {
    if (v.is_number_float()) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.9g", v.get<double>());
      return buf;
    }
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  };
  for (const auto& [key, value] : j.items()) {
    const bool flat_array = value.is_array() && std::all_of(value.begin(), value.end(),
                                                            [](const Json& e) { return e.is_primitive(); });
    if (value.is_primitive()) {
      out += pad + key + ": " + scalar(value) + "\n";
    } else if (flat_array) {
      out += pad + key + ": [";
      for (std::size_t i = 0; i < value.size(); ++i) out += (i ? ", " : "") + scalar(value[i]);
      out += "]\n";
    } else {
      out += pad + key + ":\n";
      write_pretty(out, value, depth + 1);
    }
  }
}

}  // namespace

const char* version() { return MULTIPORT_VERSION; }

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

Json document(const std::string& command, Json input, Json result, Json residuals) {
  Json doc;
  doc["command"] = command;
  doc["input"] = std::move(input);
  doc["result"] = std::move(result);
  doc["residuals"] = std::move(residuals);
  doc["version"] = version();
  return doc;
}

std::string dump_json(const Json& doc) {
  std::string out;
  write_json(out, doc, 0);
  out += "\n";
  return out;
}

std::string dump_pretty(const Json& doc) {
  std::string out;
  write_pretty(out, doc, 0);
  return out;
}

Json complex_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Json complex_list(std::span<const Complex> values) {
  Json out = Json::array();
  for (const auto& z : values) out.push_back(complex_json(z));
  return out;
}

Json feasibility_json(const FeasibilityReport& r) {
  Json out;
  out["verdict"] = to_string(r.verdict);
  out["exact_residuals"] = complex_list(r.exact_residuals);
  Json margins = Json::array();
  for (const auto& m : r.polygon_margins) margins.push_back(Json::array({m.m, m.p, m.margin}));
  out["polygon_margins"] = std::move(margins);
  out["notes"] = r.notes;
  return out;
}

Json synthesis_json(const SynthesisOutcome& s) {
  Json out;
  out["status"] = to_string(s.status);
  if (s.result) {
    out["method"] = to_string(s.result->method);
    out["lambda_radians"] = s.result->lambda.radians();
    out["lambda"] = complex_list(s.result->lambda.values());
    out["achieved"] = complex_list(s.result->achieved.values());
    out["achieved_probabilities"] = s.result->achieved.probabilities();
    out["residual"] = s.result->residual;
  }
  if (s.provenance) {
    out["provenance"] = {{"seed", s.provenance->seed},
                         {"restarts_requested", s.provenance->restarts_requested},
                         {"restarts_run", s.provenance->restarts_run},
                         {"best_restart", s.provenance->best_restart},
                         {"iterations", s.provenance->iterations}};
  }
  out["notes"] = s.notes;
  return out;
}

Json fock_json(const FockVector& v) {
  Json out = Json::array();
  for (std::size_t i = 0; i < v.basis.size(); ++i) {
    out.push_back(Json::array({v.basis[i].label(), v.amplitudes[i].real(), v.amplitudes[i].imag()}));
  }
  return out;
}

void CsvTable::add(std::vector<std::string> row) {
  if (row.size() != header_.size()) {
    throw Error(ErrorKind::kInternal, "CSV row width differs from header");
  }
  rows_.push_back(std::move(row));
}

void CsvTable::write(std::ostream& os) const {
  auto emit = [&os](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os << ',';
      const std::string& c = cells[i];
      if (c.find_first_of(",\"\n") != std::string::npos) {
        os << '"';
        for (char ch : c) os << (ch == '"' ? "\"\"" : std::string(1, ch));
        os << '"';
      } else {
        os << c;
      }
    }
    os << '\n';
  };
  emit(header_);
  for (const auto& r : rows_) emit(r);
}

std::string CsvTable::str() const {
  std::ostringstream os;
  write(os);
  return os.str();
}

std::string join(const std::vector<double>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += format_double(values[i]);
  }
  return out;
}

}  // namespace multiport::report
