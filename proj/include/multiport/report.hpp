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

#pragma once

// Deterministic report serialization. Floats are always written with
// %.12e so output is byte-stable for fixed inputs.

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "multiport/feasibility.hpp"
#include "multiport/fock.hpp"
#include "multiport/synthesis.hpp"
#include "multiport/types.hpp"

namespace multiport::report {

using Json = nlohmann::ordered_json;

/// Library version, written into every document.
const char* version();

/// "%.12e"; non-finite values become "nan", "inf" or "-inf".
std::string format_double(double v);

/// Top-level {command, input, result, residuals, version}.
Json document(const std::string& command, Json input, Json result, Json residuals);

/// Two-space indented JSON with %.12e floats; non-finite floats are null.
std::string dump_json(const Json& doc);

/// Indented "key: value" rendering for terminals.
std::string dump_pretty(const Json& doc);

Json complex_json(const Complex& z);
Json complex_list(std::span<const Complex> values);
Json feasibility_json(const FeasibilityReport& r);
Json synthesis_json(const SynthesisOutcome& s);
/// [[label, re, im], ...] in basis order.
Json fock_json(const FockVector& v);

/// RFC 4180 style table with a fixed header.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

  void add(std::vector<std::string> row);
  const std::vector<std::string>& header() const noexcept { return header_; }
  std::size_t rows() const noexcept { return rows_.size(); }
  void write(std::ostream& os) const;
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// Values in %.12e joined by `sep`.
std::string join(const std::vector<double>& values, char sep = ';');

}  // namespace multiport::report
