// Copyright 2026 The qline Authors
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

// Reports rendered by the qline command-line tool: analysis (text / JSON),
// point listings, verification summaries and DOT layer diagrams.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qline/count.hpp"
#include "qline/pauli.hpp"
#include "qline/proj_line.hpp"
#include "qline/verify.hpp"

namespace qline::report {

inline constexpr const char* kSchemaVersion = "1.0";

/// Default cap on d^2 for the DOT layer diagram (d <= 60).
inline constexpr std::uint64_t kDotScanCap = 3600;

struct FactorInfo {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const FactorInfo&, const FactorInfo&) = default;
};

struct LayerRow {
  std::vector<unsigned> degree;
  unsigned delta_sum;
  Count vectors;
  Count operators;
  Count points_per_vector;
  std::optional<std::vector<unsigned>> pg_label;

  friend bool operator==(const LayerRow&, const LayerRow&) = default;
};

struct VectorResult {
  Residue b;
  Residue c;
  std::vector<unsigned> degree;
  bool admissible;
  Count points_through;
  Count perp_cardinality;
  /// Absent for the zero vector.
  std::optional<Count> u_size;
  bool u_equals_perp;
  Count commuting_operators;

  friend bool operator==(const VectorResult&, const VectorResult&) = default;
};

struct AnalysisReport {
  std::uint64_t d;
  std::vector<FactorInfo> factors;
  Count line_cardinality;
  Count group_order;
  std::vector<LayerRow> layers;
  std::optional<VectorResult> vector;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

/// Everything computed in closed form; no enumeration, so any valid d works.
AnalysisReport analyze(const Modulus& m, const std::optional<Vec2>& v = std::nullopt);

nlohmann::json to_json(const AnalysisReport& r);
/// Throws nlohmann::json::exception or std::invalid_argument on bad input.
AnalysisReport report_from_json(const nlohmann::json& j);

std::string render_text(const AnalysisReport& r);

std::string points_text(const LineCatalog& cat);
nlohmann::json points_json(const LineCatalog& cat);

std::string verify_text(const VerifyReport& r);

std::string maximal_sets_text(const Modulus& m, const std::vector<CommutingSet>& sets);

/// One node per vector ("b_c") carrying its degree and the number of points
/// through it; one edge path u*g -- (u+1)*g per point. Throws
/// BudgetExceeded when d^2 > scan_cap.
std::string layers_dot(const Modulus& m, std::uint64_t scan_cap = kDotScanCap);

/// Degree tuple "(d1,d2,...)".
std::string format_degree(const std::vector<unsigned>& deg);

}  // namespace qline::report
