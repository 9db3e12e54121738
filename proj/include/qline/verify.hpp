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

// Closed form versus enumeration sweeps over every vector of Z_d^2.

#include <cstdint>
#include <string>
#include <vector>

namespace qline {

/// Default cap on d^2 per modulus in a verification sweep.
inline constexpr std::uint64_t kVerifyScanCap = 10'000;

struct CheckTally {
  std::string name;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  /// First failure in sweep order, e.g. "d=12 v=(4,6): formula 2, enumerated 3".
  std::string first_counterexample;

  void record(bool ok, const std::string& where);
  bool ok() const { return failed == 0; }
};

struct VerifyOptions {
  bool matrix = false;
  unsigned threads = 1;
  std::uint64_t scan_cap = kVerifyScanCap;
};

struct VerifyReport {
  std::uint64_t first = 0;
  std::uint64_t last = 0;
  /// Fixed order; identical for every thread count.
  std::vector<CheckTally> checks;

  bool ok() const;
  /// Adds another report's tallies; keeps the earlier counterexample.
  void merge(const VerifyReport& other);
};

/// Names of the checks in report order.
const std::vector<std::string>& verify_check_names();

/// Runs every check for one modulus. Throws BudgetExceeded when d^2 exceeds
/// options.scan_cap.
VerifyReport verify_modulus(std::uint64_t d, const VerifyOptions& options);

/// verify_modulus for every d in [first, last], merged in increasing d.
VerifyReport verify_range(std::uint64_t first, std::uint64_t last,
                          const VerifyOptions& options);

}  // namespace qline
