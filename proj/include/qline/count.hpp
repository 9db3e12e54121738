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

// Exact cardinalities. Counts reach d^3 (group order), which for d < 2^63 needs
// up to 189 bits, so a fixed 256-bit integer holds every count the library
// produces. Overflow still surfaces as CountOverflow, never as wraparound.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qline/error.hpp"

namespace qline {

using Count = boost::multiprecision::number<
    boost::multiprecision::cpp_int_backend<256, 256, boost::multiprecision::unsigned_magnitude,
                                           boost::multiprecision::checked, void>,
    boost::multiprecision::et_off>;

inline Count checked_mul(const Count& a, const Count& b) {
  try {
    return a * b;
  } catch (const std::overflow_error&) {
    throw CountOverflow("count exceeds 256 bits");
  }
}

inline Count checked_add(const Count& a, const Count& b) {
  try {
    return a + b;
  } catch (const std::overflow_error&) {
    throw CountOverflow("count exceeds 256 bits");
  }
}

inline Count checked_pow(const Count& base, unsigned exp) {
  Count out = 1;
  for (unsigned i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

inline std::string to_string(const Count& value) { return value.str(); }

/// Parses a decimal count; nullopt on malformed input or overflow.
inline std::optional<Count> parse_count(std::string_view text) {
  if (text.empty()) return std::nullopt;
  Count value = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') return std::nullopt;
    try {
      value = value * 10 + (ch - '0');
    } catch (const std::overflow_error&) {
      return std::nullopt;
    }
  }
  return value;
}

inline bool fits_u64(const Count& value) {
  return value <= std::numeric_limits<std::uint64_t>::max();
}

}  // namespace qline
