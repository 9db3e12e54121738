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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qline {

/// Modulus out of range (d < 2 or d > 2^63 - 1).
class InvalidModulus : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Inverse requested for a residue sharing a factor with d.
class NonUnit : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Operands built over different moduli.
class ModulusMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operation only defined for non-zero vectors.
class ZeroVector : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Matrix whose determinant is not a unit.
class NotInvertible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An enumeration would exceed its configured cap.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::string what, std::uint64_t requested, std::uint64_t cap)
      : std::runtime_error(what + ": requires " + std::to_string(requested) +
                           " items, cap is " + std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}

  std::uint64_t requested() const { return requested_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t requested_;
  std::uint64_t cap_;
};

/// A closed-form count does not fit the 256-bit count type.
class CountOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace qline
