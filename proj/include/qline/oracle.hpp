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

// Literal shift/clock matrices on C^d, used to check the normal-form algebra
// numerically.

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>

#include "qline/pauli.hpp"

namespace qline::oracle {

using DenseComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kTolerance = 1e-10;
inline constexpr std::uint64_t kMaxMatrixDim = 64;
inline constexpr std::uint64_t kMaxSweepDim = 16;

/// exp(2 pi i k / d).
std::complex<double> root_of_unity(std::uint64_t d, std::uint64_t k);

/// X|s> = |s+1>: entry 1 at (s+1 mod d, s). Throws std::out_of_range unless
/// 2 <= d <= 64.
DenseComplexMatrix build_shift(std::uint64_t d);
/// diag(1, w, ..., w^(d-1)).
DenseComplexMatrix build_clock(std::uint64_t d);
/// w^a X^b Z^c as a dense matrix.
DenseComplexMatrix op_to_matrix(const PauliOp& g);

double frobenius_distance(const DenseComplexMatrix& x, const DenseComplexMatrix& y);

struct IdentityReport {
  std::uint64_t d = 0;
  bool passed = true;
  /// Empty when passed; otherwise the first failing identity with indices.
  std::string first_failure;
  std::uint64_t pairs_checked = 0;
  /// Ordered (b,c),(b',c') pairs whose matrices commute.
  std::uint64_t commuting_pairs = 0;
  std::uint64_t products_checked = 0;
  double max_residual = 0.0;
};

/// Sweeps every ordered pair of (b, c) vectors and `product_samples` random
/// products. Throws std::out_of_range unless 2 <= d <= 16.
IdentityReport verify_identities(std::uint64_t d,
                                 std::uint64_t product_samples = 256,
                                 std::uint64_t seed = 0x5eed);

}  // namespace qline::oracle
