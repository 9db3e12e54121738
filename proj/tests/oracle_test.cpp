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

#include "qline/oracle.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

namespace qline::oracle {
namespace {

using Matrix = DenseComplexMatrix;

TEST(Matrices, ShiftAndClockForQubit) {
  Matrix sx(2, 2), sz(2, 2);
  sx << 0, 1, 1, 0;
  sz << 1, 0, 0, -1;
  EXPECT_LT(frobenius_distance(build_shift(2), sx), kTolerance);
  EXPECT_LT(frobenius_distance(build_clock(2), sz), kTolerance);
  const Matrix g = op_to_matrix(PauliOp(Modulus(2), 1, 1, 1));
  EXPECT_LT(frobenius_distance(g, -sx * sz), kTolerance);
}

TEST(Matrices, ShiftMovesBasisVectors) {
  const Matrix x = build_shift(5);
  for (Eigen::Index s = 0; s < 5; ++s) {
    EXPECT_EQ(x((s + 1) % 5, s), std::complex<double>(1.0, 0.0));
  }
  EXPECT_NEAR(std::abs(x.sum()), 5.0, kTolerance);
}

TEST(Matrices, UnitaryOfOrderDWithTracelessClock) {
  for (std::uint64_t d = 2; d <= 16; ++d) {
    const Matrix x = build_shift(d), z = build_clock(d);
    const Matrix id = Matrix::Identity(d, d);
    EXPECT_LT(frobenius_distance(x * x.adjoint(), id), kTolerance);
    EXPECT_LT(frobenius_distance(z * z.adjoint(), id), kTolerance);
    Matrix xd = id, zd = id;
    for (std::uint64_t i = 0; i < d; ++i) {
      xd = xd * x;
      zd = zd * z;
    }
    EXPECT_LT(frobenius_distance(xd, id), kTolerance) << d;
    EXPECT_LT(frobenius_distance(zd, id), kTolerance) << d;
    EXPECT_LT(std::abs(z.trace()), kTolerance) << d;
    EXPECT_LT(frobenius_distance(root_of_unity(d, 1) * x * z, z * x), kTolerance) << d;
  }
}

TEST(Matrices, ProductRuleComposition) {
  const Modulus m4(4);
  const Matrix lhs = op_to_matrix(PauliOp(m4, 1, 2, 3)) * op_to_matrix(PauliOp(m4, 2, 1, 1));
  EXPECT_LT(frobenius_distance(lhs, op_to_matrix(PauliOp(m4, 2, 3, 0))), kTolerance);
  for (std::uint64_t d = 2; d <= 6; ++d) {
    const Modulus m(d);
    for (std::uint64_t i = 0; i < d * d * d; ++i) {
      const PauliOp g(m, i / (d * d), i / d % d, i % d);
      const Matrix mg = op_to_matrix(g);
      for (std::uint64_t j = 0; j < d * d * d; ++j) {
        const PauliOp h(m, j / (d * d), j / d % d, j % d);
        ASSERT_LT(frobenius_distance(mg * op_to_matrix(h), op_to_matrix(multiply(g, h))),
                  kTolerance);
      }
    }
  }
}

TEST(Identities, SmallModuliPass) {
  for (std::uint64_t d : {2, 4, 12}) {
    const IdentityReport r = verify_identities(d);
    EXPECT_TRUE(r.passed) << r.first_failure;
    EXPECT_EQ(r.pairs_checked, d * d * d * d);
    EXPECT_EQ(r.products_checked, 256u);
    EXPECT_LT(r.max_residual, kTolerance);
  }
  // Sum of perp-set sizes over Z_4^2.
  EXPECT_EQ(verify_identities(4).commuting_pairs, 88u);
}

TEST(Identities, DimensionOutOfRange) {
  EXPECT_THROW(verify_identities(1), std::out_of_range);
  EXPECT_THROW(verify_identities(kMaxSweepDim + 1), std::out_of_range);
  EXPECT_THROW(build_shift(kMaxMatrixDim + 1), std::out_of_range);
  EXPECT_THROW(op_to_matrix(PauliOp::identity(Modulus(65))), std::out_of_range);
}

}  // namespace
}  // namespace qline::oracle
