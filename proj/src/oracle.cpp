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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace qline::oracle {

namespace {

void require_dim(std::uint64_t d, std::uint64_t cap) {
  if (d < 2 || d > cap) {
    throw std::out_of_range("matrix dimension " + std::to_string(d) +
                            " outside [2, " + std::to_string(cap) + "]");
  }
}

DenseComplexMatrix power(const DenseComplexMatrix& base, std::uint64_t k) {
  DenseComplexMatrix out = DenseComplexMatrix::Identity(base.rows(), base.cols());
  for (std::uint64_t i = 0; i < k; ++i) out = out * base;
  return out;
}

std::string vec_label(std::uint64_t b, std::uint64_t c) {
  return "(" + std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace

std::complex<double> root_of_unity(std::uint64_t d, std::uint64_t k) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k % d) /
                             static_cast<double>(d));
}

DenseComplexMatrix build_shift(std::uint64_t d) {
  require_dim(d, kMaxMatrixDim);
  const auto n = static_cast<Eigen::Index>(d);
  DenseComplexMatrix x = DenseComplexMatrix::Zero(n, n);
  for (Eigen::Index s = 0; s < n; ++s) x((s + 1) % n, s) = 1.0;
  return x;
}

DenseComplexMatrix build_clock(std::uint64_t d) {
  require_dim(d, kMaxMatrixDim);
  const auto n = static_cast<Eigen::Index>(d);
  DenseComplexMatrix z = DenseComplexMatrix::Zero(n, n);
  for (Eigen::Index s = 0; s < n; ++s) z(s, s) = root_of_unity(d, s);
  return z;
}

DenseComplexMatrix op_to_matrix(const PauliOp& g) {
  const std::uint64_t d = g.modulus().value();
  require_dim(d, kMaxMatrixDim);
  return root_of_unity(d, g.a()) * power(build_shift(d), g.b()) *
         power(build_clock(d), g.c());
}

double frobenius_distance(const DenseComplexMatrix& x,
                          const DenseComplexMatrix& y) {
  return (x - y).norm();
}

IdentityReport verify_identities(std::uint64_t d, std::uint64_t product_samples,
                                 std::uint64_t seed) {
  require_dim(d, kMaxSweepDim);
  const Modulus m(d);
  const auto n = static_cast<Eigen::Index>(d);
  const DenseComplexMatrix identity = DenseComplexMatrix::Identity(n, n);
  const DenseComplexMatrix x = build_shift(d);
  const DenseComplexMatrix z = build_clock(d);
  const std::complex<double> omega = root_of_unity(d, 1);

  IdentityReport report;
  report.d = d;
  // `what` is only evaluated on failure.
  auto check = [&](double residual, auto&& what) {
    report.max_residual = std::max(report.max_residual, residual);
    if (residual >= kTolerance && report.passed) {
      report.passed = false;
      report.first_failure =
          std::string(what()) + " (residual " + std::to_string(residual) + ")";
    }
  };
  auto text = [](const char* s) { return [s] { return s; }; };

  check(frobenius_distance(omega * x * z, z * x), text("w X Z = Z X"));
  check(frobenius_distance(power(x, d), identity), text("X^d = I"));
  check(frobenius_distance(power(z, d), identity), text("Z^d = I"));
  check(frobenius_distance(x * x.adjoint(), identity), text("X unitary"));
  check(frobenius_distance(z * z.adjoint(), identity), text("Z unitary"));

  // W(b,c) = X^b Z^c; unitarity gives W^-1 = W^dagger independently of the
  // normal-form inverse.
  std::vector<DenseComplexMatrix> w(d * d), w_inv(d * d);
  for (std::uint64_t b = 0; b < d; ++b) {
    for (std::uint64_t c = 0; c < d; ++c) {
      w[b * d + c] = op_to_matrix(PauliOp(m, 0, b, c));
      w_inv[b * d + c] = w[b * d + c].adjoint();
    }
  }

  for (std::uint64_t i = 0; i < d * d; ++i) {
    const Vec2 v(m, i / d, i % d);
    for (std::uint64_t j = 0; j < d * d; ++j) {
      const Vec2 u(m, j / d, j % d);
      const Residue f = form(v, u);
      const DenseComplexMatrix comm = w[i] * w[j] * w_inv[i] * w_inv[j];
      auto where = [&] {
        return vec_label(v.b(), v.c()) + " x " + vec_label(u.b(), u.c());
      };
      check(frobenius_distance(comm, root_of_unity(d, f) * identity),
            [&] { return "commutator phase at " + where(); });
      const bool commute =
          frobenius_distance(w[i] * w[j], w[j] * w[i]) < kTolerance;
      if (commute) ++report.commuting_pairs;
      if (commute != (f == 0) && report.passed) {
        report.passed = false;
        report.first_failure = "matrix commutation disagrees with form at " + where();
      }
      ++report.pairs_checked;
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, d - 1);
  for (std::uint64_t s = 0; s < product_samples; ++s) {
    const PauliOp g(m, pick(rng), pick(rng), pick(rng));
    const PauliOp h(m, pick(rng), pick(rng), pick(rng));
    check(frobenius_distance(op_to_matrix(multiply(g, h)),
                             op_to_matrix(g) * op_to_matrix(h)),
          [s] { return "product rule at sample " + std::to_string(s); });
    ++report.products_checked;
  }
  return report;
}

}  // namespace qline::oracle
