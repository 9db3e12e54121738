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

#include "qline/verify.hpp"

#include <gtest/gtest.h>

#include "qline/error.hpp"
#include "qline/report.hpp"

namespace qline {
namespace {

const CheckTally& tally(const VerifyReport& r, const std::string& name) {
  for (const auto& t : r.checks) {
    if (t.name == name) return t;
  }
  throw std::out_of_range(name);
}

TEST(Verify, SmallRangePasses) {
  const VerifyReport r = verify_range(2, 30, VerifyOptions{});
  EXPECT_TRUE(r.ok()) << report::verify_text(r);
  EXPECT_EQ(r.first, 2u);
  EXPECT_EQ(r.last, 30u);
  ASSERT_EQ(r.checks.size(), verify_check_names().size());
  std::uint64_t vectors = 0;
  for (std::uint64_t d = 2; d <= 30; ++d) vectors += d * d;
  EXPECT_EQ(tally(r, "points-through").passed, vectors);
  EXPECT_EQ(tally(r, "line-cardinality").passed, 29u);
  // The zero vector has no U size.
  EXPECT_EQ(tally(r, "u-size").passed, vectors - 29);
  EXPECT_EQ(tally(r, "matrix-identities").passed, 0u);
}

TEST(Verify, MatrixChecksUpToSixteen) {
  VerifyOptions opts;
  opts.matrix = true;
  const VerifyReport r = verify_range(2, 8, opts);
  EXPECT_TRUE(r.ok()) << report::verify_text(r);
  EXPECT_EQ(tally(r, "matrix-identities").passed, 7u);
}

TEST(Verify, DeterministicAcrossThreadCounts) {
  VerifyOptions one;
  const std::string base = report::verify_text(verify_range(2, 40, one));
  for (unsigned threads : {2u, 3u, 8u}) {
    VerifyOptions many;
    many.threads = threads;
    EXPECT_EQ(report::verify_text(verify_range(2, 40, many)), base) << threads;
  }
}

TEST(Verify, MergeKeepsEarliestCounterexample) {
  VerifyReport a, b;
  a.first = a.last = 5;
  b.first = b.last = 6;
  a.checks.push_back({"x", 0, 0, ""});
  b.checks.push_back({"x", 0, 0, ""});
  a.checks[0].record(true, "");
  a.checks[0].record(false, "first");
  a.checks[0].record(false, "second");
  b.checks[0].record(false, "third");
  VerifyReport merged;
  merged.merge(a);
  merged.merge(b);
  EXPECT_EQ(merged.first, 5u);
  EXPECT_EQ(merged.last, 6u);
  EXPECT_EQ(merged.checks[0].passed, 1u);
  EXPECT_EQ(merged.checks[0].failed, 3u);
  EXPECT_EQ(merged.checks[0].first_counterexample, "first");
  EXPECT_FALSE(merged.ok());
}

TEST(Verify, RangeAndBudgetErrors) {
  EXPECT_THROW(verify_range(1, 4, VerifyOptions{}), InvalidModulus);
  EXPECT_THROW(verify_range(5, 4, VerifyOptions{}), InvalidModulus);
  EXPECT_THROW(verify_range(2, 101, VerifyOptions{}), BudgetExceeded);
  VerifyOptions tight;
  tight.scan_cap = 15;
  EXPECT_THROW(verify_range(2, 4, tight), BudgetExceeded);
}

}  // namespace
}  // namespace qline
