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

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <thread>

#include "qline/error.hpp"
#include "qline/oracle.hpp"
#include "qline/pauli.hpp"
#include "qline/proj_line.hpp"
#include "qline/symplectic.hpp"

namespace qline {

namespace {

enum Check : std::size_t {
  kLineCardinality,
  kPointsThrough,
  kPerpCardinality,
  kUSize,
  kUEqualsPerp,
  kUGeneratesPerp,
  kAdmissibility,
  kCanonicalForm,
  kLayerTable,
  kCommutingCount,
  kMatrixIdentities,
  kCheckCount,
};

std::string label(const Vec2& v) {
  return "d=" + std::to_string(v.modulus().value()) + " v=(" +
         std::to_string(v.b()) + "," + std::to_string(v.c()) + ")";
}

std::string mismatch(const Vec2& v, Count formula, Count enumerated) {
  return label(v) + ": formula " + to_string(formula) + ", enumerated " +
         to_string(enumerated);
}

// Points of P1(Z_d) counted by marking orbits of admissible vectors, where
// admissibility is decided by injectivity of u -> (ub, uc).
std::uint64_t count_points_by_orbits(const Modulus& m) {
  const std::uint64_t d = m.value();
  std::vector<char> seen(d * d, 0);
  std::uint64_t points = 0;
  for (std::uint64_t b = 0; b < d; ++b) {
    for (std::uint64_t c = 0; c < d; ++c) {
      if (seen[b * d + c]) continue;
      const Vec2 v(m, b, c);
      if (!is_admissible_by_injectivity(v)) continue;
      ++points;
      for (std::uint64_t u = 0; u < d; ++u) {
        const Vec2 w = v.scaled(u);
        // Unit multiples generate the same point; others are not admissible.
        if (is_unit(u, m)) seen[w.b() * d + w.c()] = 1;
      }
    }
  }
  return points;
}

// Submodule generated by the given vectors, as a d*d membership mask.
std::vector<char> span_mask(const Modulus& m, const std::vector<Vec2>& gens) {
  const std::uint64_t d = m.value();
  std::vector<char> mask(d * d, 0);
  std::vector<Vec2> members{Vec2(m, 0, 0)};
  mask[0] = 1;
  for (const auto& g : gens) {
    if (mask[g.b() * d + g.c()]) continue;
    const std::size_t before = members.size();
    for (std::uint64_t u = 1; u < d; ++u) {
      const Vec2 step = g.scaled(u);
      for (std::size_t i = 0; i < before; ++i) {
        const Vec2 w = members[i] + step;
        char& slot = mask[w.b() * d + w.c()];
        if (!slot) {
          slot = 1;
          members.push_back(w);
        }
      }
    }
  }
  return mask;
}

std::vector<char> to_mask(const Modulus& m, const std::vector<Vec2>& vs) {
  const std::uint64_t d = m.value();
  std::vector<char> mask(d * d, 0);
  for (const auto& v : vs) mask[v.b() * d + v.c()] = 1;
  return mask;
}

}  // namespace

void CheckTally::record(bool ok, const std::string& where) {
  if (ok) {
    ++passed;
    return;
  }
  if (failed++ == 0) first_counterexample = where;
}

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckTally& t) { return t.ok(); });
}

void VerifyReport::merge(const VerifyReport& other) {
  if (checks.empty()) {
    *this = other;
    return;
  }
  first = std::min(first, other.first);
  last = std::max(last, other.last);
  for (std::size_t i = 0; i < checks.size(); ++i) {
    CheckTally& t = checks[i];
    const CheckTally& o = other.checks[i];
    if (t.failed == 0 && o.failed != 0) t.first_counterexample = o.first_counterexample;
    t.passed += o.passed;
    t.failed += o.failed;
  }
}

const std::vector<std::string>& verify_check_names() {
  static const std::vector<std::string> names = {
      "line-cardinality", "points-through",   "perp-cardinality",
      "u-size",           "u-equals-perp",    "u-generates-perp",
      "admissibility",    "canonical-form",   "layer-table",
      "commuting-count",  "matrix-identities",
  };
  return names;
}

VerifyReport verify_modulus(std::uint64_t d, const VerifyOptions& options) {
  const Modulus m(d);
  if (Count{d} * d > options.scan_cap) {
    throw BudgetExceeded("verification sweep", d * d, options.scan_cap);
  }
  VerifyReport report;
  report.first = report.last = d;
  for (const auto& name : verify_check_names()) {
    CheckTally tally;
    tally.name = name;
    report.checks.push_back(std::move(tally));
  }
  auto& checks = report.checks;

  const LineCatalog cat = enumerate_points(m);
  {
    const Count closed = line_cardinality(m);
    const std::uint64_t orbits = count_points_by_orbits(m);
    checks[kLineCardinality].record(
        closed == cat.points.size() && closed == orbits,
        "d=" + std::to_string(d) + ": formula " + to_string(closed) +
            ", catalog " + std::to_string(cat.points.size()) + ", orbits " +
            std::to_string(orbits));
  }

  const std::vector<Vec2> vectors = all_vectors(m);
  for (const auto& v : vectors) {
    const auto through = points_through(v, cat);
    const Count through_closed = count_points_through(v);
    checks[kPointsThrough].record(through_closed == through.size(),
                                  mismatch(v, through_closed, through.size()));

    const auto perp = perp_set(v);
    const Count perp_closed = perp_cardinality(v);
    checks[kPerpCardinality].record(perp_closed == perp.size(),
                                    mismatch(v, perp_closed, perp.size()));

    const auto u = union_U(v, cat);
    if (!v.is_zero()) {
      const Count u_closed = u_size(v);
      checks[kUSize].record(u_closed == u.size(), mismatch(v, u_closed, u.size()));
    }
    checks[kUEqualsPerp].record(u_equals_perp(v) == (u == perp),
                                label(v) + ": predicate disagrees with set equality");

    std::vector<Vec2> gens;
    for (const auto& pt : through) gens.push_back(pt.generator());
    const auto perp_mask = to_mask(m, perp);
    const bool subset = std::all_of(u.begin(), u.end(), [&](const Vec2& w) {
      return perp_mask[w.b() * d + w.c()] != 0;
    });
    checks[kUGeneratesPerp].record(subset && span_mask(m, gens) == perp_mask,
                                   label(v) + ": U does not generate the perp-set");

    checks[kAdmissibility].record(
        is_admissible(v) == is_admissible_by_injectivity(v),
        label(v) + ": degree test disagrees with injectivity");

    const CanonicalForm cf = canonical_form(v);
    checks[kCanonicalForm].record(apply(v, cf.matrix) == cf.target &&
                                      is_unit(cf.matrix.det(), m) &&
                                      degree(cf.target) == degree(v),
                                  label(v) + ": canonical form contract violated");

    // Phase-reduced brute force: commutation is independent of the phase, so
    // count (b', c') with trivial commutator and multiply by d.
    const PauliOp g(m, 0, v.b(), v.c());
    Count brute = 0;
    for (const auto& w : vectors) {
      if (commutator(g, PauliOp(m, 0, w.b(), w.c())).is_identity()) brute += d;
    }
    checks[kCommutingCount].record(commuting_count(g) == brute,
                                   mismatch(v, commuting_count(g), brute));
  }

  {
    const auto hist = degree_histogram(m);
    const LayerTable table = layer_table(m);
    bool same = true;
    std::size_t realized = 0;
    for (const auto& entry : table.entries) {
      auto it = hist.find(entry.degree);
      const Count seen = it == hist.end() ? 0 : it->second;
      same = same && seen == entry.vectors && entry.operators == entry.vectors * d;
      realized += seen != 0;
    }
    checks[kLayerTable].record(same && realized == hist.size(),
                               "d=" + std::to_string(d) +
                                   ": layer counts differ from degree histogram");
  }

  if (options.matrix && d <= oracle::kMaxSweepDim) {
    const auto r = oracle::verify_identities(d);
    // Ordered pairs of commuting (b,c) vectors is the sum of perp-set sizes.
    Count perp_pairs = 0;
    for (const auto& v : vectors) perp_pairs += perp_cardinality(v);
    checks[kMatrixIdentities].record(
        r.passed && r.commuting_pairs == perp_pairs,
        "d=" + std::to_string(d) + ": " +
            (r.passed ? "commuting pairs " + std::to_string(r.commuting_pairs) +
                            " != " + to_string(perp_pairs)
                      : r.first_failure));
  }
  return report;
}

VerifyReport verify_range(std::uint64_t first, std::uint64_t last,
                          const VerifyOptions& options) {
  if (first < 2 || last < first) {
    throw InvalidModulus("verification range must satisfy 2 <= first <= last");
  }
  if (Count{last} * last > options.scan_cap) {
    throw BudgetExceeded("verification sweep", last * last, options.scan_cap);
  }
  const std::size_t n = last - first + 1;
  std::vector<VerifyReport> per_d(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        per_d[i] = verify_modulus(first + i, options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, n));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  VerifyReport merged;
  for (std::size_t i = 0; i < n; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    merged.merge(per_d[i]);
  }
  return merged;
}

}  // namespace qline
