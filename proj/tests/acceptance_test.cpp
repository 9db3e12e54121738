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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails or runs over its time limit.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "brute.hpp"
#include "qline/oracle.hpp"
#include "qline/pauli.hpp"
#include "qline/proj_line.hpp"
#include "qline/symplectic.hpp"

namespace {

using namespace qline;

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string pair_text(std::uint64_t b, std::uint64_t c) {
  return "(" + std::to_string(b) + "," + std::to_string(c) + ")";
}

// Trial division, kept apart from the library's factorization.
std::vector<std::pair<std::uint64_t, unsigned>> plain_factors(std::uint64_t d) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= d; ++p) {
    unsigned e = 0;
    while (d % p == 0) {
      d /= p;
      ++e;
    }
    if (e) out.push_back({p, e});
  }
  if (d > 1) out.push_back({d, 1});
  return out;
}

Outcome counterexample_d4() {
  Outcome o;
  const Modulus m(4);
  const Vec2 v(m, 2, 0);
  const LineCatalog cat = enumerate_points(m);
  const auto through = points_through(v, cat);
  o.expect(through.size() == 2, "points through (2,0): " + std::to_string(through.size()));
  o.expect(through.size() == 2 && through[0].generator() == Vec2(m, 1, 0) &&
               through[1].generator() == Vec2(m, 1, 2),
           "points through (2,0) are not Z4(1,0), Z4(1,2)");
  const auto pts = brute::points(4);
  o.expect(brute::points_through({2, 0}, pts) == 2, "enumeration disagrees on points");
  o.expect(brute::contains(brute::orbit({1, 0}, 4), {2, 0}) &&
               brute::contains(brute::orbit({1, 2}, 4), {2, 0}),
           "(2,0) missing from an enumerated orbit");

  const auto perp = perp_set(v);
  const auto u = union_U(v, cat);
  const Vec2 w(m, 2, 2);
  o.expect(std::binary_search(perp.begin(), perp.end(), w), "(2,2) not in perp-set");
  o.expect(!std::binary_search(u.begin(), u.end(), w), "(2,2) in U");
  o.expect(perp.size() == 8 && perp_cardinality(v) == 8, "|perp| != 8");
  o.expect(u.size() == 6 && u_size(v) == 6, "|U| != 6");
  o.expect(brute::perp({2, 0}, 4).size() == 8 && brute::union_U({2, 0}, pts).size() == 6,
           "enumeration disagrees on |perp| or |U|");
  o.expect(!u_equals_perp(v), "predicate claims U = perp");
  return o;
}

Outcome layers_d12() {
  Outcome o;
  const Modulus m(12);
  const LayerTable table = layer_table(m);
  const auto hist = degree_histogram(m);
  // (3-part, 2-part) ordering; the library stores ascending primes.
  const std::vector<std::pair<unsigned, unsigned>> order = {{0, 0}, {0, 1}, {1, 0},
                                                            {0, 2}, {1, 1}, {1, 2}};
  const std::vector<Count> expected = {96, 24, 12, 8, 3, 1};
  o.expect(table.entries.size() == order.size(),
           "layer count " + std::to_string(table.entries.size()));
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Degree deg{{order[i].second, order[i].first}};
    const auto it = std::find_if(table.entries.begin(), table.entries.end(),
                                 [&](const LayerEntry& e) { return e.degree == deg; });
    const std::string name = pair_text(order[i].first, order[i].second);
    o.expect(it != table.entries.end(), "missing layer " + name);
    if (it == table.entries.end()) continue;
    o.expect(it->vectors == expected[i], "vectors in layer " + name);
    o.expect(it->operators == 12 * expected[i], "operators in layer " + name);
    o.expect(hist.count(deg) && hist.at(deg) == expected[i], "histogram for " + name);
  }
  return o;
}

Outcome closed_forms_sweep() {
  Outcome o;
  for (std::uint64_t d = 2; d <= 60 && o.ok; ++d) {
    const Modulus m(d);
    const auto pts = brute::points(d);
    for (std::uint64_t b = 0; b < d; ++b) {
      for (std::uint64_t c = 0; c < d; ++c) {
        const Vec2 v(m, b, c);
        const std::string at = "d=" + std::to_string(d) + " v=" + pair_text(b, c);
        const auto perp = brute::perp({b, c}, d);
        const auto u = brute::union_U({b, c}, pts);
        o.expect(count_points_through(v) == brute::points_through({b, c}, pts),
                 "points through at " + at);
        o.expect(perp_cardinality(v) == perp.size(), "perp cardinality at " + at);
        if (b != 0 || c != 0) o.expect(u_size(v) == u.size(), "U size at " + at);
        o.expect(u_equals_perp(v) == (u == perp), "U = perp predicate at " + at);
      }
    }
  }
  return o;
}

Outcome commuting_counts() {
  Outcome o;
  for (std::uint64_t d : {2, 3, 4, 6, 8, 9, 12}) {
    const Modulus m(d);
    for (std::uint64_t i = 0; i < d * d * d; ++i) {
      const brute::Op g{i / (d * d), i / d % d, i % d};
      const Count mine = commuting_count(PauliOp(m, g.a, g.b, g.c));
      o.expect(mine == brute::commuting_count(g, d),
               "d=" + std::to_string(d) + " g=(" + std::to_string(g.a) + "," +
                   std::to_string(g.b) + "," + std::to_string(g.c) + ")");
    }
  }
  return o;
}

Outcome squarefree_dichotomy() {
  Outcome o;
  for (std::uint64_t d = 2; d <= 60; ++d) {
    bool squarefree = true;
    for (const auto& [p, e] : plain_factors(d)) squarefree = squarefree && e == 1;
    const auto pts = brute::points(d);
    bool all_equal = true;
    bool predicate_all = true;
    for (std::uint64_t b = 0; b < d; ++b) {
      for (std::uint64_t c = 0; c < d; ++c) {
        if (b == 0 && c == 0) continue;
        all_equal = all_equal && brute::union_U({b, c}, pts) == brute::perp({b, c}, d);
        predicate_all = predicate_all && u_equals_perp(Vec2(Modulus(d), b, c));
      }
    }
    o.expect(all_equal == squarefree,
             "d=" + std::to_string(d) + (squarefree ? " squarefree but U != perp somewhere"
                                                    : " not squarefree but U = perp throughout"));
    o.expect(predicate_all == squarefree, "predicate sweep disagrees at d=" + std::to_string(d));
  }
  return o;
}

Outcome matrix_oracle() {
  Outcome o;
  for (std::uint64_t d = 2; d <= 16; ++d) {
    const auto r = oracle::verify_identities(d);
    o.expect(r.passed, "d=" + std::to_string(d) + ": " + r.first_failure);
    std::uint64_t perp_pairs = 0;
    for (std::uint64_t b = 0; b < d; ++b) {
      for (std::uint64_t c = 0; c < d; ++c) perp_pairs += brute::perp({b, c}, d).size();
    }
    o.expect(r.commuting_pairs == perp_pairs,
             "d=" + std::to_string(d) + ": matrix-commuting pairs " +
                 std::to_string(r.commuting_pairs) + " vs form-zero pairs " +
                 std::to_string(perp_pairs));
  }
  return o;
}

Outcome line_cardinality_sweep() {
  Outcome o;
  for (std::uint64_t d = 2; d <= 200; ++d) {
    std::uint64_t product = 1;
    for (const auto& [p, e] : plain_factors(d)) {
      std::uint64_t pe = 1;
      for (unsigned i = 0; i < e; ++i) pe *= p;
      product *= pe + pe / p;
    }
    const std::uint64_t enumerated = brute::count_points(d);
    o.expect(enumerated == product && line_cardinality(Modulus(d)) == product,
             "d=" + std::to_string(d) + ": enumerated " + std::to_string(enumerated) +
                 ", product " + std::to_string(product));
  }
  return o;
}

Outcome maximal_sets_d4() {
  Outcome o;
  const Modulus m(4);
  const auto sets = maximal_commuting_sets(m);
  const brute::VecSet klein = {{0, 0}, {0, 2}, {2, 0}, {2, 2}};
  bool found = false;
  std::vector<brute::VecSet> reported;
  for (const auto& s : sets) {
    brute::VecSet vs;
    for (const auto& v : s.vectors) vs.emplace_back(v.b(), v.c());
    if (vs == klein) {
      found = true;
      o.expect(!s.free_cyclic, "{(0,0),(2,2),(2,0),(0,2)} reported as free cyclic");
    }
    reported.push_back(vs);
  }
  o.expect(found, "{(0,0),(2,2),(2,0),(0,2)} not reported as maximal");
  for (const auto& pt : brute::points(4)) {
    const auto it = std::find(reported.begin(), reported.end(), pt);
    o.expect(it != reported.end(), "a free cyclic submodule is missing");
    if (it != reported.end()) {
      o.expect(sets[it - reported.begin()].free_cyclic, "a point is not flagged free cyclic");
    }
  }
  return o;
}

struct Criterion {
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"d4-counterexample", 1, counterexample_d4},
      {"layer-table-d12", 1, layers_d12},
      {"closed-forms-vs-enumeration", 300, closed_forms_sweep},
      {"commuting-counts", 60, commuting_counts},
      {"squarefree-dichotomy", 300, squarefree_dichotomy},
      {"matrix-oracle", 120, matrix_oracle},
      {"line-cardinality", 120, line_cardinality_sweep},
      {"maximal-sets-d4", 10, maximal_sets_d4},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome o = c.run();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.limit_seconds) {
      o.ok = false;
      o.detail = "over the " + std::to_string(static_cast<int>(c.limit_seconds)) +
                 " s limit";
    }
    std::printf("%s %zu %-28s %8.3fs%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, c.name, secs,
                o.ok ? "" : "  ", o.detail.c_str());
    failures += !o.ok;
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failures);
  return failures == 0 ? 0 : 1;
}
