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

// The generalized Pauli group of one qudit, elements held in normal form
// w^a X^b Z^c. Commutation only depends on (b, c), so every count below
// factors through the symplectic module and the phase multiplicity d.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qline/count.hpp"
#include "qline/symplectic.hpp"

namespace qline {

/// Default cap on d^2 (graph vertices) for the maximal commuting set search.
inline constexpr std::uint64_t kCliqueVertexCap = 64 * 64;

class PauliOp {
 public:
  PauliOp(const Modulus& m, std::uint64_t a, std::uint64_t b, std::uint64_t c)
      : m_(m), a_(m.reduce(a)), b_(m.reduce(b)), c_(m.reduce(c)) {}

  static PauliOp identity(const Modulus& m) { return PauliOp(m, 0, 0, 0); }

  const Modulus& modulus() const { return m_; }
  Residue a() const { return a_; }
  Residue b() const { return b_; }
  Residue c() const { return c_; }
  Vec2 vector() const { return Vec2(m_, b_, c_); }
  bool is_identity() const { return a_ == 0 && b_ == 0 && c_ == 0; }

  friend bool operator==(const PauliOp& x, const PauliOp& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.m_ == y.m_;
  }

 private:
  Modulus m_;
  Residue a_, b_, c_;
};

PauliOp multiply(const PauliOp& g, const PauliOp& h);
/// w^(bc - a) X^-b Z^-c.
PauliOp inverse(const PauliOp& g);
/// g h g^-1 h^-1, always central: w^(c b' - c' b) I.
PauliOp commutator(const PauliOp& g, const PauliOp& h);

/// Number of h in G commuting with g: d^2 prod p_k^delta_k.
Count commuting_count(const PauliOp& g);

/// Homogeneous PG(r-1, 2) coordinates of a non-admissible layer. Present
/// only for squarefree d with r > 1 and a non-zero degree.
std::optional<std::vector<unsigned>> layer_pg_label(const Degree& delta,
                                                    const Modulus& m);

struct LayerEntry {
  Degree degree;
  Count vectors;
  Count operators;
  /// Points of P1(Z_d) through any vector of this layer.
  Count points_per_vector;
  std::optional<std::vector<unsigned>> pg_label;
};

struct LayerTable {
  Modulus modulus;
  /// One entry per realizable degree, lexicographic in factor order.
  std::vector<LayerEntry> entries;
};

/// Closed-form layer decomposition; vector count of degree delta is
/// prod N_k(delta_k) with N(delta) = p^(2(e-delta)) - p^(2(e-delta-1)) for
/// delta < e and N(e) = 1.
LayerTable layer_table(const Modulus& m);

/// Degree histogram by scanning every vector. Throws BudgetExceeded when
/// d^2 > scan_cap.
std::map<Degree, Count> degree_histogram(const Modulus& m,
                                         std::uint64_t scan_cap = kPerpScanCap);

struct CommutingSet {
  /// Sorted lexicographically; always contains (0, 0).
  std::vector<Vec2> vectors;
  bool free_cyclic;
};

/// Every maximal set of pairwise perpendicular vectors of Z_d^2, by maximal
/// clique search on the perpendicularity graph. Output sets are sorted and
/// the list is lexicographic. Throws BudgetExceeded when d^2 > vertex_cap.
std::vector<CommutingSet> maximal_commuting_sets(
    const Modulus& m, std::uint64_t vertex_cap = kCliqueVertexCap);

}  // namespace qline
