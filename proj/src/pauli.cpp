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

#include "qline/pauli.hpp"

#include <algorithm>
#include <bit>

#include "qline/error.hpp"
#include "qline/proj_line.hpp"

namespace qline {

PauliOp multiply(const PauliOp& g, const PauliOp& h) {
  require_same_modulus(g.modulus(), h.modulus());
  const Modulus& m = g.modulus();
  // (w^a X^b Z^c)(w^a' X^b' Z^c') = w^(b'c + a + a') X^(b+b') Z^(c+c')
  const Residue phase = m.add(m.mul(h.b(), g.c()), m.add(g.a(), h.a()));
  return PauliOp(m, phase, m.add(g.b(), h.b()), m.add(g.c(), h.c()));
}

PauliOp inverse(const PauliOp& g) {
  const Modulus& m = g.modulus();
  return PauliOp(m, m.sub(m.mul(g.b(), g.c()), g.a()), m.neg(g.b()),
                 m.neg(g.c()));
}

PauliOp commutator(const PauliOp& g, const PauliOp& h) {
  return PauliOp(g.modulus(), form(g.vector(), h.vector()), 0, 0);
}

Count commuting_count(const PauliOp& g) {
  // d * |(b,c)^perp|: the phase exponent is free.
  return checked_mul(g.modulus().value(), perp_cardinality(g.vector()));
}

std::optional<std::vector<unsigned>> layer_pg_label(const Degree& delta,
                                                    const Modulus& m) {
  if (!m.is_squarefree() || m.rank() < 2 || delta.is_zero()) return std::nullopt;
  return delta.deltas;
}

namespace {

Count component_layer_size(const PrimePower& f, unsigned delta) {
  if (delta == f.exponent) return 1;
  const unsigned top = 2 * (f.exponent - delta);
  return checked_pow(f.prime, top) - checked_pow(f.prime, top - 2);
}

}  // namespace

LayerTable layer_table(const Modulus& m) {
  LayerTable table{m, {}};
  const std::size_t r = m.rank();
  std::vector<unsigned> deltas(r, 0);
  // Odometer with the last component fastest gives lexicographic order.
  while (true) {
    LayerEntry entry{Degree{deltas}, 1, 0, 0, std::nullopt};
    for (std::size_t k = 0; k < r; ++k) {
      entry.vectors = checked_mul(entry.vectors,
                                  component_layer_size(m.factor(k), deltas[k]));
    }
    entry.operators = checked_mul(entry.vectors, m.value());
    entry.points_per_vector = count_points_through(entry.degree, m);
    entry.pg_label = layer_pg_label(entry.degree, m);
    table.entries.push_back(std::move(entry));

    std::size_t k = r;
    while (k > 0 && deltas[k - 1] == m.factor(k - 1).exponent) deltas[--k] = 0;
    if (k == 0) break;
    ++deltas[k - 1];
  }
  return table;
}

std::map<Degree, Count> degree_histogram(const Modulus& m,
                                         std::uint64_t scan_cap) {
  std::map<Degree, Count> out;
  for (const auto& v : all_vectors(m, scan_cap)) ++out[degree(v)];
  return out;
}

namespace {

// Dense bitset over the d^2 vertices of the perpendicularity graph.
class Bits {
 public:
  explicit Bits(std::size_t n) : words_((n + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool any() const {
    return std::any_of(words_.begin(), words_.end(),
                       [](std::uint64_t w) { return w != 0; });
  }

  Bits operator&(const Bits& o) const {
    Bits out = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= o.words_[i];
    return out;
  }
  Bits operator|(const Bits& o) const {
    Bits out = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] |= o.words_[i];
    return out;
  }
  Bits minus(const Bits& o) const {
    Bits out = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= ~o.words_[i];
    return out;
  }
  std::size_t count_and(const Bits& o) const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      n += std::popcount(words_[i] & o.words_[i]);
    }
    return n;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word != 0) {
        f(w * 64 + std::countr_zero(word));
        word &= word - 1;
      }
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

// Bron-Kerbosch with Tomita pivoting.
class CliqueSearch {
 public:
  explicit CliqueSearch(std::vector<Bits> adjacency)
      : adj_(std::move(adjacency)) {}

  std::vector<std::vector<std::size_t>> run() {
    const std::size_t n = adj_.size();
    Bits all(n);
    for (std::size_t i = 0; i < n; ++i) all.set(i);
    std::vector<std::size_t> clique;
    expand(clique, all, Bits(n));
    return std::move(found_);
  }

 private:
  void expand(std::vector<std::size_t>& clique, Bits candidates, Bits excluded) {
    if (!candidates.any() && !excluded.any()) {
      found_.push_back(clique);
      return;
    }
    std::size_t pivot = 0;
    std::size_t best = 0;
    bool have_pivot = false;
    (candidates | excluded).for_each([&](std::size_t u) {
      const std::size_t score = candidates.count_and(adj_[u]);
      if (!have_pivot || score > best) {
        pivot = u;
        best = score;
        have_pivot = true;
      }
    });
    candidates.minus(adj_[pivot]).for_each([&](std::size_t v) {
      clique.push_back(v);
      expand(clique, candidates & adj_[v], excluded & adj_[v]);
      clique.pop_back();
      candidates.reset(v);
      excluded.set(v);
    });
  }

  std::vector<Bits> adj_;
  std::vector<std::vector<std::size_t>> found_;
};

bool is_free_cyclic(const std::vector<Vec2>& set) {
  const std::uint64_t d = set.front().modulus().value();
  if (set.size() != d) return false;
  for (const auto& v : set) {
    if (is_admissible(v)) return cyclic_submodule(v) == set;
  }
  return false;
}

}  // namespace

std::vector<CommutingSet> maximal_commuting_sets(const Modulus& m,
                                                 std::uint64_t vertex_cap) {
  const std::uint64_t d = m.value();
  const Count n_count = Count{d} * d;
  if (n_count > vertex_cap) {
    throw BudgetExceeded("maximal commuting set search",
                         fits_u64(n_count) ? static_cast<std::uint64_t>(n_count)
                                           : UINT64_MAX,
                         vertex_cap);
  }
  const std::size_t n = static_cast<std::size_t>(n_count);
  const std::vector<Vec2> vertices = all_vectors(m);
  std::vector<Bits> adjacency(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (perpendicular(vertices[i], vertices[j])) {
        adjacency[i].set(j);
        adjacency[j].set(i);
      }
    }
  }

  std::vector<CommutingSet> out;
  for (auto& clique : CliqueSearch(std::move(adjacency)).run()) {
    std::sort(clique.begin(), clique.end());
    CommutingSet set;
    set.vectors.reserve(clique.size());
    // Vertex index b * d + c, so index order is lexicographic order.
    for (std::size_t i : clique) set.vectors.push_back(vertices[i]);
    set.free_cyclic = is_free_cyclic(set.vectors);
    out.push_back(std::move(set));
  }
  std::sort(out.begin(), out.end(),
            [](const CommutingSet& x, const CommutingSet& y) {
              return x.vectors < y.vectors;
            });
  return out;
}

}  // namespace qline
