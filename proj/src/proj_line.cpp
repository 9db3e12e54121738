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

#include "qline/proj_line.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "qline/error.hpp"

namespace qline {

namespace {

using ComponentGen = std::pair<Residue, Residue>;

// Canonical generators of P1(Z_{p^e}): (1, y) then (x, 1) with p | x.
std::vector<ComponentGen> component_line(const PrimePower& f) {
  std::vector<ComponentGen> out;
  out.reserve(f.value + f.value / f.prime);
  for (std::uint64_t y = 0; y < f.value; ++y) out.emplace_back(1, y);
  for (std::uint64_t x = 0; x < f.value; x += f.prime) out.emplace_back(x, 1);
  return out;
}

}  // namespace

Point Point::through_generator(const Vec2& v) {
  if (!is_admissible(v)) {
    throw std::invalid_argument("vector does not generate a free cyclic submodule");
  }
  const Modulus& m = v.modulus();
  std::vector<Residue> gb(m.rank()), gc(m.rank());
  for (std::size_t k = 0; k < m.rank(); ++k) {
    const std::uint64_t dk = m.factor(k).value;
    const auto [b, c] = v.component(k);
    if (is_unit(b, dk)) {
      gb[k] = 1 % dk;
      gc[k] = mul_mod(c, inverse(b, dk), dk);
    } else {
      gb[k] = mul_mod(b, inverse(c, dk), dk);
      gc[k] = 1 % dk;
    }
  }
  return Point(Vec2(m, crt_combine(gb, m), crt_combine(gc, m)));
}

bool Point::contains(const Vec2& v) const {
  require_same_modulus(modulus(), v.modulus());
  const Modulus& m = modulus();
  for (std::size_t k = 0; k < m.rank(); ++k) {
    const std::uint64_t dk = m.factor(k).value;
    const auto [gb, gc] = generator_.component(k);
    const auto [s, t] = v.component(k);
    if (gb == 1) {
      // (s, t) = s (1, y)
      if (t != mul_mod(s, gc, dk)) return false;
    } else {
      // (s, t) = t (x, 1)
      if (s != mul_mod(t, gb, dk)) return false;
    }
  }
  return true;
}

std::vector<Vec2> Point::vectors() const {
  std::vector<Vec2> out;
  const std::uint64_t d = modulus().value();
  out.reserve(d);
  for (std::uint64_t u = 0; u < d; ++u) out.push_back(generator_.scaled(u));
  return out;
}

Count line_cardinality(const Modulus& m) {
  Count out = 1;
  for (const auto& f : m.factors()) {
    out = checked_mul(out, Count{f.value} + f.value / f.prime);
  }
  return out;
}

LineCatalog enumerate_points(const Modulus& m, std::uint64_t point_cap) {
  const Count total = line_cardinality(m);
  if (total > point_cap) {
    throw BudgetExceeded("projective line enumeration",
                         fits_u64(total) ? static_cast<std::uint64_t>(total)
                                         : UINT64_MAX,
                         point_cap);
  }
  std::vector<std::vector<ComponentGen>> lines;
  for (const auto& f : m.factors()) lines.push_back(component_line(f));

  LineCatalog cat{m, {}};
  cat.points.reserve(static_cast<std::size_t>(total));
  const std::size_t r = m.rank();
  std::vector<std::size_t> index(r, 0);
  std::vector<Residue> gb(r), gc(r);
  // Odometer over the Cartesian product of the component lines.
  while (true) {
    for (std::size_t k = 0; k < r; ++k) {
      gb[k] = lines[k][index[k]].first;
      gc[k] = lines[k][index[k]].second;
    }
    cat.points.push_back(
        Point::through_generator(Vec2(m, crt_combine(gb, m), crt_combine(gc, m))));
    std::size_t k = 0;
    while (k < r && ++index[k] == lines[k].size()) index[k++] = 0;
    if (k == r) break;
  }
  std::sort(cat.points.begin(), cat.points.end());
  return cat;
}

std::vector<Vec2> cyclic_submodule(const Vec2& v) {
  std::vector<Vec2> out;
  const std::uint64_t d = v.modulus().value();
  out.reserve(d);
  for (std::uint64_t u = 0; u < d; ++u) out.push_back(v.scaled(u));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Point> points_through(const Vec2& v, const LineCatalog& cat) {
  require_same_modulus(v.modulus(), cat.modulus);
  std::vector<Point> out;
  for (const auto& pt : cat.points) {
    if (pt.contains(v)) out.push_back(pt);
  }
  return out;
}

Count count_points_through(const Vec2& v) {
  return count_points_through(degree(v), v.modulus());
}

Count count_points_through(const Degree& deg, const Modulus& m) {
  Count out = 1;
  for (std::size_t k = 0; k < m.rank(); ++k) {
    const PrimePower& f = m.factor(k);
    if (deg.deltas[k] == f.exponent) {
      out = checked_mul(out, Count{f.value} + f.value / f.prime);
    } else {
      out = checked_mul(out, checked_pow(f.prime, deg.deltas[k]));
    }
  }
  return out;
}

std::vector<Vec2> union_U(const Vec2& v, const LineCatalog& cat) {
  std::vector<Vec2> out;
  for (const auto& pt : points_through(v, cat)) {
    auto vs = pt.vectors();
    out.insert(out.end(), vs.begin(), vs.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Count u_size(const Vec2& v) {
  if (v.is_zero()) {
    throw ZeroVector("|U(b,c)| closed form is undefined for the zero vector");
  }
  const Modulus& m = v.modulus();
  const Degree deg = degree(v);
  Count out = 1;
  for (std::size_t k = 0; k < m.rank(); ++k) {
    const PrimePower& f = m.factor(k);
    const std::uint64_t p = f.prime;
    const unsigned e = f.exponent;
    const unsigned delta = deg.deltas[k];
    if (delta == e) {
      // Zero component: U covers the whole component module.
      out = checked_mul(out, checked_mul(f.value, f.value));
      continue;
    }
    Count term = checked_pow(p, e - delta);
    for (unsigned sigma = 0; sigma < delta; ++sigma) {
      const Count layer = checked_pow(p, e - sigma) - checked_pow(p, e - sigma - 1);
      term = checked_add(term, checked_mul(layer, checked_pow(p, delta - sigma)));
    }
    out = checked_mul(out, term);
  }
  return out;
}

bool u_equals_perp(const Vec2& v) {
  // Points of P1(Z_d) are products of component points, so U and the
  // perp-set both split into components; equality must hold in each.
  const Degree deg = degree(v);
  for (std::size_t k = 0; k < v.modulus().rank(); ++k) {
    const unsigned delta = deg.deltas[k];
    if (delta != 0 && delta != v.modulus().factor(k).exponent) return false;
  }
  return true;
}

}  // namespace qline
