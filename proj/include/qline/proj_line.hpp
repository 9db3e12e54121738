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

// The projective line P1(Z_d): free cyclic submodules of Z_d^2.
//
// A point is identified by its canonical generator. Over Z_{p^e} every point
// is uniquely Z(1, y) with y arbitrary or Z(x, 1) with x divisible by p; for
// general d the generator is the CRT recombination of the component
// generators, so P1(Z_d) is the product of the component lines.

#include <cstdint>
#include <vector>

#include "qline/count.hpp"
#include "qline/symplectic.hpp"

namespace qline {

/// Default cap on the number of points materialized by enumerate_points.
inline constexpr std::uint64_t kPointCap = 10'000'000;

class Point {
 public:
  /// The point generated by an admissible vector. Throws
  /// std::invalid_argument if `v` is not admissible.
  static Point through_generator(const Vec2& v);

  const Vec2& generator() const { return generator_; }
  const Modulus& modulus() const { return generator_.modulus(); }

  /// Membership solved per component as one modular equation.
  bool contains(const Vec2& v) const;

  /// The d vectors u * generator, ordered by u.
  std::vector<Vec2> vectors() const;

  friend bool operator==(const Point& x, const Point& y) {
    return x.generator_ == y.generator_;
  }
  friend auto operator<=>(const Point& x, const Point& y) {
    return x.generator_ <=> y.generator_;
  }

 private:
  explicit Point(Vec2 generator) : generator_(std::move(generator)) {}
  Vec2 generator_;
};

struct LineCatalog {
  Modulus modulus;
  /// Lexicographic on canonical generators.
  std::vector<Point> points;
};

/// prod (p^e + p^(e-1)).
Count line_cardinality(const Modulus& m);

LineCatalog enumerate_points(const Modulus& m, std::uint64_t point_cap = kPointCap);

/// Z_d v, sorted, duplicates removed.
std::vector<Vec2> cyclic_submodule(const Vec2& v);

std::vector<Point> points_through(const Vec2& v, const LineCatalog& cat);
Count count_points_through(const Vec2& v);
/// Same count from the degree alone (a component is zero iff delta_k = e_k).
Count count_points_through(const Degree& deg, const Modulus& m);

/// Union of the vector sets of all points containing v, sorted.
std::vector<Vec2> union_U(const Vec2& v, const LineCatalog& cat);

/// |union_U(v)| in closed form. Throws ZeroVector for v = (0, 0), where the
/// formula does not count Z_d^2.
Count u_size(const Vec2& v);

/// True iff union_U(v) equals perp_set(v): every component vector of v is
/// zero or admissible. For prime-power d this is "v zero or admissible".
bool u_equals_perp(const Vec2& v);

}  // namespace qline
