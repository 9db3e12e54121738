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

// The module Z_d^2 with the alternating form [(b,c),(b',c')] = c b' - c' b.
//
// Vectors act on matrices from the left: (b,c) M is a row vector times M.

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "qline/count.hpp"
#include "qline/ring.hpp"

namespace qline {

/// Default cap on d^2 for full perp-set enumeration (d <= 2^16).
inline constexpr std::uint64_t kPerpScanCap = std::uint64_t{1} << 32;

class Vec2 {
 public:
  Vec2(const Modulus& m, std::uint64_t b, std::uint64_t c)
      : m_(m), b_(m.reduce(b)), c_(m.reduce(c)) {}

  const Modulus& modulus() const { return m_; }
  Residue b() const { return b_; }
  Residue c() const { return c_; }
  bool is_zero() const { return b_ == 0 && c_ == 0; }

  /// Component vector (b mod d_k, c mod d_k).
  std::pair<Residue, Residue> component(std::size_t k) const {
    const std::uint64_t dk = m_.factor(k).value;
    return {b_ % dk, c_ % dk};
  }

  Vec2 scaled(Residue u) const {
    return Vec2(m_, m_.mul(u, b_), m_.mul(u, c_));
  }

  friend Vec2 operator+(const Vec2& x, const Vec2& y);

  friend bool operator==(const Vec2& x, const Vec2& y) {
    return x.b_ == y.b_ && x.c_ == y.c_ && x.m_ == y.m_;
  }
  /// Lexicographic on (b, c); only meaningful within one modulus.
  friend std::strong_ordering operator<=>(const Vec2& x, const Vec2& y) {
    if (auto cmp = x.b_ <=> y.b_; cmp != 0) return cmp;
    return x.c_ <=> y.c_;
  }

 private:
  Modulus m_;
  Residue b_;
  Residue c_;
};

/// Per-component degrees, in factor order.
struct Degree {
  std::vector<unsigned> deltas;

  bool is_zero() const;
  /// Sum of the component degrees.
  unsigned total() const;

  friend bool operator==(const Degree&, const Degree&) = default;
  friend auto operator<=>(const Degree&, const Degree&) = default;
};

/// 2x2 matrix over Z_d with unit determinant.
class Mat2 {
 public:
  /// Throws NotInvertible if the determinant is not a unit.
  Mat2(const Modulus& m, Residue a11, Residue a12, Residue a21, Residue a22);

  static Mat2 identity(const Modulus& m) { return Mat2(m, 1, 0, 0, 1); }

  const Modulus& modulus() const { return m_; }
  Residue a11() const { return a_[0]; }
  Residue a12() const { return a_[1]; }
  Residue a21() const { return a_[2]; }
  Residue a22() const { return a_[3]; }
  Residue det() const;

  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a_[0] == y.a_[0] && x.a_[1] == y.a_[1] && x.a_[2] == y.a_[2] &&
           x.a_[3] == y.a_[3] && x.m_ == y.m_;
  }

 private:
  Modulus m_;
  Residue a_[4];
};

struct CanonicalForm {
  Mat2 matrix;
  /// (q, 0) with q = p_k^delta_k in every component.
  Vec2 target;
};

/// Throws ModulusMismatch when the operands were built over different d.
void require_same_modulus(const Modulus& x, const Modulus& y);

Residue form(const Vec2& v, const Vec2& w);
inline bool perpendicular(const Vec2& v, const Vec2& w) {
  return form(v, w) == 0;
}

/// Degree of a component vector (b, c) over Z_{p^e}.
unsigned component_degree(Residue b, Residue c, const PrimePower& f);
Degree degree(const Vec2& v);

bool is_admissible(const Vec2& v);
/// Admissibility decided by enumerating u -> (ub, uc) and checking
/// injectivity. O(d); used to cross-check the degree-based test.
bool is_admissible_by_injectivity(const Vec2& v);

Vec2 apply(const Vec2& v, const Mat2& a);
CanonicalForm canonical_form(const Vec2& v);

/// All w with form(v, w) == 0, lexicographic. Throws BudgetExceeded when
/// d^2 > scan_cap.
std::vector<Vec2> perp_set(const Vec2& v, std::uint64_t scan_cap = kPerpScanCap);

/// |perp_set(v)| in closed form: d * prod p_k^delta_k.
Count perp_cardinality(const Vec2& v);

/// Every vector of Z_d^2 in lexicographic order. Throws BudgetExceeded when
/// d^2 > scan_cap.
std::vector<Vec2> all_vectors(const Modulus& m,
                              std::uint64_t scan_cap = kPerpScanCap);

}  // namespace qline
