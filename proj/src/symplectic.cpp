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

#include "qline/symplectic.hpp"

#include <array>
#include <numeric>
#include <string>

#include "qline/error.hpp"

namespace qline {

namespace {

void require_scan(const Modulus& m, std::uint64_t scan_cap, const char* what) {
  const Count needed = Count{m.value()} * m.value();
  if (needed > scan_cap) {
    throw BudgetExceeded(what, fits_u64(needed) ? static_cast<std::uint64_t>(needed)
                                                : UINT64_MAX,
                         scan_cap);
  }
}

}  // namespace

Vec2 operator+(const Vec2& x, const Vec2& y) {
  require_same_modulus(x.m_, y.m_);
  return Vec2(x.m_, x.m_.add(x.b_, y.b_), x.m_.add(x.c_, y.c_));
}

bool Degree::is_zero() const {
  for (unsigned delta : deltas) {
    if (delta != 0) return false;
  }
  return true;
}

unsigned Degree::total() const {
  return std::accumulate(deltas.begin(), deltas.end(), 0u);
}

Mat2::Mat2(const Modulus& m, Residue a11, Residue a12, Residue a21,
           Residue a22)
    : m_(m),
      a_{m.reduce(a11), m.reduce(a12), m.reduce(a21), m.reduce(a22)} {
  if (!is_unit(det(), m_)) {
    throw NotInvertible("matrix determinant " + std::to_string(det()) +
                        " is not a unit modulo " + std::to_string(m_.value()));
  }
}

Residue Mat2::det() const {
  return m_.sub(m_.mul(a_[0], a_[3]), m_.mul(a_[1], a_[2]));
}

void require_same_modulus(const Modulus& x, const Modulus& y) {
  if (!(x == y)) {
    throw ModulusMismatch("operands over Z_" + std::to_string(x.value()) +
                          " and Z_" + std::to_string(y.value()));
  }
}

Residue form(const Vec2& v, const Vec2& w) {
  require_same_modulus(v.modulus(), w.modulus());
  const Modulus& m = v.modulus();
  return m.sub(m.mul(v.c(), w.b()), m.mul(w.c(), v.b()));
}

unsigned component_degree(Residue b, Residue c, const PrimePower& f) {
  return std::min(valuation(b, f.prime, f.exponent),
                  valuation(c, f.prime, f.exponent));
}

Degree degree(const Vec2& v) {
  Degree out;
  out.deltas.reserve(v.modulus().rank());
  for (std::size_t k = 0; k < v.modulus().rank(); ++k) {
    const auto [b, c] = v.component(k);
    out.deltas.push_back(component_degree(b, c, v.modulus().factor(k)));
  }
  return out;
}

bool is_admissible(const Vec2& v) {
  // Degree zero in every component; equivalently gcd(b, c, d) == 1.
  return gcd(gcd(v.b(), v.c()), v.modulus().value()) == 1;
}

bool is_admissible_by_injectivity(const Vec2& v) {
  const Modulus& m = v.modulus();
  // u -> (ub, uc) is additive, so injective iff only u = 0 maps to (0, 0).
  for (std::uint64_t u = 1; u < m.value(); ++u) {
    if (m.mul(u, v.b()) == 0 && m.mul(u, v.c()) == 0) return false;
  }
  return true;
}

Vec2 apply(const Vec2& v, const Mat2& a) {
  require_same_modulus(v.modulus(), a.modulus());
  const Modulus& m = v.modulus();
  return Vec2(m, m.add(m.mul(v.b(), a.a11()), m.mul(v.c(), a.a21())),
              m.add(m.mul(v.b(), a.a12()), m.mul(v.c(), a.a22())));
}

CanonicalForm canonical_form(const Vec2& v) {
  const Modulus& m = v.modulus();
  const std::size_t r = m.rank();
  std::array<std::vector<Residue>, 4> entries;
  std::vector<Residue> q(r);
  for (auto& e : entries) e.resize(r);

  for (std::size_t k = 0; k < r; ++k) {
    const PrimePower& f = m.factor(k);
    const std::uint64_t dk = f.value;
    const auto [b, c] = v.component(k);
    const PowerRep rb = power_rep(b, f.prime, f.exponent);
    const PowerRep rc = power_rep(c, f.prime, f.exponent);
    const unsigned beta = rb.exponent;
    const unsigned gamma = rc.exponent;
    const Residue vu = rb.unit % dk;
    const Residue wu = rc.unit % dk;
    auto negate = [dk](Residue x) { return x == 0 ? 0 : dk - x; };

    if (beta <= gamma) {
      // [[v^-1, -w p^(gamma-beta)], [0, v]]
      const Residue shift = ipow(f.prime, gamma - beta) % dk;
      entries[0][k] = inverse(vu, dk);
      entries[1][k] = negate(mul_mod(wu, shift, dk));
      entries[2][k] = 0;
      entries[3][k] = vu;
    } else {
      // [[0, -w], [w^-1, v p^(beta-gamma)]]
      const Residue shift = ipow(f.prime, beta - gamma) % dk;
      entries[0][k] = 0;
      entries[1][k] = negate(wu);
      entries[2][k] = inverse(wu, dk);
      entries[3][k] = mul_mod(vu, shift, dk);
    }
    q[k] = ipow(f.prime, std::min(beta, gamma)) % dk;
  }

  Mat2 matrix(m, crt_combine(entries[0], m), crt_combine(entries[1], m),
              crt_combine(entries[2], m), crt_combine(entries[3], m));
  return {std::move(matrix), Vec2(m, crt_combine(q, m), 0)};
}

std::vector<Vec2> perp_set(const Vec2& v, std::uint64_t scan_cap) {
  const Modulus& m = v.modulus();
  require_scan(m, scan_cap, "perp-set enumeration");
  const std::uint64_t d = m.value();
  std::vector<Vec2> out;
  for (std::uint64_t x = 0; x < d; ++x) {
    const Residue cx = m.mul(v.c(), x);
    for (std::uint64_t y = 0; y < d; ++y) {
      if (cx == m.mul(y, v.b())) out.emplace_back(m, x, y);
    }
  }
  return out;
}

Count perp_cardinality(const Vec2& v) {
  const Modulus& m = v.modulus();
  Count out = m.value();
  const Degree deg = degree(v);
  for (std::size_t k = 0; k < m.rank(); ++k) {
    out = checked_mul(out, checked_pow(m.factor(k).prime, deg.deltas[k]));
  }
  return out;
}

std::vector<Vec2> all_vectors(const Modulus& m, std::uint64_t scan_cap) {
  require_scan(m, scan_cap, "vector enumeration");
  const std::uint64_t d = m.value();
  std::vector<Vec2> out;
  out.reserve(d * d);
  for (std::uint64_t b = 0; b < d; ++b) {
    for (std::uint64_t c = 0; c < d; ++c) out.emplace_back(m, b, c);
  }
  return out;
}

}  // namespace qline
