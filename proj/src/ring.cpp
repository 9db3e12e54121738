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

#include "qline/ring.hpp"

#include <algorithm>
#include <string>

#include "qline/error.hpp"

namespace qline {

namespace {

std::vector<PrimePower> trial_divide(std::uint64_t d) {
  std::vector<PrimePower> out;
  auto strip = [&](std::uint64_t p) {
    if (d % p != 0) return;
    PrimePower f{p, 0, 1};
    while (d % p == 0) {
      d /= p;
      ++f.exponent;
      f.value *= p;
    }
    out.push_back(f);
  };
  strip(2);
  strip(3);
  // 6k +- 1 wheel; p <= d / p avoids overflow of p * p.
  for (std::uint64_t p = 5; p <= d / p; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (d > 1) out.push_back({d, 1, d});
  return out;
}

}  // namespace

Modulus::Modulus(std::uint64_t d) {
  if (d < 2 || d > kMaxModulus) {
    throw InvalidModulus("modulus must satisfy 2 <= d <= 2^63-1, got " +
                         std::to_string(d));
  }
  Rep rep;
  rep.d = d;
  rep.factors = trial_divide(d);
  for (const auto& f : rep.factors) {
    const std::uint64_t cofactor = d / f.value;
    // cofactor * (cofactor^-1 mod d_k) is 1 mod d_k and 0 mod every other d_j.
    const Residue inv = inverse(cofactor % f.value, f.value);
    rep.idempotents.push_back(mul_mod(cofactor, inv, d));
  }
  rep_ = std::make_shared<const Rep>(std::move(rep));
}

bool Modulus::is_squarefree() const {
  return std::all_of(rep_->factors.begin(), rep_->factors.end(),
                     [](const PrimePower& f) { return f.exponent == 1; });
}

Residue Modulus::add(Residue a, Residue b) const {
  const std::uint64_t d = rep_->d;
  // a, b < d < 2^63 so the sum cannot wrap.
  const std::uint64_t s = a + b;
  return s >= d ? s - d : s;
}

Residue Modulus::sub(Residue a, Residue b) const {
  return a >= b ? a - b : rep_->d - (b - a);
}

Residue Modulus::mul(Residue a, Residue b) const {
  return mul_mod(a, b, rep_->d);
}

Modulus factorize(std::uint64_t d) { return Modulus(d); }

Residue mul_mod(Residue a, Residue b, std::uint64_t m) {
  return static_cast<Residue>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t ipow(std::uint64_t p, unsigned k) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < k; ++i) out *= p;
  return out;
}

bool is_unit(Residue a, std::uint64_t m) { return gcd(a % m, m) == 1; }

bool is_unit(Residue a, const Modulus& m) { return is_unit(a, m.value()); }

Residue inverse(Residue a, std::uint64_t m) {
  __int128 r0 = m, r1 = a % m;
  __int128 t0 = 0, t1 = 1;
  while (r1 != 0) {
    const __int128 q = r0 / r1;
    __int128 tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 != 1) {
    throw NonUnit(std::to_string(a) + " has no inverse modulo " +
                  std::to_string(m));
  }
  if (t0 < 0) t0 += m;
  return static_cast<Residue>(t0 % m);
}

Residue inverse(Residue a, const Modulus& m) { return inverse(a, m.value()); }

PowerRep power_rep(Residue a, std::uint64_t p, unsigned e) {
  if (a == 0) return {1, e};
  unsigned alpha = 0;
  while (a % p == 0) {
    a /= p;
    ++alpha;
  }
  return {a, alpha};
}

unsigned valuation(Residue a, std::uint64_t p, unsigned e) {
  if (a == 0) return e;
  unsigned alpha = 0;
  while (a % p == 0) {
    a /= p;
    ++alpha;
  }
  return alpha;
}

std::vector<Residue> annihilator(unsigned alpha, std::uint64_t p, unsigned e) {
  const std::uint64_t step = ipow(p, e - alpha);
  const std::uint64_t count = ipow(p, alpha);
  std::vector<Residue> out;
  out.reserve(count);
  // w = p^alpha gives p^e == 0; listing w = 0..p^alpha-1 yields the same set
  // already in ascending order.
  for (std::uint64_t w = 0; w < count; ++w) out.push_back(w * step);
  return out;
}

CrtTuple crt_split(Residue x, const Modulus& m) {
  CrtTuple t;
  t.components.reserve(m.rank());
  for (const auto& f : m.factors()) t.components.push_back(x % f.value);
  return t;
}

Residue crt_combine(std::span<const Residue> components, const Modulus& m) {
  Residue x = 0;
  for (std::size_t k = 0; k < m.rank(); ++k) {
    x = m.add(x, m.mul(components[k] % m.factor(k).value, m.idempotent(k)));
  }
  return x;
}

}  // namespace qline
