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

// Arithmetic in Z_d and its prime-power components Z_{p^e}.
//
// Residues are plain std::uint64_t values normalized to [0, m). Exponents
// (alpha, epsilon, delta) are ordinary integers and are never reduced mod d.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace qline {

using Residue = std::uint64_t;

/// Largest modulus accepted anywhere in the library.
inline constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 63) - 1;

/// One factor p^e of d. `value` caches p^e (the component modulus d_k).
struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  std::uint64_t value;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// d together with its factorization into prime powers, primes ascending.
///
/// Cheap to copy: the factorization and CRT coefficients live in a shared
/// immutable block.
class Modulus {
 public:
  /// Factorizes d by trial division. Throws InvalidModulus unless
  /// 2 <= d <= kMaxModulus.
  explicit Modulus(std::uint64_t d);

  std::uint64_t value() const { return rep_->d; }
  std::span<const PrimePower> factors() const { return rep_->factors; }
  std::size_t rank() const { return rep_->factors.size(); }
  const PrimePower& factor(std::size_t k) const { return rep_->factors[k]; }

  bool is_squarefree() const;
  bool is_prime_power() const { return rank() == 1; }

  Residue reduce(std::uint64_t x) const { return x % rep_->d; }
  Residue add(Residue a, Residue b) const;
  Residue sub(Residue a, Residue b) const;
  Residue mul(Residue a, Residue b) const;
  Residue neg(Residue a) const { return a == 0 ? 0 : rep_->d - a; }

  /// CRT idempotent for component k: 1 mod d_k, 0 mod d_j (j != k).
  Residue idempotent(std::size_t k) const { return rep_->idempotents[k]; }

  friend bool operator==(const Modulus& x, const Modulus& y) {
    return x.rep_ == y.rep_ || x.rep_->d == y.rep_->d;
  }

 private:
  struct Rep {
    std::uint64_t d;
    std::vector<PrimePower> factors;
    std::vector<Residue> idempotents;
  };
  std::shared_ptr<const Rep> rep_;
};

/// a = unit * p^exponent inside Z_{p^e}; zero is stored as 1 * p^e.
struct PowerRep {
  Residue unit;
  unsigned exponent;

  friend bool operator==(const PowerRep&, const PowerRep&) = default;
};

/// Component residues x mod d_k, in factor order.
struct CrtTuple {
  std::vector<Residue> components;

  friend bool operator==(const CrtTuple&, const CrtTuple&) = default;
};

Modulus factorize(std::uint64_t d);

Residue mul_mod(Residue a, Residue b, std::uint64_t m);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// p^k as an ordinary integer; caller guarantees it fits.
std::uint64_t ipow(std::uint64_t p, unsigned k);

bool is_unit(Residue a, const Modulus& m);
bool is_unit(Residue a, std::uint64_t m);

/// Multiplicative inverse mod m. Throws NonUnit when gcd(a, m) != 1.
Residue inverse(Residue a, const Modulus& m);
Residue inverse(Residue a, std::uint64_t m);

/// Power representation of a in Z_{p^e}. Requires a < p^e.
PowerRep power_rep(Residue a, std::uint64_t p, unsigned e);

/// p-adic valuation of a inside Z_{p^e}, i.e. power_rep(a, p, e).exponent.
unsigned valuation(Residue a, std::uint64_t p, unsigned e);

/// Annihilator of p^alpha in Z_{p^e}: {w p^(e - alpha)}, ascending, size
/// p^alpha.
std::vector<Residue> annihilator(unsigned alpha, std::uint64_t p, unsigned e);

CrtTuple crt_split(Residue x, const Modulus& m);
Residue crt_combine(std::span<const Residue> components, const Modulus& m);
inline Residue crt_combine(const CrtTuple& t, const Modulus& m) {
  return crt_combine(t.components, m);
}

}  // namespace qline
