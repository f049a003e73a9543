#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <utility>

#include "sextic/error.hpp"

namespace sextic {

/// Residue class modulo a prime p < 2^31. The modulus travels with the value
/// so that mixed-field arithmetic is caught instead of silently wrapping.
class Fp {
 public:
  Fp() = default;
  Fp(std::uint32_t value, std::uint32_t modulus) : v_(value % modulus), p_(modulus) {}

  std::uint32_t value() const noexcept { return v_; }
  std::uint32_t modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return v_ == 0; }
  bool is_one() const noexcept { return v_ == 1; }

  Fp operator-() const noexcept { return Fp(v_ == 0 ? 0 : p_ - v_, p_, Raw{}); }

  Fp& operator+=(Fp o) noexcept {
    std::uint32_t s = v_ + o.v_;
    if (s >= p_) s -= p_;
    v_ = s;
    return *this;
  }
  Fp& operator-=(Fp o) noexcept {
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
    return *this;
  }
  Fp& operator*=(Fp o) noexcept {
    v_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % p_);
    return *this;
  }
  Fp& operator/=(Fp o) { return *this *= o.inv(); }

  friend Fp operator+(Fp a, Fp b) noexcept { return a += b; }
  friend Fp operator-(Fp a, Fp b) noexcept { return a -= b; }
  friend Fp operator*(Fp a, Fp b) noexcept { return a *= b; }
  friend Fp operator/(Fp a, Fp b) { return a /= b; }

  friend bool operator==(Fp a, Fp b) noexcept { return a.v_ == b.v_ && a.p_ == b.p_; }
  friend auto operator<=>(Fp a, Fp b) noexcept { return a.v_ <=> b.v_; }

  /// Square-and-multiply; negative exponents go through the inverse.
  Fp pow(std::int64_t e) const;
  /// Throws DivisionByZero on zero.
  Fp inv() const;

 private:
  struct Raw {};
  Fp(std::uint32_t value, std::uint32_t modulus, Raw) : v_(value), p_(modulus) {}

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 1;
};

/// F_p with 252 | p - 1, so every root of unity of order dividing 252 exists.
/// All roots of unity derive from the single smallest primitive root g, which
/// keeps identities such as zeta(n)^(n/m) == zeta(m) exact.
class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultPrime = 757;
  static constexpr std::uint32_t kRootOrder = 252;

  /// Throws NotPrime, BadCongruence or TooSmall.
  explicit PrimeField(std::uint64_t p = kDefaultPrime);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t generator() const noexcept { return g_; }

  Fp operator()(std::int64_t v) const;
  Fp zero() const { return Fp(0, p_); }
  Fp one() const { return Fp(1, p_); }

  /// zeta_n := g^((p-1)/n). Throws BadOrder unless n | p - 1.
  Fp root_of_unity(std::uint32_t n) const;
  Fp zeta(std::uint32_t n, std::int64_t k = 1) const { return root_of_unity(n).pow(k); }
  /// zeta_12 + zeta_12^-1, a fixed square root of 3.
  Fp sqrt3() const;
  /// Tonelli-Shanks; empty for non-residues.
  std::optional<Fp> sqrt(Fp a) const;

  /// If x is a root of unity of order n | 252, returns (n, k) with
  /// x == zeta(n)^k and gcd(k, n) == 1, k in (-n/2, n/2].
  std::optional<std::pair<std::uint32_t, std::int64_t>> as_root_of_unity(Fp x) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
  std::uint32_t g_;
};

PrimeField make_field(std::uint64_t p);

bool is_prime(std::uint64_t n);

}  // namespace sextic
