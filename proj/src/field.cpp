#include "sextic/field.hpp"

#include <numeric>
#include <string>
#include <vector>

namespace sextic {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::BadCongruence: return "BadCongruence";
    case Errc::TooSmall: return "TooSmall";
    case Errc::BadOrder: return "BadOrder";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::OrderOverflow: return "OrderOverflow";
    case Errc::ClosureCapExceeded: return "ClosureCapExceeded";
    case Errc::BadParams: return "BadParams";
    case Errc::NotSmooth: return "NotSmooth";
    case Errc::NotClosed: return "NotClosed";
    case Errc::GuardViolated: return "GuardViolated";
    case Errc::WitnessNotFound: return "WitnessNotFound";
    case Errc::Parse: return "ParseError";
  }
  return "Unknown";
}

Fp Fp::pow(std::int64_t e) const {
  if (e < 0) return inv().pow(-e);
  Fp base = *this;
  Fp acc(1 % p_, p_);
  auto n = static_cast<std::uint64_t>(e);
  while (n) {
    if (n & 1u) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

Fp Fp::inv() const {
  if (v_ == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  // Fermat: a^(p-2).
  return pow(static_cast<std::int64_t>(p_) - 2);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

PrimeField::PrimeField(std::uint64_t p) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if ((p - 1) % kRootOrder != 0)
    throw Error(Errc::BadCongruence, "252 does not divide " + std::to_string(p) + " - 1");
  if (p <= 21) throw Error(Errc::TooSmall, "characteristic must exceed 21");
  if (p >= (1ull << 31)) throw Error(Errc::BadParams, "modulus must be below 2^31");
  p_ = static_cast<std::uint32_t>(p);

  const auto factors = prime_factors(p - 1);
  for (std::uint32_t g = 2; g < p_; ++g) {
    Fp cand(g, p_);
    bool generates = true;
    for (auto q : factors) {
      if (cand.pow(static_cast<std::int64_t>((p - 1) / q)).is_one()) {
        generates = false;
        break;
      }
    }
    if (generates) {
      g_ = g;
      return;
    }
  }
  throw Error(Errc::NotPrime, "no primitive root found");  // unreachable for primes
}

Fp PrimeField::operator()(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Fp(static_cast<std::uint32_t>(r), p_);
}

Fp PrimeField::root_of_unity(std::uint32_t n) const {
  if (n == 0 || (p_ - 1) % n != 0)
    throw Error(Errc::BadOrder, "no primitive root of unity of order " + std::to_string(n));
  return Fp(g_, p_).pow((p_ - 1) / n);
}

Fp PrimeField::sqrt3() const {
  Fp z = root_of_unity(12);
  return z + z.inv();
}

std::optional<Fp> PrimeField::sqrt(Fp a) const {
  if (a.is_zero()) return a;
  const std::int64_t half = (p_ - 1) / 2;
  if (!a.pow(half).is_one()) return std::nullopt;
  // p - 1 = q * 2^s with q odd.
  std::uint32_t q = p_ - 1;
  int s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  Fp z(g_, p_);  // a primitive root is a non-residue
  Fp c = z.pow(q);
  Fp x = a.pow((q + 1) / 2);
  Fp t = a.pow(q);
  int m = s;
  while (!t.is_one()) {
    int i = 0;
    Fp t2 = t;
    while (!t2.is_one()) {
      t2 *= t2;
      ++i;
    }
    Fp b = c;
    for (int j = 0; j < m - i - 1; ++j) b *= b;
    x *= b;
    c = b * b;
    t *= c;
    m = i;
  }
  return x;
}

std::optional<std::pair<std::uint32_t, std::int64_t>> PrimeField::as_root_of_unity(Fp x) const {
  if (x.is_zero() || !x.pow(kRootOrder).is_one()) return std::nullopt;
  std::uint32_t order = 0;
  for (std::uint32_t n = 1; n <= kRootOrder; ++n) {
    if (kRootOrder % n == 0 && x.pow(n).is_one()) {
      order = n;
      break;
    }
  }
  const Fp z = root_of_unity(order);
  Fp acc = one();
  for (std::int64_t k = 0; k < order; ++k) {
    if (acc == x) {
      std::int64_t sym = k > order / 2 ? k - order : k;
      return std::make_pair(order, sym);
    }
    acc *= z;
  }
  return std::nullopt;
}

PrimeField make_field(std::uint64_t p) { return PrimeField(p); }

}  // namespace sextic
