#pragma once

// Independent reference implementations. Nothing here calls into the
// library's arithmetic beyond reading residues and exponents out of its types.

#include <array>
#include <cstdint>
#include <set>
#include <tuple>
#include <vector>

#include "sextic/forms.hpp"
#include "sextic/pgl.hpp"

namespace oracle {

using u64 = std::uint64_t;

inline u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Multiplicative order by repeated multiplication.
inline u64 order_mod(u64 a, u64 p) {
  u64 x = a % p, n = 1;
  while (x != 1) {
    x = x * a % p;
    ++n;
  }
  return n;
}

inline u64 smallest_primitive_root(u64 p) {
  for (u64 g = 2; g < p; ++g)
    if (order_mod(g, p) == p - 1) return g;
  return 0;
}

inline u64 inverse(u64 a, u64 p) { return powmod(a, p - 2, p); }

// ---- raw 3x3 matrices mod p, normalized projectively ----

using Mat = std::array<u64, 9>;

inline Mat raw(const sextic::ProjectiveMap& m) {
  Mat r{};
  for (int i = 0; i < 9; ++i) r[i] = m.matrix()[i].value();
  return r;
}

inline Mat normalize(Mat m, u64 p) {
  u64 lead = 0;
  for (u64 x : m)
    if (x) {
      lead = x;
      break;
    }
  const u64 s = inverse(lead, p);
  for (auto& x : m) x = x * s % p;
  return m;
}

inline Mat mul(const Mat& a, const Mat& b, u64 p) {
  Mat c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      u64 s = 0;
      for (int k = 0; k < 3; ++k) s += a[3 * i + k] * b[3 * k + j] % p;
      c[3 * i + j] = s % p;
    }
  return normalize(c, p);
}

inline std::set<Mat> closure(const std::vector<Mat>& gens, u64 p) {
  Mat id{1, 0, 0, 0, 1, 0, 0, 0, 1};
  std::set<Mat> seen{id};
  std::vector<Mat> frontier{id};
  while (!frontier.empty()) {
    std::vector<Mat> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Mat y = mul(x, normalize(g, p), p);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier.swap(next);
  }
  return seen;
}

inline int order(const Mat& m, u64 p) {
  const Mat id{1, 0, 0, 0, 1, 0, 0, 0, 1};
  Mat x = normalize(m, p);
  int n = 1;
  while (x != id) {
    x = mul(x, m, p);
    ++n;
  }
  return n;
}

// ---- forms ----

inline u64 eval(const sextic::TernaryForm& F, u64 x, u64 y, u64 z) {
  const u64 p = F.modulus();
  u64 s = 0;
  for (const auto& [m, c] : F.terms())
    s = (s + c.value() * powmod(x, m.i, p) % p * powmod(y, m.j, p) % p * powmod(z, m.k, p)) % p;
  return s;
}

// F(M v) evaluated pointwise, without forming the substituted polynomial.
inline u64 eval_after(const sextic::TernaryForm& F, const sextic::ProjectiveMap& M, u64 x, u64 y, u64 z) {
  const u64 p = F.modulus();
  const Mat a = raw(M);
  const u64 v[3] = {x, y, z};
  u64 w[3];
  for (int r = 0; r < 3; ++r) w[r] = (a[3 * r] * v[0] + a[3 * r + 1] * v[1] + a[3 * r + 2] * v[2]) % p;
  return eval(F, w[0], w[1], w[2]);
}

// Brute-force search for a common zero of the three partials over P^2(F_p).
// Points (x:y:1) are swept one line y = const at a time with Horner in x;
// by Euler's identity a common zero of the partials also lies on the curve.
inline bool has_singular_point(const sextic::TernaryForm& F) {
  const u64 p = F.modulus();
  const int d = F.degree();
  using Term = std::tuple<int, int, int, u64>;  // exponents of X, Y, Z and coefficient
  std::array<std::vector<Term>, 3> grad;
  for (const auto& [m, c] : F.terms()) {
    const int e[3] = {m.i, m.j, m.k};
    for (int v = 0; v < 3; ++v) {
      if (e[v] == 0) continue;
      int f[3] = {e[0], e[1], e[2]};
      --f[v];
      grad[v].emplace_back(f[0], f[1], f[2], c.value() * static_cast<u64>(e[v]) % p);
    }
  }
  auto eval_grad = [&](u64 x, u64 y, u64 z) {
    for (const auto& g : grad) {
      u64 s = 0;
      for (const auto& [i, j, k, c] : g)
        s = (s + c * powmod(x, i, p) % p * powmod(y, j, p) % p * powmod(z, k, p)) % p;
      if (s) return false;
    }
    return true;
  };
  if (eval_grad(1, 0, 0)) return true;
  for (u64 x = 0; x < p; ++x)
    if (eval_grad(x, 1, 0)) return true;

  std::vector<u64> ypow(static_cast<std::size_t>(d));
  std::array<std::vector<u64>, 3> line;
  for (auto& l : line) l.assign(static_cast<std::size_t>(d), 0);
  for (u64 y = 0; y < p; ++y) {
    ypow[0] = 1;
    for (int e = 1; e < d; ++e) ypow[e] = ypow[e - 1] * y % p;
    for (int v = 0; v < 3; ++v) {
      std::fill(line[v].begin(), line[v].end(), 0);
      for (const auto& [i, j, k, c] : grad[v]) line[v][i] = (line[v][i] + c * ypow[j]) % p;
    }
    auto horner = [&](const std::vector<u64>& c, u64 x) {
      u64 s = 0;
      for (int e = d - 1; e >= 0; --e) s = (s * x + c[e]) % p;
      return s;
    };
    for (u64 x = 0; x < p; ++x)
      if (horner(line[0], x) == 0 && horner(line[1], x) == 0 && horner(line[2], x) == 0) return true;
  }
  return false;
}

}  // namespace oracle
