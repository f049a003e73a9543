#include "sextic/pgl.hpp"

#include <algorithm>
#include <vector>

namespace sextic {

namespace {

Matrix3 multiply(const Matrix3& a, const Matrix3& b) {
  Matrix3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Fp acc = a[0] * Fp(0, a[0].modulus());
      for (int k = 0; k < 3; ++k) acc += a[3 * i + k] * b[3 * k + j];
      out[3 * i + j] = acc;
    }
  return out;
}

Fp det3(const Matrix3& a) {
  return a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
         a[2] * (a[3] * a[7] - a[4] * a[6]);
}

int rank3(Matrix3 a) {
  int rank = 0;
  for (int col = 0, row = 0; col < 3 && row < 3; ++col) {
    int pivot = -1;
    for (int r = row; r < 3; ++r)
      if (!a[3 * r + col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    for (int c = 0; c < 3; ++c) std::swap(a[3 * row + c], a[3 * pivot + c]);
    Fp inv = a[3 * row + col].inv();
    for (int r = 0; r < 3; ++r) {
      if (r == row || a[3 * r + col].is_zero()) continue;
      Fp factor = a[3 * r + col] * inv;
      for (int c = 0; c < 3; ++c) a[3 * r + c] -= factor * a[3 * row + c];
    }
    ++row;
    ++rank;
  }
  return rank;
}

// Dense univariate polynomials, low degree first, trailing zeros trimmed.
using Upoly = std::vector<Fp>;

void trim(Upoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

Upoly poly_mod(Upoly a, const Upoly& b) {
  trim(a);
  const Fp lead_inv = b.back().inv();
  while (a.size() >= b.size()) {
    Fp factor = a.back() * lead_inv;
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    trim(a);
  }
  return a;
}

Upoly poly_gcd(Upoly a, Upoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Upoly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

ProjectiveMap ProjectiveMap::from_matrix(const Matrix3& m) {
  if (det3(m).is_zero()) throw Error(Errc::BadParams, "singular matrix");
  Matrix3 n = m;
  auto first = std::find_if(n.begin(), n.end(), [](Fp x) { return !x.is_zero(); });
  const Fp s = first->inv();
  for (auto& x : n) x *= s;
  return ProjectiveMap(n);
}

ProjectiveMap ProjectiveMap::identity(const PrimeField& f) { return diag(f.one(), f.one(), f.one()); }

ProjectiveMap ProjectiveMap::diag(Fp a, Fp b, Fp c) {
  const Fp z(0, a.modulus());
  return from_matrix({a, z, z, z, b, z, z, z, c});
}

ProjectiveMap ProjectiveMap::monomial(const std::array<int, 3>& source, const std::array<Fp, 3>& scale) {
  const Fp z(0, scale[0].modulus());
  Matrix3 m{z, z, z, z, z, z, z, z, z};
  for (int r = 0; r < 3; ++r) m[static_cast<std::size_t>(3 * r + source[r])] = scale[r];
  return from_matrix(m);
}

bool ProjectiveMap::is_identity() const { return is_diagonal() && m_[4].is_one() && m_[8].is_one(); }

bool ProjectiveMap::is_diagonal() const {
  for (int i = 0; i < 9; ++i)
    if (i % 4 != 0 && !m_[i].is_zero()) return false;
  return true;
}

bool ProjectiveMap::is_monomial() const {
  for (int r = 0; r < 3; ++r) {
    int nz = 0;
    for (int c = 0; c < 3; ++c) nz += !m_[3 * r + c].is_zero();
    if (nz != 1) return false;
  }
  return true;
}

Fp ProjectiveMap::determinant() const { return det3(m_); }

bool operator<(const ProjectiveMap& a, const ProjectiveMap& b) noexcept {
  for (int i = 0; i < 9; ++i)
    if (a.m_[i].value() != b.m_[i].value()) return a.m_[i].value() < b.m_[i].value();
  return false;
}

std::size_t ProjectiveMapHash::operator()(const ProjectiveMap& m) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (Fp x : m.matrix()) {
    h ^= x.value();
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

ProjectiveMap compose(const ProjectiveMap& a, const ProjectiveMap& b) {
  return ProjectiveMap::from_matrix(multiply(a.matrix(), b.matrix()));
}

ProjectiveMap inverse(const ProjectiveMap& m) {
  const Matrix3& a = m.matrix();
  Matrix3 adj;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      // cofactor of (j, i)
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      adj[3 * i + j] = a[3 * r0 + c0] * a[3 * r1 + c1] - a[3 * r0 + c1] * a[3 * r1 + c0];
    }
  return ProjectiveMap::from_matrix(adj);
}

ProjectiveMap power(const ProjectiveMap& m, std::int64_t e) {
  ProjectiveMap base = e < 0 ? inverse(m) : m;
  std::uint64_t n = static_cast<std::uint64_t>(e < 0 ? -e : e);
  Matrix3 id = m.matrix();
  const Fp zero(0, m.modulus()), one(1, m.modulus());
  for (int i = 0; i < 9; ++i) id[i] = (i % 4 == 0) ? one : zero;
  ProjectiveMap acc = ProjectiveMap::from_matrix(id);
  while (n) {
    if (n & 1u) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

ProjectiveMap conjugate(const ProjectiveMap& b, const ProjectiveMap& by) { return by * b * inverse(by); }

int order(const ProjectiveMap& m) {
  ProjectiveMap acc = m;
  for (int n = 1; n <= kOrderBound; ++n) {
    if (acc.is_identity()) return n;
    acc = acc * m;
  }
  throw Error(Errc::OrderOverflow, "order exceeds " + std::to_string(kOrderBound));
}

HomologyInfo is_homology(const ProjectiveMap& m) {
  HomologyInfo info;
  info.period = order(m);
  if (info.period == 1) return info;
  const Matrix3& a = m.matrix();
  const Fp trace = a[0] + a[4] + a[8];
  const Fp c2 = (a[0] * a[4] - a[1] * a[3]) + (a[0] * a[8] - a[2] * a[6]) + (a[4] * a[8] - a[5] * a[7]);
  const Fp det = det3(a);
  const Fp one(1, m.modulus());
  // x^3 - tr x^2 + c2 x - det and its derivative
  Upoly chi{-det, c2, -trace, one};
  Upoly dchi{c2, -(trace + trace), one + one + one};
  Upoly g = poly_gcd(chi, dchi);
  if (g.size() < 2) return info;
  Fp lambda;
  if (g.size() == 2) {
    lambda = -g[0] / g[1];
  } else {
    // triple root: g ~ (x - lambda)^2
    lambda = trace / (one + one + one);
  }
  Matrix3 shifted = a;
  shifted[0] -= lambda;
  shifted[4] -= lambda;
  shifted[8] -= lambda;
  info.homology = rank3(shifted) == 1;
  return info;
}

bool is_intransitive(const ProjectiveMap& m, Var fixed) {
  const int v = static_cast<int>(fixed);
  if (m.at(v, v).is_zero()) return false;
  for (int w = 0; w < 3; ++w) {
    if (w == v) continue;
    if (!m.at(v, w).is_zero() || !m.at(w, v).is_zero()) return false;
  }
  return true;
}

bool coordinate_triangle_stable(std::span<const ProjectiveMap> elements) {
  return std::all_of(elements.begin(), elements.end(), [](const ProjectiveMap& m) { return m.is_monomial(); });
}

std::array<Fp, 3> apply(const ProjectiveMap& m, const std::array<Fp, 3>& v) {
  std::array<Fp, 3> out;
  for (int r = 0; r < 3; ++r) out[r] = m.at(r, 0) * v[0] + m.at(r, 1) * v[1] + m.at(r, 2) * v[2];
  return out;
}

std::string render_scalar(Fp c, const PrimeField& f) {
  if (c.is_zero()) return "0";
  if (c.is_one()) return "1";
  if ((-c).is_one()) return "-1";
  if (auto root = f.as_root_of_unity(c)) {
    std::string s = "zeta(" + std::to_string(root->first) + ")";
    if (root->second != 1) s += "^" + std::to_string(root->second);
    return s;
  }
  return std::to_string(c.value());
}

namespace {

constexpr const char* kVarNames[3] = {"X", "Y", "Z"};

std::string render_linear(const ProjectiveMap& m, int row, const PrimeField& f) {
  std::string out;
  for (int c = 0; c < 3; ++c) {
    Fp a = m.at(row, c);
    if (a.is_zero()) continue;
    std::string coef = render_scalar(a, f);
    bool negative = coef.front() == '-';
    if (negative) coef.erase(0, 1);
    if (!out.empty()) out += negative ? "-" : "+";
    else if (negative) out += "-";
    if (coef != "1") out += coef + "*";
    out += kVarNames[c];
  }
  return out;
}

}  // namespace

std::string render(const ProjectiveMap& m, const PrimeField& f) {
  if (m.is_diagonal()) {
    return "diag(" + render_scalar(m.at(0, 0), f) + "," + render_scalar(m.at(1, 1), f) + "," +
           render_scalar(m.at(2, 2), f) + ")";
  }
  return "[" + render_linear(m, 0, f) + ":" + render_linear(m, 1, f) + ":" + render_linear(m, 2, f) + "]";
}

}  // namespace sextic
