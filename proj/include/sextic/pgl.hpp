#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <string>

#include "sextic/field.hpp"

namespace sextic {

enum class Var { X = 0, Y = 1, Z = 2 };

using Matrix3 = std::array<Fp, 9>;  // row-major

/// Element of PGL_3(F_p). The stored matrix is scaled so that its first
/// nonzero entry (row-major) is 1, which makes equality and hashing exact.
///
/// Row r lists the coefficients of the r-th coordinate of the image, so
/// `[Y:Z:X]` has rows (0,1,0), (0,0,1), (1,0,0). Composition is the matrix
/// product: (a * b)(x) = a(b(x)).
class ProjectiveMap {
 public:
  /// Throws BadParams on a singular matrix.
  static ProjectiveMap from_matrix(const Matrix3& m);
  static ProjectiveMap identity(const PrimeField& f);
  static ProjectiveMap diag(Fp a, Fp b, Fp c);
  /// Row r is scale[r] * x_{source[r]}; e.g. source = {1,2,0} is [Y:Z:X].
  static ProjectiveMap monomial(const std::array<int, 3>& source, const std::array<Fp, 3>& scale);

  const Matrix3& matrix() const noexcept { return m_; }
  Fp at(int row, int col) const { return m_[static_cast<std::size_t>(3 * row + col)]; }
  std::uint32_t modulus() const noexcept { return m_[0].modulus(); }

  bool is_identity() const;
  bool is_diagonal() const;
  /// Exactly one nonzero entry in every row.
  bool is_monomial() const;

  Fp determinant() const;

  friend bool operator==(const ProjectiveMap& a, const ProjectiveMap& b) noexcept { return a.m_ == b.m_; }
  friend bool operator<(const ProjectiveMap& a, const ProjectiveMap& b) noexcept;

 private:
  explicit ProjectiveMap(const Matrix3& m) : m_(m) {}
  Matrix3 m_;
};

struct ProjectiveMapHash {
  std::size_t operator()(const ProjectiveMap& m) const noexcept;
};

ProjectiveMap compose(const ProjectiveMap& a, const ProjectiveMap& b);
inline ProjectiveMap operator*(const ProjectiveMap& a, const ProjectiveMap& b) { return compose(a, b); }
ProjectiveMap inverse(const ProjectiveMap& m);
ProjectiveMap power(const ProjectiveMap& m, std::int64_t e);
/// a * b * a^-1
ProjectiveMap conjugate(const ProjectiveMap& b, const ProjectiveMap& by);

inline constexpr int kOrderBound = 252 * 3;

/// Smallest n >= 1 with m^n == 1. Throws OrderOverflow past kOrderBound.
int order(const ProjectiveMap& m);

struct HomologyInfo {
  bool homology = false;
  int period = 1;
};

/// Conjugate to diag(1,1,zeta_n)? Detected as a double root lambda of the
/// characteristic polynomial over F_p with rank(M - lambda I) == 1.
HomologyInfo is_homology(const ProjectiveMap& m);

/// Block shape with `fixed` isolated: row and column of `fixed` vanish off
/// the diagonal.
bool is_intransitive(const ProjectiveMap& m, Var fixed);

/// Every element permutes the coordinate vertices, i.e. is monomial.
bool coordinate_triangle_stable(std::span<const ProjectiveMap> elements);

/// Image of a column vector under the matrix.
std::array<Fp, 3> apply(const ProjectiveMap& m, const std::array<Fp, 3>& v);

/// Bracket notation, e.g. `[Y:Z:X]`, `diag(1,zeta(3),zeta(3)^-1)`,
/// `[zeta(6)^-1*Y:Z:X]`; parseable by parse_map.
std::string render(const ProjectiveMap& m, const PrimeField& f);

/// Root-of-unity aware scalar rendering used by render().
std::string render_scalar(Fp c, const PrimeField& f);

}  // namespace sextic
