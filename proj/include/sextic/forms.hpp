#pragma once

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "sextic/field.hpp"
#include "sextic/pgl.hpp"

namespace sextic {

struct Monomial {
  int i = 0, j = 0, k = 0;  // exponents of X, Y, Z

  int degree() const noexcept { return i + j + k; }
  int exponent(Var v) const noexcept { return v == Var::X ? i : v == Var::Y ? j : k; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Graded lexicographic with X > Y > Z; "less" means later in print order.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return std::tie(a.i, a.j, a.k) <=> std::tie(b.i, b.j, b.k);
  }
};

/// Position of m among the degree-n monomials in print order (X^n first).
inline int monomial_index(const Monomial& m) {
  const int n = m.degree();
  return (n - m.i) * (n - m.i + 1) / 2 + (n - m.i - m.j);
}

inline int monomial_count(int degree) { return (degree + 1) * (degree + 2) / 2; }

/// All monomials of the given degree in print order.
std::vector<Monomial> monomials(int degree);

/// Homogeneous form of fixed degree with sparse coefficients. Terms are kept
/// in print order (graded lex, X > Y > Z) and zero coefficients never stored.
class TernaryForm {
 public:
  using Term = std::pair<Monomial, Fp>;

  TernaryForm(int degree, std::uint32_t modulus) : degree_(degree), p_(modulus) {}
  TernaryForm(int degree, const PrimeField& f) : TernaryForm(degree, f.p()) {}
  /// Merges repeated monomials and drops zeros. Throws BadParams if a
  /// monomial has the wrong degree.
  TernaryForm(int degree, std::uint32_t modulus, std::vector<Term> terms);
  TernaryForm(int degree, const PrimeField& f, std::vector<Term> terms)
      : TernaryForm(degree, f.p(), std::move(terms)) {}

  int degree() const noexcept { return degree_; }
  std::uint32_t modulus() const noexcept { return p_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Fp coefficient(const Monomial& m) const;

  /// Dense coefficient vector indexed by monomial_index.
  std::vector<Fp> dense() const;

  TernaryForm& operator+=(const TernaryForm& o);
  TernaryForm& operator-=(const TernaryForm& o);
  TernaryForm& operator*=(Fp c);

  friend TernaryForm operator+(TernaryForm a, const TernaryForm& b) { return a += b; }
  friend TernaryForm operator-(TernaryForm a, const TernaryForm& b) { return a -= b; }
  friend TernaryForm operator*(TernaryForm a, Fp c) { return a *= c; }
  friend TernaryForm operator*(Fp c, TernaryForm a) { return a *= c; }
  friend bool operator==(const TernaryForm& a, const TernaryForm& b) noexcept {
    return a.degree_ == b.degree_ && a.p_ == b.p_ && a.terms_ == b.terms_;
  }

 private:
  void normalize();

  int degree_;
  std::uint32_t p_;
  std::vector<Term> terms_;
};

/// Single term c * X^i Y^j Z^k.
TernaryForm monomial_form(const PrimeField& f, Monomial m, Fp c);
inline TernaryForm monomial_form(const PrimeField& f, Monomial m) { return monomial_form(f, m, f.one()); }

TernaryForm product(const TernaryForm& a, const TernaryForm& b);

/// x -> F(M x). substitute(substitute(F, A), B) is proportional to
/// substitute(F, A * B); the scalar comes from normalizing A * B.
TernaryForm substitute(const TernaryForm& F, const ProjectiveMap& M);

std::array<TernaryForm, 3> partials(const TernaryForm& F);

/// c with F == c * G, if one exists with c != 0.
std::optional<Fp> proportional(const TernaryForm& F, const TernaryForm& G);

int degree_in(const TernaryForm& F, Var v);
bool support_subset(const TernaryForm& F, std::span<const Monomial> allowed);
/// All exponents of the masked variables are even.
bool is_in_even_subring(const TernaryForm& F, std::array<bool, 3> mask = {true, true, false});

/// Throws ZeroVector for (0,0,0).
Fp evaluate(const TernaryForm& F, const std::array<Fp, 3>& point);

/// `c*X^a*Y^b*Z^c` terms joined by " + ", coefficients as residues in [0,p).
/// Round-trips through parse_form.
std::string render(const TernaryForm& F);

}  // namespace sextic
