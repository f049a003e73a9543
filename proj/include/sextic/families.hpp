#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "sextic/field.hpp"
#include "sextic/forms.hpp"
#include "sextic/pgl.hpp"

namespace sextic {

enum class FamilyId {
  Thm1,           // Z^6 + Z^4 L2 + Z^2 L4 + L6
  Thm1Even,       // same, all binary forms in K[X^2, Y^2]
  Thm2,           // Z^6 + Z^3 L3 + L6
  Thm2Special,    // X^6+Y^6+Z^6 + Z^3(a30 X^3 + a03 Y^3) + a33 X^3Y^3
  C1,
  C2,
  C1Prime,
  C1DoublePrime,
  C2Prime,        // (2)(i) normal form
  C1A4,           // C1 with the (1)(iv) coefficients
  C2A4,           // C2 with the (2)(ii) coefficients
  C1LambdaMu,     // Fermat-core normal form with f1, f2
  C2LambdaMu,     // Fermat-core normal form with g1, g2
  Fermat6,
  Klein6,
};

inline constexpr FamilyId kFamilies[] = {
    FamilyId::Thm1,          FamilyId::Thm1Even, FamilyId::Thm2,       FamilyId::Thm2Special, FamilyId::C1,
    FamilyId::C2,            FamilyId::C1Prime,  FamilyId::C1DoublePrime, FamilyId::C2Prime, FamilyId::C1A4,
    FamilyId::C2A4,          FamilyId::C1LambdaMu, FamilyId::C2LambdaMu, FamilyId::Fermat6, FamilyId::Klein6,
};

/// Stable string ids: "thm1", "thm1-even", "c1-double-prime", "c2-lambda-mu", ...
std::string_view family_name(FamilyId id);
std::optional<FamilyId> family_from_name(std::string_view name);

struct NoParams {};
struct Thm1Params {
  TernaryForm l2, l4, l6;  // binary forms in X, Y
};
struct Thm2Params {
  TernaryForm l3, l6;
};
struct Thm2SpecialParams {
  Fp a30, a03, a33;
};
struct C1Params {
  Fp a41, a14, a11, a22, a33, a30, a03;
};
struct C2Params {
  Fp a32, a13, a21, a24, a02, a40;
};
struct C1PrimeParams {
  Fp a41, a33, a22, a12, a03;
};
struct C1DoublePrimeParams {
  int l = 1;  // exponent of zeta_6, l mod 6 not in {0, 3}
  Fp a11, a30;
};
struct C2PrimeParams {
  Fp a40, a32;
  int r = 0;  // exponent of zeta_21
};
/// Ordering k in {0,1,2} selects the k-th listed alternative of both
/// coefficient triples at once; it pairs with the transport map of index k+1.
struct LambdaMuParams {
  Fp lambda, mu;
  int ordering = 0;
};

using FamilyParams = std::variant<NoParams, Thm1Params, Thm2Params, Thm2SpecialParams, C1Params, C2Params,
                                  C1PrimeParams, C1DoublePrimeParams, C2PrimeParams, LambdaMuParams>;

/// Parameter-file keys for a family, in canonical order.
std::vector<std::string> param_keys(FamilyId id);
/// From `key = expr` assignments. Missing alpha keys default to 0, missing
/// `ordering` to 0. Unknown keys and missing required keys are BadParams.
FamilyParams params_from_assignments(FamilyId id, const std::vector<std::pair<std::string, std::string>>& kv,
                                     const PrimeField& f);
FamilyParams params_from_text(FamilyId id, std::string_view text, const PrimeField& f);
/// Inverse of params_from_assignments; scalars as residues, forms rendered.
std::vector<std::pair<std::string, std::string>> params_to_assignments(const FamilyParams& params);

/// The family's defining sextic. Throws BadParams on a shape mismatch, a
/// violated constructor guard, or a vanishing denominator.
TernaryForm build(FamilyId id, const FamilyParams& params, const PrimeField& f);

TernaryForm fermat6(const PrimeField& f);
TernaryForm klein6(const PrimeField& f);

/// The (1)(iv) coefficients for ordering k. Throws BadParams if lambda*mu == 0.
C1Params a4_c1_params(Fp lambda, Fp mu, const PrimeField& f, int ordering = 0);
/// The (2)(ii) coefficients for ordering k.
C2Params a4_c2_params(Fp lambda, Fp mu, const PrimeField& f, int ordering = 0);

struct FCoeffs {
  Fp f1, f2_lm, f2_ml;  // f1(l,m), f2(l,m), f2(m,l)
};
FCoeffs f_coeffs(Fp lambda, Fp mu, const PrimeField& f);

struct GCoeffs {
  Fp g1, g2;
};
/// As printed, with sqrt3 = zeta12 + zeta12^-1. BadParams if the shared
/// denominator l^5 m + l + m^5 vanishes.
GCoeffs g_coeffs(Fp lambda, Fp mu, const PrimeField& f);

/// Fermat-core normal forms.
TernaryForm c1_lambda_mu(const FCoeffs& c, const PrimeField& f);
TernaryForm c2_lambda_mu(const GCoeffs& c, const PrimeField& f);

/// phi_i / psi_i, i = 1..6, exactly as displayed.
ProjectiveMap phi(int index, Fp lambda, Fp mu, const PrimeField& f);
ProjectiveMap psi(int index, Fp lambda, Fp mu, const PrimeField& f);
/// diag(1, zeta21^r', zeta21^(17 r')). BadParams unless 21 | 18r'+r and 21 | 12r'-4r.
ProjectiveMap klein_normalizer(int r, int r_prime, const PrimeField& f);
/// Some r' in 0..20 satisfying both congruences, if any.
std::optional<int> find_klein_normalizer(int r);
/// diag(1, t^2, t) with t = zeta18, so t^3 = zeta6.
ProjectiveMap cor3123_map(const PrimeField& f);

/// One satisfied branch of the decision trees, with whatever data the branch
/// determines (sign, exponent, recovered lambda/mu and ordering).
struct Branch {
  std::string name;  // "generic", "i", "ii-a", "iii", "iv", "even", "special", "extra", ...
  std::map<std::string, std::string> data;
};

struct BranchReport {
  std::vector<Branch> branches;          // empty means generic for the family
  std::map<std::string, bool> predicates;  // guards and side conditions, reported separately
  bool has(std::string_view name) const;
  const Branch* find(std::string_view name) const;
};

BranchReport branch_conditions(FamilyId id, const FamilyParams& params, const PrimeField& f);

/// Terms in which some variable reaches the largest single-variable exponent
/// of F, e.g. X^5Y + Y^5Z + XZ^5 for every C2 member.
TernaryForm core(const TernaryForm& F);

/// Rank test on the 105 x 135 degree-13 Macaulay matrix of the partials.
bool is_smooth(const TernaryForm& F);
/// Rank of that matrix, exposed for tests.
int macaulay_rank(const TernaryForm& F);

}  // namespace sextic
