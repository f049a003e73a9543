#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sextic/families.hpp"
#include "sextic/groups.hpp"

namespace sextic {

/// Candidate transformations for the invariance scan.
///
/// The monomial pool P*diag(1,a,b), a,b in mu_252, is enumerated on the fly
/// (6 * 252^2 = 381024 maps). The extra pool holds T*h*T^-1 for the twelve
/// transports phi_i, psi_i at a given (lambda, mu) and h in rho1(A4) u rho2(A4).
class CandidateCatalog {
 public:
  explicit CandidateCatalog(const PrimeField& f);
  CandidateCatalog(const PrimeField& f, Fp lambda, Fp mu);

  const PrimeField& field() const noexcept { return f_; }
  static constexpr std::size_t kRootOrder = 252;
  std::size_t monomial_pool_size() const noexcept { return 6 * kRootOrder * kRootOrder; }
  const std::vector<ProjectiveMap>& extras() const noexcept { return extras_; }
  /// mu_252 as powers of the field generator.
  const std::vector<Fp>& roots() const noexcept { return roots_; }

 private:
  PrimeField f_;
  std::vector<Fp> roots_;
  std::vector<ProjectiveMap> extras_;
};

struct ScanResult {
  FiniteGroup group;
  std::size_t examined = 0;     // candidates tested
  bool closure_added = false;   // found set was not closed; closure verified and taken
};

/// Every catalog element M with substitute(F, M) proportional to F.
/// Throws NotSmooth, or NotClosed if the closure of the found set contains a
/// non-automorphism.
ScanResult stabilizer_in_catalog(const TernaryForm& F, const CandidateCatalog& cat);
inline FiniteGroup stabilizer(const TernaryForm& F, const CandidateCatalog& cat) {
  return stabilizer_in_catalog(F, cat).group;
}

struct Prediction {
  CatalogLabel label = CatalogLabel::Unknown;
  std::vector<ProjectiveMap> witnesses;  // generators of the predicted group in F's coordinates
  BranchReport branches;
  std::vector<std::string> notes;        // overlaps and other ambiguities
  /// (lambda, mu) needed for transported witnesses, if any.
  std::optional<std::pair<Fp, Fp>> lambda_mu;
};

/// Group assigned by the decision trees. Throws GuardViolated on a failed guard.
Prediction predict(FamilyId id, const FamilyParams& params, const PrimeField& f);

struct AutReport {
  FiniteGroup stabilizer;
  CatalogLabel label = CatalogLabel::Unknown;
  CatalogLabel predicted = CatalogLabel::Unknown;
  bool agrees = false;
  Identification identification{};
  GroupFingerprint fingerprint{};
  Prediction prediction{};
  std::vector<ProjectiveMap> verified_witnesses{};
  std::vector<ProjectiveMap> failed_witnesses{};
  std::vector<ProjectiveMap> high_order{};  // stabilizer elements of order > 3
  bool degenerate = false;                // high_order nonempty on a family where it should not be
  bool closure_added = false;
  std::size_t examined = 0;
};

/// Build, check smoothness (NotSmooth), scan, identify and compare.
AutReport classify(FamilyId id, const FamilyParams& params, const PrimeField& f);
/// Same, for an explicit form with a caller-supplied catalog and prediction.
AutReport classify_form(const TernaryForm& F, const CandidateCatalog& cat, const Prediction& prediction,
                        bool allow_high_order, const PrimeField& f);

enum class TransportCase { C1A4, C2A4, Cor3123 };

struct TransportReport {
  TransportCase which = TransportCase::C1A4;
  Fp lambda, mu;
  int ordering = 0;
  TernaryForm image;                 // transported form
  std::optional<TernaryForm> target{};  // displayed normal form, if any
  bool proportional = false;         // image ~ target (diagnostic)
  std::vector<Monomial> mismatched{};  // monomials whose ratio differs from the X^6 ratio
  bool invariant = false;            // image invariant under the expected group (binding)
  std::vector<Fp> core_coefficients{};  // X^6, Y^6, Z^6 of the image, scaled so X^6 -> 1
  bool core_matches = false;         // cor3123: (1, zeta3^-1, zeta3)
  bool binding() const { return which == TransportCase::Cor3123 ? core_matches && invariant : invariant; }
};

/// c1a4: phi_{k+1} applied to C1 with the (1)(iv) coefficients vs the f-normal form,
/// binding check invariance under rho1(A4).
/// c2a4: psi_{k+1} applied to C2 with the (2)(ii) coefficients vs the g-normal form,
/// binding check invariance under rho2(A4).
/// cor3123: the psi_1-image of the c2a4 curve moved by cor3123_map; binding check
/// core (1, zeta3^-1, zeta3) and invariance under rho1(A4).
TransportReport verify_transport(TransportCase which, Fp lambda, Fp mu, const PrimeField& f, int ordering = 0);
std::string_view transport_name(TransportCase c);

struct VertexSample {
  FamilyId family;
  FamilyParams params;
  CatalogLabel label = CatalogLabel::Unknown;
  GroupFingerprint fingerprint;
  std::array<Fp, 3> vertex_values;  // F at (1:0:0), (0:1:0), (0:0:1)
  bool guard = true;                // 1 + a11 + a30 != 0 for C1'' samples
  int fixed_triangles_on_curve = 0;  // triangles of fixed points of order-3 subgroups lying on C
};

struct EvidenceReport {
  std::vector<VertexSample> c2_samples;      // C2 generic and (2)(i)
  std::vector<VertexSample> c1pp_samples;    // C1''
  bool a_holds = false;  // every C2 sample with label rho2(Z/3) or rho2((Z/3)^2) has all vertices on C
  bool b_holds = false;  // every guarded C1'' sample has a vertex off C
  bool c_holds = false;  // C2 (2)(i) and C1'' samples share label and fingerprint
  bool holds() const { return a_holds && b_holds && c_holds; }
};

EvidenceReport fake_evidence(const PrimeField& f, int samples, std::uint64_t seed);

struct StrataWitness {
  std::string normal_form;  // "C1", "C2", "C'", "C1''", "C2'", "C1lm", "C2lm", ...
  std::string source;       // sampler key
  FamilyId family;
  FamilyParams params;
  TernaryForm form;
  CatalogLabel label = CatalogLabel::Unknown;
};

struct StrataComponent {
  GroupFingerprint fingerprint;
  std::vector<CatalogLabel> labels;  // distinct labels seen
  std::vector<StrataWitness> witnesses;
  std::vector<std::string> normal_forms;  // distinct, sorted
  bool fake = false;                      // witnessed by two or more normal forms
};

struct StrataTable {
  std::map<std::string, std::vector<StrataComponent>> strata;  // abstract group -> components
  std::map<std::string, int> counts() const;
};

/// Witnesses come from the samplers; throws WitnessNotFound if a source yields
/// no smooth non-degenerate agreeing sample within budget.
StrataTable strata_table(const PrimeField& f, int samples, std::uint64_t seed);

/// Fixed points in P^2(F_p) of a projective map.
std::vector<std::array<Fp, 3>> fixed_points(const ProjectiveMap& m, const PrimeField& f);

}  // namespace sextic
