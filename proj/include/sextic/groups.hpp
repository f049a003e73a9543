#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sextic/field.hpp"
#include "sextic/pgl.hpp"

namespace sextic {

inline constexpr std::size_t kClosureCap = 1000;

/// Explicit finite subgroup of PGL_3(F_p). Elements are sorted by the
/// canonical matrix order, so two groups with the same element set compare
/// equal regardless of how they were generated.
class FiniteGroup {
 public:
  FiniteGroup(std::vector<ProjectiveMap> elements, std::vector<ProjectiveMap> generators);

  const std::vector<ProjectiveMap>& elements() const noexcept { return elements_; }
  const std::vector<ProjectiveMap>& generators() const noexcept { return generators_; }
  std::size_t order() const noexcept { return elements_.size(); }
  bool contains(const ProjectiveMap& m) const;

  /// Same element set.
  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) noexcept { return a.elements_ == b.elements_; }

 private:
  std::vector<ProjectiveMap> elements_;
  std::vector<ProjectiveMap> generators_;
};

/// Breadth-first closure. Throws ClosureCapExceeded past `cap` elements.
FiniteGroup closure(std::span<const ProjectiveMap> gens, const PrimeField& f, std::size_t cap = kClosureCap);

/// Closed under products, contains the identity. Inverses follow by finiteness.
bool is_closed(std::span<const ProjectiveMap> elements);

bool is_subgroup(const FiniteGroup& h, const FiniteGroup& g);

/// by * H * by^-1 == G as element sets.
bool conjugates_to(const FiniteGroup& h, const FiniteGroup& g, const ProjectiveMap& by);

FiniteGroup conjugate(const FiniteGroup& g, const ProjectiveMap& by, const PrimeField& f);

enum class CatalogLabel {
  Trivial,
  Rho1Z2,
  Rho1Z2Sq,
  Rho1Z3,
  Rho1Z3Sq,
  Rho2Z3,
  Rho2Z3Sq,
  Rho1S3,
  Rho2S3,
  Rho1Z3xS3,
  Rho1A4,
  Rho2A4,
  He3,
  AutF6,
  AutK6,
  Unknown,
};

inline constexpr CatalogLabel kCatalogLabels[] = {
    CatalogLabel::Trivial, CatalogLabel::Rho1Z2,  CatalogLabel::Rho1Z2Sq,  CatalogLabel::Rho1Z3,
    CatalogLabel::Rho1Z3Sq, CatalogLabel::Rho2Z3, CatalogLabel::Rho2Z3Sq,  CatalogLabel::Rho1S3,
    CatalogLabel::Rho2S3,  CatalogLabel::Rho1Z3xS3, CatalogLabel::Rho1A4, CatalogLabel::Rho2A4,
    CatalogLabel::He3,     CatalogLabel::AutF6,   CatalogLabel::AutK6,
};

/// e.g. "rho1((Z/3)^2)", "Aut(F6)", "unknown".
std::string_view label_name(CatalogLabel l);
std::optional<CatalogLabel> label_from_name(std::string_view name);
/// Abstract isomorphism type, e.g. "(Z/3)^2" for both rho1 and rho2 copies.
std::string_view abstract_group(CatalogLabel l);

/// The displayed generator list of a catalog subgroup.
std::vector<ProjectiveMap> catalog_generators(CatalogLabel l, const PrimeField& f);
FiniteGroup rho(CatalogLabel l, const PrimeField& f);

struct GroupFingerprint {
  std::size_t order = 0;
  bool abelian = true;
  std::map<int, int> order_histogram;  // element order -> count
  std::map<int, int> homology_count;   // period -> homologies; every nontrivial period listed
  std::size_t center_order = 0;

  friend bool operator==(const GroupFingerprint&, const GroupFingerprint&) = default;
};

GroupFingerprint fingerprint(const FiniteGroup& g);

/// Catalog lookup. An exact element-set match wins; otherwise every label
/// with an equal fingerprint is a candidate and `label` is the first one in
/// catalog order. Some labels share a fingerprint because the subgroups are
/// PGL_3-conjugate (rho1(S3) ~ rho2(S3), rho1(A4) ~ rho2(A4)).
struct Identification {
  CatalogLabel label = CatalogLabel::Unknown;
  bool exact = false;
  std::vector<CatalogLabel> candidates;
};

/// Precomputed catalog groups and fingerprints for one field.
class CatalogTable {
 public:
  explicit CatalogTable(const PrimeField& f);

  const FiniteGroup& group(CatalogLabel l) const;
  const GroupFingerprint& print(CatalogLabel l) const;
  Identification identify(const FiniteGroup& g) const;

 private:
  std::vector<FiniteGroup> groups_;
  std::vector<GroupFingerprint> prints_;
};

Identification identify(const FiniteGroup& g, const PrimeField& f);

struct RelationCheck {
  std::string relation;
  bool holds = false;
};

struct PresentationReport {
  std::string name;
  std::vector<RelationCheck> relations;  // displayed relations, in order
  std::vector<RelationCheck> supplementary;  // not part of the verdict
  bool holds = false;                    // all displayed relations hold
};

/// Generators a,b,c,d (fermat6) or a,b (klein6) as displayed.
std::vector<ProjectiveMap> presentation_generators(std::string_view name, const PrimeField& f);
PresentationReport verify_presentation(std::string_view name, const PrimeField& f);
/// Same relations evaluated on caller-supplied generators.
PresentationReport evaluate_presentation(std::string_view name, std::span<const ProjectiveMap> gens,
                                         const PrimeField& f);

}  // namespace sextic
