#include "sextic/groups.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace sextic {

FiniteGroup::FiniteGroup(std::vector<ProjectiveMap> elements, std::vector<ProjectiveMap> generators)
    : elements_(std::move(elements)), generators_(std::move(generators)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool FiniteGroup::contains(const ProjectiveMap& m) const {
  return std::binary_search(elements_.begin(), elements_.end(), m);
}

FiniteGroup closure(std::span<const ProjectiveMap> gens, const PrimeField& f, std::size_t cap) {
  std::unordered_set<ProjectiveMap, ProjectiveMapHash> seen;
  std::vector<ProjectiveMap> order;
  std::deque<ProjectiveMap> queue;
  const auto id = ProjectiveMap::identity(f);
  seen.insert(id);
  order.push_back(id);
  queue.push_back(id);
  while (!queue.empty()) {
    ProjectiveMap x = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      ProjectiveMap y = x * g;
      if (seen.insert(y).second) {
        if (seen.size() > cap)
          throw Error(Errc::ClosureCapExceeded, "closure exceeds " + std::to_string(cap) + " elements");
        order.push_back(y);
        queue.push_back(y);
      }
    }
  }
  return FiniteGroup(std::move(order), std::vector<ProjectiveMap>(gens.begin(), gens.end()));
}

bool is_closed(std::span<const ProjectiveMap> elements) {
  if (elements.empty()) return false;
  std::unordered_set<ProjectiveMap, ProjectiveMapHash> set(elements.begin(), elements.end());
  bool has_identity = std::any_of(elements.begin(), elements.end(), [](const ProjectiveMap& m) { return m.is_identity(); });
  if (!has_identity) return false;
  for (const auto& a : elements)
    for (const auto& b : elements)
      if (!set.count(a * b)) return false;
  return true;
}

bool is_subgroup(const FiniteGroup& h, const FiniteGroup& g) {
  return std::all_of(h.elements().begin(), h.elements().end(), [&](const ProjectiveMap& m) { return g.contains(m); });
}

FiniteGroup conjugate(const FiniteGroup& g, const ProjectiveMap& by, const PrimeField& f) {
  (void)f;
  std::vector<ProjectiveMap> elems, gens;
  const ProjectiveMap inv = inverse(by);
  for (const auto& m : g.elements()) elems.push_back(by * m * inv);
  for (const auto& m : g.generators()) gens.push_back(by * m * inv);
  return FiniteGroup(std::move(elems), std::move(gens));
}

bool conjugates_to(const FiniteGroup& h, const FiniteGroup& g, const ProjectiveMap& by) {
  if (h.order() != g.order()) return false;
  const ProjectiveMap inv = inverse(by);
  return std::all_of(h.elements().begin(), h.elements().end(),
                     [&](const ProjectiveMap& m) { return g.contains(by * m * inv); });
}

std::string_view label_name(CatalogLabel l) {
  switch (l) {
    case CatalogLabel::Trivial: return "trivial";
    case CatalogLabel::Rho1Z2: return "rho1(Z/2)";
    case CatalogLabel::Rho1Z2Sq: return "rho1((Z/2)^2)";
    case CatalogLabel::Rho1Z3: return "rho1(Z/3)";
    case CatalogLabel::Rho1Z3Sq: return "rho1((Z/3)^2)";
    case CatalogLabel::Rho2Z3: return "rho2(Z/3)";
    case CatalogLabel::Rho2Z3Sq: return "rho2((Z/3)^2)";
    case CatalogLabel::Rho1S3: return "rho1(S3)";
    case CatalogLabel::Rho2S3: return "rho2(S3)";
    case CatalogLabel::Rho1Z3xS3: return "rho1(Z/3xS3)";
    case CatalogLabel::Rho1A4: return "rho1(A4)";
    case CatalogLabel::Rho2A4: return "rho2(A4)";
    case CatalogLabel::He3: return "He3";
    case CatalogLabel::AutF6: return "Aut(F6)";
    case CatalogLabel::AutK6: return "Aut(K6)";
    case CatalogLabel::Unknown: return "unknown";
  }
  return "unknown";
}

std::optional<CatalogLabel> label_from_name(std::string_view name) {
  for (auto l : kCatalogLabels)
    if (label_name(l) == name) return l;
  if (name == "unknown") return CatalogLabel::Unknown;
  return std::nullopt;
}

std::string_view abstract_group(CatalogLabel l) {
  switch (l) {
    case CatalogLabel::Trivial: return "1";
    case CatalogLabel::Rho1Z2: return "Z/2";
    case CatalogLabel::Rho1Z2Sq: return "(Z/2)^2";
    case CatalogLabel::Rho1Z3:
    case CatalogLabel::Rho2Z3: return "Z/3";
    case CatalogLabel::Rho1Z3Sq:
    case CatalogLabel::Rho2Z3Sq: return "(Z/3)^2";
    case CatalogLabel::Rho1S3:
    case CatalogLabel::Rho2S3: return "S3";
    case CatalogLabel::Rho1Z3xS3: return "Z/3xS3";
    case CatalogLabel::Rho1A4:
    case CatalogLabel::Rho2A4: return "A4";
    case CatalogLabel::He3: return "He3";
    case CatalogLabel::AutF6: return "GAP(216,92)";
    case CatalogLabel::AutK6: return "GAP(63,3)";
    case CatalogLabel::Unknown: return "unknown";
  }
  return "unknown";
}

std::vector<ProjectiveMap> catalog_generators(CatalogLabel l, const PrimeField& f) {
  const Fp one = f.one(), m1 = -f.one(), z3 = f.zeta(3), z3i = f.zeta(3, -1);
  const auto cyc = ProjectiveMap::monomial({1, 2, 0}, {one, one, one});   // [Y:Z:X]
  const auto swap = ProjectiveMap::monomial({0, 2, 1}, {one, one, one});  // [X:Z:Y]
  const auto s1 = ProjectiveMap::diag(one, one, m1);
  const auto s2 = ProjectiveMap::diag(one, m1, one);
  const auto h1 = ProjectiveMap::diag(one, one, z3);
  const auto h2 = ProjectiveMap::diag(one, z3, one);
  const auto sigma = ProjectiveMap::diag(one, z3, z3i);
  switch (l) {
    case CatalogLabel::Trivial: return {};
    case CatalogLabel::Rho1Z2: return {s1};
    case CatalogLabel::Rho1Z2Sq: return {s1, s2};
    case CatalogLabel::Rho1Z3: return {h1};
    case CatalogLabel::Rho1Z3Sq: return {h1, h2};
    case CatalogLabel::Rho2Z3: return {sigma};
    case CatalogLabel::Rho2Z3Sq: return {sigma, cyc};
    case CatalogLabel::Rho1S3: return {cyc, swap};
    case CatalogLabel::Rho2S3: return {sigma, swap};
    case CatalogLabel::Rho1Z3xS3: return {cyc, swap, sigma};
    case CatalogLabel::Rho1A4: return {s1, s2, cyc};
    case CatalogLabel::Rho2A4: return {s1, s2, ProjectiveMap::monomial({1, 2, 0}, {f.zeta(6, -1), one, one})};
    case CatalogLabel::He3: return {h1, h2, cyc};
    case CatalogLabel::AutF6:
      return {swap, cyc, ProjectiveMap::diag(f.zeta(6), one, one), ProjectiveMap::diag(one, f.zeta(6), one)};
    case CatalogLabel::AutK6: return {ProjectiveMap::diag(one, f.zeta(21), f.zeta(21, -4)), cyc};
    case CatalogLabel::Unknown: break;
  }
  throw Error(Errc::BadParams, "no generators for label " + std::string(label_name(l)));
}

FiniteGroup rho(CatalogLabel l, const PrimeField& f) {
  auto gens = catalog_generators(l, f);
  return closure(gens, f);
}

GroupFingerprint fingerprint(const FiniteGroup& g) {
  GroupFingerprint fp;
  fp.order = g.order();
  for (const auto& m : g.elements()) {
    const auto info = is_homology(m);
    ++fp.order_histogram[info.period];
    if (info.period > 1) fp.homology_count[info.period] += info.homology ? 1 : 0;
  }
  for (const auto& a : g.elements()) {
    bool central = true;
    for (const auto& b : g.elements()) {
      if (!(a * b == b * a)) {
        central = false;
        break;
      }
    }
    if (central) ++fp.center_order;
  }
  fp.abelian = fp.center_order == fp.order;
  return fp;
}

CatalogTable::CatalogTable(const PrimeField& f) {
  for (auto l : kCatalogLabels) {
    groups_.push_back(rho(l, f));
    prints_.push_back(fingerprint(groups_.back()));
  }
}

const FiniteGroup& CatalogTable::group(CatalogLabel l) const {
  if (l == CatalogLabel::Unknown) throw Error(Errc::BadParams, "unknown label has no group");
  return groups_[static_cast<std::size_t>(l)];
}

const GroupFingerprint& CatalogTable::print(CatalogLabel l) const {
  if (l == CatalogLabel::Unknown) throw Error(Errc::BadParams, "unknown label has no fingerprint");
  return prints_[static_cast<std::size_t>(l)];
}

Identification CatalogTable::identify(const FiniteGroup& g) const {
  Identification id;
  const auto fp = fingerprint(g);
  for (auto l : kCatalogLabels) {
    const auto idx = static_cast<std::size_t>(l);
    if (prints_[idx] == fp) id.candidates.push_back(l);
    if (!id.exact && groups_[idx] == g) {
      id.exact = true;
      id.label = l;
    }
  }
  if (!id.exact && !id.candidates.empty()) id.label = id.candidates.front();
  return id;
}

Identification identify(const FiniteGroup& g, const PrimeField& f) { return CatalogTable(f).identify(g); }

std::vector<ProjectiveMap> presentation_generators(std::string_view name, const PrimeField& f) {
  const Fp one = f.one();
  if (name == "fermat6") {
    return {ProjectiveMap::monomial({0, 2, 1}, {one, one, one}), ProjectiveMap::monomial({1, 2, 0}, {one, one, one}),
            ProjectiveMap::diag(f.zeta(6), one, one), ProjectiveMap::diag(one, f.zeta(6), one)};
  }
  if (name == "klein6") {
    return {ProjectiveMap::diag(one, f.zeta(21), f.zeta(21, -4)), ProjectiveMap::monomial({1, 2, 0}, {one, one, one})};
  }
  throw Error(Errc::BadParams, "unknown presentation '" + std::string(name) + "'");
}

PresentationReport evaluate_presentation(std::string_view name, std::span<const ProjectiveMap> gens,
                                         const PrimeField& f) {
  PresentationReport r;
  r.name = std::string(name);
  auto check = [&](std::vector<RelationCheck>& into, std::string text, bool holds) {
    into.push_back({std::move(text), holds});
  };
  auto id = [&](const ProjectiveMap& m) { return m.is_identity(); };
  auto has_order = [&](const ProjectiveMap& m, int n) { return power(m, n).is_identity() && order(m) == n; };
  if (name == "fermat6") {
    if (gens.size() != 4) throw Error(Errc::BadParams, "fermat6 takes generators a,b,c,d");
    const auto &a = gens[0], &b = gens[1], &c = gens[2], &d = gens[3];
    check(r.relations, "ord(a) = 2", has_order(a, 2));
    check(r.relations, "ord(b) = 3", has_order(b, 3));
    check(r.relations, "ord(c) = 6", has_order(c, 6));
    check(r.relations, "ord(d) = 6", has_order(d, 6));
    check(r.relations, "(ab)^2 = 1", id(power(a * b, 2)));
    check(r.relations, "(ac)(ca)^-1 = 1", id((a * c) * inverse(c * a)));
    check(r.relations, "(cd)(dc)^-1 = 1", id((c * d) * inverse(d * c)));
    check(r.relations, "ada(cd)^-5 = 1", id(a * d * a * power(c * d, -5)));
    check(r.relations, "bcb^-1(cd)^-5 = 1", id(b * c * inverse(b) * power(c * d, -5)));
    check(r.supplementary, "|<a,b,c,d>| = 216", closure(gens, f).order() == 216);
  } else if (name == "klein6") {
    if (gens.size() != 2) throw Error(Errc::BadParams, "klein6 takes generators a,b");
    const auto &a = gens[0], &b = gens[1];
    check(r.relations, "ord(a) = 21", has_order(a, 21));
    check(r.relations, "ord(b) = 3", has_order(b, 3));
    check(r.relations, "ba = (ab)^-5", b * a == power(a * b, -5));
    check(r.supplementary, "bab^-1 = a^-5", b * a * inverse(b) == power(a, -5));
    check(r.supplementary, "|<a,b>| = 63", closure(gens, f).order() == 63);
  } else {
    throw Error(Errc::BadParams, "unknown presentation '" + std::string(name) + "'");
  }
  r.holds = std::all_of(r.relations.begin(), r.relations.end(), [](const RelationCheck& c) { return c.holds; });
  return r;
}

PresentationReport verify_presentation(std::string_view name, const PrimeField& f) {
  auto gens = presentation_generators(name, f);
  return evaluate_presentation(name, gens, f);
}

}  // namespace sextic
