#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "sextic/classify.hpp"
#include "sextic/expr.hpp"
#include "sextic/sampling.hpp"

using namespace sextic;

namespace {

const PrimeField f(757);
using L = CatalogLabel;

ProjectiveMap map(const char* text) { return parse_map(text, f); }

AutReport drawn(const char* key, std::uint64_t index = 0) {
  Rng rng(5, stream_id(key, index));
  return draw_classified(sampler(key), rng, f).report;
}

ProjectiveMap random_monomial(Rng& rng) {
  static const std::array<std::array<int, 3>, 6> perms{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  const auto& s = perms[rng.below(6)];
  return ProjectiveMap::monomial(s, {f.one(), f.zeta(252, static_cast<std::int64_t>(rng.below(252))),
                                     f.zeta(252, static_cast<std::int64_t>(rng.below(252)))});
}

// All points v of P^2(F_p) with M v proportional to v.
std::set<std::array<std::uint32_t, 3>> brute_fixed_points(const ProjectiveMap& m) {
  std::set<std::array<std::uint32_t, 3>> out;
  const auto a = oracle::raw(m);
  auto test = [&](std::uint64_t x, std::uint64_t y, std::uint64_t z) {
    std::uint64_t w[3];
    for (int r = 0; r < 3; ++r) w[r] = (a[3 * r] * x + a[3 * r + 1] * y + a[3 * r + 2] * z) % 757;
    const std::uint64_t v[3] = {x, y, z};
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if ((w[i] * v[j] + 757 * 757 - w[j] * v[i]) % 757) return;
    out.insert({static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y), static_cast<std::uint32_t>(z)});
  };
  test(1, 0, 0);
  for (std::uint64_t x = 0; x < 757; ++x) test(x, 1, 0);
  for (std::uint64_t y = 0; y < 757; ++y)
    for (std::uint64_t x = 0; x < 757; ++x) test(x, y, 1);
  return out;
}

std::set<std::array<std::uint32_t, 3>> normalized(const std::vector<std::array<Fp, 3>>& pts) {
  std::set<std::array<std::uint32_t, 3>> out;
  for (auto v : pts) {
    // scale so the last nonzero coordinate is 1
    Fp s = !v[2].is_zero() ? v[2] : !v[1].is_zero() ? v[1] : v[0];
    s = s.inv();
    out.insert({(v[0] * s).value(), (v[1] * s).value(), (v[2] * s).value()});
  }
  return out;
}

}  // namespace

TEST_CASE("Fermat and Klein") {
  const AutReport fermat = classify(FamilyId::Fermat6, NoParams{}, f);
  CHECK(fermat.stabilizer.order() == 216);
  CHECK(fermat.label == L::AutF6);
  CHECK(fermat.agrees);
  CHECK(fermat.examined >= 381024);
  CHECK_FALSE(fermat.degenerate);
  const AutReport klein = classify(FamilyId::Klein6, NoParams{}, f);
  CHECK(klein.stabilizer.order() == 63);
  CHECK(klein.label == L::AutK6);
  CHECK(klein.agrees);
}

TEST_CASE("involution and order-3 homology families") {
  const AutReport generic = drawn("thm1/generic");
  CHECK(generic.stabilizer == rho(L::Rho1Z2, f));
  CHECK(generic.stabilizer.contains(map("diag(1,1,-1)")));
  CHECK(drawn("thm1/even").label == L::Rho1Z2Sq);

  const AutReport z3 = drawn("thm2/generic");
  CHECK(z3.label == L::Rho1Z3);
  for (const auto& g : z3.stabilizer.elements())
    if (!g.is_identity()) CHECK(is_homology(g).homology);

  const AutReport special = classify(FamilyId::Thm2Special, Thm2SpecialParams{f(3), f(4), f(5)}, f);
  CHECK(special.label == L::Rho1Z3Sq);
  CHECK(special.agrees);
  CHECK(special.fingerprint.homology_count.at(3) == 6);
}

TEST_CASE("C1 and C2 family members") {
  const Fp z = f.zero();
  const AutReport i = classify(FamilyId::C1, C1Params{z, z, z, z, f(1), f(3), z}, f);
  CHECK(i.label == L::Rho1Z3Sq);
  CHECK(i.agrees);

  const AutReport extra = classify(FamilyId::C1Prime, C1PrimeParams{f(5), f(7), f(11), f(5), f(7)}, f);
  CHECK(extra.label == L::Rho1Z3xS3);
  CHECK(extra.stabilizer.order() == 18);
  CHECK(extra.agrees);

  const AutReport c2i = drawn("c2/i");
  CHECK(c2i.label == L::Rho2Z3Sq);
  CHECK(c2i.agrees);
  CHECK(drawn("c1-double-prime/generic").label == L::Rho2Z3Sq);
  CHECK(drawn("c1/generic").fingerprint.homology_count.at(3) == 0);

  const AutReport a4 = drawn("c1-a4/generic");
  CHECK(a4.label == L::Rho1A4);
  CHECK(a4.agrees);
  CHECK(a4.fingerprint.order_histogram == std::map<int, int>{{1, 1}, {2, 3}, {3, 8}});
  CHECK(a4.failed_witnesses.empty());
  CHECK_FALSE(a4.verified_witnesses.empty());

  const AutReport c2ii = drawn("c2/ii");
  CHECK(c2ii.fingerprint.order == 12);
  CHECK(c2ii.agrees);
}

TEST_CASE("errors") {
  // (X^3 + Z^3)^2 + Y^6 is singular along Y = X^3 + Z^3 = 0
  CHECK_THROWS_AS(classify(FamilyId::Thm2Special, Thm2SpecialParams{f(2), f.zero(), f.zero()}, f), Error);
  try {
    classify(FamilyId::Thm2Special, Thm2SpecialParams{f(2), f.zero(), f.zero()}, f);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotSmooth);
  }
  try {
    predict(FamilyId::C1DoublePrime, C1DoublePrimeParams{1, f.zero(), f(3)}, f);
    FAIL("guard not enforced");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::GuardViolated);
  }
  try {
    predict(FamilyId::C2Prime, C2PrimeParams{f.zero(), f.zero(), 0}, f);
    FAIL("guard not enforced");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::GuardViolated);
  }
}

TEST_CASE("stabilizers transform by conjugation") {
  const CandidateCatalog cat(f);
  Rng rng(41, 0);
  for (const char* key : {"c1/ii-a", "c1/iii", "thm2/special", "c2/i", "thm1/even"}) {
    CAPTURE(key);
    Rng draw(6, stream_id(key, 0));
    const Drawn d = draw_classified(sampler(key), draw, f);
    const TernaryForm F = build(sampler(key).family, d.params, f);
    const FiniteGroup g = stabilizer(F, cat);
    for (int t = 0; t < 3; ++t) {
      const ProjectiveMap M = random_monomial(rng);
      // F(Mx) is fixed by M^-1 h M for every h fixing F
      const FiniteGroup moved = stabilizer(substitute(F, M), cat);
      CHECK(moved == conjugate(g, inverse(M), f));
      CHECK(fingerprint(moved) == fingerprint(g));
    }
  }
}

TEST_CASE("transport identities") {
  Rng rng(42, 0);
  int checked = 0;
  while (checked < 5) {
    const Fp l = rng.nonzero(f), m = rng.nonzero(f);
    const int k = checked % 3;
    try {
      const auto a = verify_transport(TransportCase::C1A4, l, m, f, k);
      const auto b = verify_transport(TransportCase::C2A4, l, m, f, k);
      const auto c = verify_transport(TransportCase::Cor3123, l, m, f, k);
      CHECK(a.invariant);
      CHECK(a.proportional);
      CHECK(a.mismatched.empty());
      CHECK(b.invariant);
      // the printed g-normal form disagrees with the transported curve on six monomials
      CHECK_FALSE(b.proportional);
      const std::vector<Monomial> six{{4, 2, 0}, {4, 0, 2}, {2, 4, 0}, {2, 0, 4}, {0, 4, 2}, {0, 2, 4}};
      for (const auto& mono : b.mismatched)
        CHECK(std::find(six.begin(), six.end(), mono) != six.end());
      CHECK(c.core_matches);
      CHECK(c.invariant);
      CHECK(c.core_coefficients == std::vector<Fp>{f.one(), f.zeta(3, -1), f.zeta(3)});
      ++checked;
    } catch (const Error& e) {
      CHECK(e.code() == Errc::BadParams);
    }
  }
}

TEST_CASE("the printed g-normal form is itself invariant under rho2(A4)") {
  Rng rng(43, 0);
  for (int t = 0; t < 5; ++t) {
    const Fp l = rng.nonzero(f), m = rng.nonzero(f);
    try {
      const TernaryForm G = build(FamilyId::C2LambdaMu, LambdaMuParams{l, m, 0}, f);
      const FiniteGroup a4 = rho(L::Rho2A4, f);
      for (const auto& h : a4.elements()) CHECK(proportional(substitute(G, h), G).has_value());
    } catch (const Error& e) {
      CHECK(e.code() == Errc::BadParams);
    }
  }
}

TEST_CASE("fixed points against brute force") {
  for (const char* s : {"diag(1,zeta(3),zeta(3)^-1)", "diag(1,1,zeta(3))", "[Y:Z:X]", "[X:Z:Y]"}) {
    CAPTURE(s);
    const ProjectiveMap m = map(s);
    CHECK(normalized(fixed_points(m, f)) == brute_fixed_points(m));
  }
  CHECK(fixed_points(map("diag(1,zeta(3),zeta(3)^-1)"), f).size() == 3);
  CHECK(fixed_points(map("diag(1,1,zeta(3))"), f).size() == 759);
}

TEST_CASE("fake component evidence") {
  const EvidenceReport ev = fake_evidence(f, 4, 1);
  CHECK(ev.a_holds);
  CHECK(ev.b_holds);
  CHECK(ev.c_holds);
  for (const auto& v : ev.c2_samples)
    for (Fp x : v.vertex_values) CHECK(x.is_zero());
  for (const auto& v : ev.c1pp_samples) CHECK(v.vertex_values[0].is_one());
}

TEST_CASE("strata table") {
  const StrataTable t = strata_table(f, 1, 3);
  CHECK(t.counts() == std::map<std::string, int>{
                          {"Z/2", 1}, {"(Z/2)^2", 1}, {"Z/3", 2}, {"(Z/3)^2", 2}, {"S3", 1}, {"Z/3xS3", 1}, {"A4", 1}});
  std::set<int> z3_homologies, z3sq_homologies;
  for (const auto& c : t.strata.at("Z/3")) z3_homologies.insert(c.fingerprint.homology_count.at(3));
  for (const auto& c : t.strata.at("(Z/3)^2")) z3sq_homologies.insert(c.fingerprint.homology_count.at(3));
  CHECK(z3_homologies == std::set<int>{0, 2});
  CHECK(z3sq_homologies == std::set<int>{0, 6});
  const auto& a4 = t.strata.at("A4").front();
  CHECK(a4.fake);
  CHECK(a4.normal_forms == std::vector<std::string>{"C1lm", "C2lm"});
}
