#include "doctest.h"
#include "oracle.hpp"
#include "sextic/expr.hpp"
#include "sextic/families.hpp"
#include "sextic/sampling.hpp"

using namespace sextic;

namespace {

const PrimeField f(757);

TernaryForm form(const char* text) { return parse_form(text, f); }
ProjectiveMap map(const char* text) { return parse_map(text, f); }

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::Parse;
}

std::vector<std::string> names(const BranchReport& r) {
  std::vector<std::string> out;
  for (const auto& b : r.branches) out.push_back(b.name);
  return out;
}

}  // namespace

TEST_CASE("fixed curves") {
  CHECK(fermat6(f) == form("X^6 + Y^6 + Z^6"));
  CHECK(klein6(f) == form("X^5*Y + Y^5*Z + X*Z^5"));
  CHECK(build(FamilyId::C1, C1Params{f.zero(), f.zero(), f.zero(), f.zero(), f.zero(), f.zero(), f.zero()}, f) ==
        fermat6(f));
  CHECK(build(FamilyId::C2, C2Params{f.zero(), f.zero(), f.zero(), f.zero(), f.zero(), f.zero()}, f) == klein6(f));
}

TEST_CASE("C1 and C2 monomials") {
  C1Params a{f(2), f(3), f(5), f(7), f(11), f(13), f(17)};
  CHECK(build(FamilyId::C1, a, f) ==
        form("X^6+Y^6+Z^6 + X*Y*Z*(2*X^3 + 3*Y^3 + 5*Z^3) + 7*X^2*Y^2*Z^2 + 11*X^3*Y^3 + 13*X^3*Z^3 + 17*Y^3*Z^3"));
  C2Params b{f(2), f(3), f(5), f(7), f(11), f(13)};
  CHECK(build(FamilyId::C2, b, f) == form("X^5*Y + Y^5*Z + X*Z^5 + X*Y*Z*(2*X^2*Y + 3*Y^2*Z + 5*X*Z^2)"
                                          " + 7*X^2*Y^4 + 11*Y^2*Z^4 + 13*X^4*Z^2"));
}

TEST_CASE("(1)(iv) coefficients") {
  const C1Params one = a4_c1_params(f.one(), f.one(), f);
  CHECK(one.a22.value() == 514);
  CHECK(one.a41.value() == 639);
  CHECK(one.a11.value() == 639);
  CHECK(one.a14.value() == 639);
  CHECK(one.a30.value() == 703);

  const C1Params p = a4_c1_params(f(2), f(3), f);
  CHECK(p.a22.value() == 690);
  CHECK((p.a22 * f(3) * f(4) * f(9)) == f(9) * f(2).pow(6) + f(9) * f(3).pow(6) + f(10));
  CHECK(p.a41.value() == 210);
  CHECK(p.a11.value() == 231);
  CHECK(p.a14.value() == 318);
  CHECK(p.a30.value() == 659);
  CHECK(p.a33.value() == 145);
  CHECK(p.a03.value() == 427);

  // the other two orderings rotate both triples together
  const C1Params q = a4_c1_params(f(2), f(3), f, 1), r = a4_c1_params(f(2), f(3), f, 2);
  CHECK((q.a14 == p.a41 && q.a41 == p.a11 && q.a11 == p.a14));
  CHECK((q.a33 == p.a30 && q.a03 == p.a33 && q.a30 == p.a03));
  CHECK((r.a11 == p.a41 && r.a14 == p.a11 && r.a41 == p.a14));
  CHECK((r.a03 == p.a30 && r.a30 == p.a33 && r.a33 == p.a03));
  CHECK(q.a22 == p.a22);
  CHECK_THROWS_AS(a4_c1_params(f(2), f(3), f, 3), Error);
  CHECK_THROWS_AS(a4_c1_params(f.zero(), f(3), f), Error);
}

TEST_CASE("swapping lambda and mu is the transposition of Y and Z") {
  Rng rng(31, 0);
  for (int t = 0; t < 10; ++t) {
    const Fp l = rng.nonzero(f), m = rng.nonzero(f);
    const TernaryForm a = build(FamilyId::C1A4, LambdaMuParams{l, m, 0}, f);
    const TernaryForm b = build(FamilyId::C1A4, LambdaMuParams{m, l, 0}, f);
    CHECK(substitute(a, map("[X:Z:Y]")) == b);
  }
}

TEST_CASE("(2)(ii) coefficients") {
  const C2Params one = a4_c2_params(f.one(), f.one(), f);
  CHECK(one.a24.value() == 381);
  CHECK(one.a13.value() == 10);
  const C2Params p = a4_c2_params(f(2), f(3), f);
  CHECK(p.a24.value() == 128);
  CHECK(p.a40.value() == 442);
  CHECK(p.a02.value() == 338);
  CHECK(p.a13.value() == 622);
  CHECK(p.a32.value() == 350);
  CHECK(p.a21.value() == 642);
}

TEST_CASE("normal-form coefficients") {
  const FCoeffs c = f_coeffs(f.one(), f.one(), f);
  CHECK(c.f1.value() == 726);
  CHECK(c.f1 == f(3) * f(242));
  const FCoeffs d = f_coeffs(f(2), f(3), f);
  CHECK(d.f1.value() == 661);
  CHECK(d.f2_lm.value() == 677);
  CHECK(d.f2_ml.value() == 354);
  CHECK(d.f2_ml == f_coeffs(f(3), f(2), f).f2_lm);

  // f2(l,m) - f2(m,l) = 81 (zeta3 - zeta3^-1)(l^6 - m^6)
  Rng rng(32, 0);
  for (int t = 0; t < 10; ++t) {
    const Fp l = rng.nonzero(f), m = rng.nonzero(f);
    const FCoeffs e = f_coeffs(l, m, f);
    CHECK(e.f2_lm - e.f2_ml == f(81) * (f.zeta(3) - f.zeta(3, -1)) * (l.pow(6) - m.pow(6)));
    CHECK((f_coeffs(l, l, f).f2_lm == f_coeffs(l, l, f).f2_ml));
  }

  const GCoeffs g = g_coeffs(f.one(), f.one(), f);
  CHECK(g.g1.value() == 110);
  CHECK(g.g2.value() == 174);
  const GCoeffs h = g_coeffs(f(2), f(3), f);
  CHECK(h.g1.value() == 309);
  CHECK(h.g2.value() == 82);

  // 1 + 27 + 27^5 = 0 mod 757
  CHECK((f.one() + f(27) + f(27).pow(5)).is_zero());
  CHECK(error_of([] { g_coeffs(f.one(), f(27), f); }) == Errc::BadParams);
  CHECK(error_of([] { build(FamilyId::C2LambdaMu, LambdaMuParams{f.one(), f(27), 0}, f); }) == Errc::BadParams);
}

TEST_CASE("transport matrices") {
  const Fp l = f(2), m = f(3);
  for (int i = 1; i <= 6; ++i) {
    CAPTURE(i);
    CHECK_FALSE(phi(i, l, m, f).determinant().is_zero());
    CHECK_FALSE(psi(i, l, m, f).determinant().is_zero());
  }
  // phi_2 is phi_1 followed by a cyclic relabelling of the rows
  CHECK(phi(2, l, m, f) == map("[Z:X:Y]") * phi(1, l, m, f));
  CHECK(phi(1, l, m, f).at(0, 0).is_one());
}

TEST_CASE("klein normalizer") {
  for (int r = 0; r < 21; ++r) {
    CAPTURE(r);
    const auto rp = find_klein_normalizer(r);
    CHECK(rp.has_value() == (r % 3 == 0));
    if (!rp) continue;
    CHECK((18 * *rp + r) % 21 == 0);
    CHECK(((12 * *rp - 4 * r) % 21 + 21) % 21 == 0);
    const ProjectiveMap n = klein_normalizer(r, *rp, f);
    CHECK(n == ProjectiveMap::diag(f.one(), f.zeta(21, *rp), f.zeta(21, 17 * *rp)));
  }
  CHECK(error_of([] { klein_normalizer(1, 0, f); }) == Errc::BadParams);
}

TEST_CASE("cor3123 map") {
  const ProjectiveMap m = cor3123_map(f);
  const Fp t = f.zeta(18);
  CHECK(m == ProjectiveMap::diag(f.one(), t * t, t));
  CHECK(t.pow(3) == f.zeta(6));
}

TEST_CASE("branch conditions") {
  const Fp z = f.zero();
  // (1)(i) example
  C1Params i{z, z, z, z, f(1), f(2), z};
  CHECK(names(branch_conditions(FamilyId::C1, i, f)) == std::vector<std::string>{"i"});

  // C1' with a41 = a12 and a33 = a03 reaches the larger group
  C1PrimeParams e{f(5), f(7), f(11), f(5), f(7)};
  CHECK(branch_conditions(FamilyId::C1Prime, e, f).has("extra"));
  C1PrimeParams g{f(5), f(7), f(11), f(6), f(7)};
  CHECK_FALSE(branch_conditions(FamilyId::C1Prime, g, f).has("extra"));

  // random C2 members satisfy no special relation
  Rng rng(33, 0);
  for (int t = 0; t < 20; ++t) {
    C2Params c{rng.residue(f), rng.residue(f), rng.residue(f), rng.residue(f), rng.residue(f), rng.residue(f)};
    CHECK(branch_conditions(FamilyId::C2, c, f).branches.empty());
  }

  // (ii-a) with the minus sign
  C1Params m{f(3), -f(3), f(5), f(7), f(11), f(13), -f(13)};
  const auto rep = branch_conditions(FamilyId::C1, m, f);
  REQUIRE(rep.find("ii-a"));
  CHECK(rep.find("ii-a")->data.at("sign") == "-1");

  // (1)(iv) recovers its parameters
  const auto iv = branch_conditions(FamilyId::C1, a4_c1_params(f(2), f(3), f, 1), f);
  REQUIRE(iv.find("iv"));
  CHECK(iv.find("iv")->data.at("ordering") == "1");

  const auto sp = branch_conditions(FamilyId::Thm2Special, Thm2SpecialParams{f(2), f(3), f(5)}, f);
  CHECK(sp.predicates.at("pairwise_distinct_mod_sign"));
  const auto eq = branch_conditions(FamilyId::Thm2Special, Thm2SpecialParams{f(2), -f(2), f(5)}, f);
  CHECK_FALSE(eq.predicates.at("pairwise_distinct_mod_sign"));
}

TEST_CASE("constructor guards") {
  CHECK(error_of([] { build(FamilyId::C1DoublePrime, C1DoublePrimeParams{3, f(2), f(5)}, f); }) == Errc::BadParams);
  CHECK_NOTHROW(build(FamilyId::Thm1, Thm1Params{form("X^2"), TernaryForm(4, f), form("X^6 + Y^6")}, f));
  CHECK(error_of([] {
          build(FamilyId::Thm1, Thm1Params{form("X^2"), TernaryForm(4, f), form("X^4*Y^2 + Y^6")}, f);
        }) == Errc::BadParams);
  CHECK(error_of([] {
          build(FamilyId::Thm1, Thm1Params{TernaryForm(2, f), TernaryForm(4, f), form("X^6 + Y^6")}, f);
        }) == Errc::BadParams);
  CHECK(error_of([] {
          build(FamilyId::Thm1Even, Thm1Params{form("X*Y"), TernaryForm(4, f), form("X^6 + Y^6")}, f);
        }) == Errc::BadParams);
  CHECK(error_of([] { build(FamilyId::Thm2, Thm2Params{TernaryForm(3, f), form("X^6 + Y^6")}, f); }) ==
        Errc::BadParams);
  CHECK(error_of([] { build(FamilyId::C1, NoParams{}, f); }) == Errc::BadParams);
}

TEST_CASE("smoothness") {
  CHECK(is_smooth(fermat6(f)));
  CHECK_FALSE(is_smooth(form("X^6 + Y^6")));
  CHECK(is_smooth(klein6(f)));
  CHECK(macaulay_rank(fermat6(f)) == 105);
  CHECK_FALSE(oracle::has_singular_point(klein6(f)));
  CHECK_FALSE(oracle::has_singular_point(fermat6(f)));
  CHECK(oracle::has_singular_point(form("X^6 + Y^6")));
  // a node at (1:1:1)
  const TernaryForm nodal = product(form("(X-Z)*(Y-Z)"), form("X^4 + 2*Y^4 + 3*Z^4"));
  CHECK_FALSE(is_smooth(nodal));
  CHECK(oracle::has_singular_point(nodal));
}

TEST_CASE("core") {
  Rng rng(34, 0);
  for (int t = 0; t < 5; ++t) {
    const Fp l = rng.nonzero(f), m = rng.nonzero(f);
    CHECK(core(build(FamilyId::C1LambdaMu, LambdaMuParams{l, m, 0}, f)) == fermat6(f));
    C2Params c{rng.residue(f), rng.residue(f), rng.residue(f), rng.residue(f), rng.residue(f), rng.residue(f)};
    CHECK(core(build(FamilyId::C2, c, f)) == klein6(f));
  }
  CHECK(core(form("X^5*Y + Z^6")) == form("Z^6"));
}

TEST_CASE("parameter files") {
  const auto p = params_from_text(FamilyId::C1, "# (1)(i)\na33 = 1\na30 = 2\n", f);
  const auto& c = std::get<C1Params>(p);
  CHECK(c.a33.is_one());
  CHECK(c.a30 == f(2));
  CHECK(c.a41.is_zero());

  const auto q = params_from_text(FamilyId::C1A4, "lambda = zeta(3)^2 + sqrt3\nmu = 3/2\nordering = 2\n", f);
  const auto& lm = std::get<LambdaMuParams>(q);
  CHECK(lm.lambda == f.zeta(3, 2) + f.sqrt3());
  CHECK(lm.mu == f(3) / f(2));
  CHECK(lm.ordering == 2);

  const auto t = params_from_text(FamilyId::Thm1, "L2 = X^2 + Y^2\nL6 = X^6 - Y^6\n", f);
  CHECK(std::get<Thm1Params>(t).l4.is_zero());

  CHECK(error_of([] { params_from_text(FamilyId::C1, "a99 = 1\n", f); }) == Errc::BadParams);
  CHECK(error_of([] { params_from_text(FamilyId::C1A4, "mu = 1\n", f); }) == Errc::BadParams);
  CHECK(error_of([] { params_from_text(FamilyId::C1, "a33 = (1\n", f); }) == Errc::Parse);
  CHECK(error_of([] { params_from_text(FamilyId::C1, "a33 1\n", f); }) == Errc::Parse);

  for (auto id : kFamilies) {
    CAPTURE(family_name(id));
    CHECK(family_from_name(family_name(id)) == id);
  }
  const auto round = params_from_assignments(FamilyId::C1, params_to_assignments(p), f);
  CHECK(build(FamilyId::C1, round, f) == build(FamilyId::C1, p, f));
}
