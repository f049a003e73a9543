#include <algorithm>

#include "doctest.h"
#include "oracle.hpp"
#include "sextic/expr.hpp"
#include "sextic/families.hpp"
#include "sextic/groups.hpp"
#include "sextic/pgl.hpp"
#include "sextic/sampling.hpp"

using namespace sextic;

namespace {

const PrimeField f(757);

ProjectiveMap map(const char* text) { return parse_map(text, f); }

ProjectiveMap random_map(Rng& rng) {
  for (;;) {
    Matrix3 m;
    for (auto& x : m) x = rng.residue(f);
    try {
      return ProjectiveMap::from_matrix(m);
    } catch (const Error&) {
    }
  }
}

}  // namespace

TEST_CASE("group laws after normalization") {
  CHECK((map("[Y:Z:X]") * map("[Y:Z:X]")) == map("[Z:X:Y]"));
  CHECK(ProjectiveMap::diag(f(2), f(2), f(2)).is_identity());
  CHECK(map("diag(2,2,2)") == ProjectiveMap::identity(f));
  CHECK(map("[Y:Z:X]").at(0, 1).is_one());
  CHECK(map("[Y:Z:X]") == ProjectiveMap::monomial({1, 2, 0}, {f.one(), f.one(), f.one()}));
  CHECK_THROWS_AS(map("[X:X:Y]"), Error);

  Rng rng(21, 0);
  for (int t = 0; t < 50; ++t) {
    const ProjectiveMap a = random_map(rng), b = random_map(rng), c = random_map(rng);
    CHECK((a * inverse(a)).is_identity());
    CHECK(((a * b) * c) == (a * (b * c)));
    CHECK(oracle::raw(a * b) == oracle::mul(oracle::raw(a), oracle::raw(b), 757));
    CHECK(conjugate(b, a) == a * b * inverse(a));
    CHECK(power(a, -2) == inverse(a * a));
    const Matrix3& m = a.matrix();
    const auto lead = std::find_if(m.begin(), m.end(), [](Fp x) { return !x.is_zero(); });
    CHECK(lead->is_one());
  }
}

TEST_CASE("orders") {
  CHECK(order(map("diag(1,zeta(3),zeta(3)^-1)")) == 3);
  CHECK(order(map("[X:Z:Y]")) == 2);
  CHECK(order(map("diag(1,zeta(21),zeta(21)^-4)")) == 21);
  CHECK(order(ProjectiveMap::identity(f)) == 1);
  CHECK(order(map("[zeta(6)^-1*Y:Z:X]")) == oracle::order(oracle::raw(map("[zeta(6)^-1*Y:Z:X]")), 757));
  CHECK(order(map("diag(1,zeta(252),1)")) == 252);
  // elements outside the 252-torsion overflow the bound
  Rng rng(22, 0);
  int overflow = 0;
  for (int t = 0; t < 20; ++t) {
    const ProjectiveMap a = random_map(rng);
    try {
      const int n = order(a);
      CHECK(n == oracle::order(oracle::raw(a), 757));
    } catch (const Error& e) {
      CHECK(e.code() == Errc::OrderOverflow);
      ++overflow;
    }
  }
  CHECK(overflow > 0);
}

TEST_CASE("homology detection") {
  auto h = is_homology(map("diag(1,1,zeta(3))"));
  CHECK(h.homology);
  CHECK(h.period == 3);
  h = is_homology(map("[Y:Z:X]"));
  CHECK_FALSE(h.homology);
  CHECK(h.period == 3);
  h = is_homology(map("diag(1,zeta(3),zeta(3)^-1)"));
  CHECK_FALSE(h.homology);
  CHECK(h.period == 3);
  CHECK(is_homology(map("[X:Z:Y]")).homology);  // reflection: eigenvalues 1, 1, -1
  CHECK(is_homology(map("diag(1,-1,-1)")).homology);

  // conjugating a homology keeps it one
  Rng rng(23, 0);
  const ProjectiveMap hom = map("diag(1,1,zeta(6))");
  for (int t = 0; t < 10; ++t) {
    const ProjectiveMap c = conjugate(hom, random_map(rng));
    CHECK(is_homology(c).homology);
    CHECK(is_homology(c).period == 6);
  }
}

TEST_CASE("shape predicates") {
  const ProjectiveMap d = ProjectiveMap::diag(f.one(), f(5), f(7));
  for (Var v : {Var::X, Var::Y, Var::Z}) CHECK(is_intransitive(d, v));
  CHECK(is_intransitive(map("[X:Z:Y]"), Var::X));
  CHECK_FALSE(is_intransitive(map("[X:Z:Y]"), Var::Y));
  for (Var v : {Var::X, Var::Y, Var::Z}) CHECK_FALSE(is_intransitive(map("[Y:Z:X]"), v));

  CHECK(coordinate_triangle_stable(rho(CatalogLabel::Rho2Z3Sq, f).elements()));
  CHECK(coordinate_triangle_stable(std::vector<ProjectiveMap>{ProjectiveMap::identity(f)}));
  const Fp l = f(3), m = f(5);
  const ProjectiveMap p1 = phi(1, l, m, f);
  const ProjectiveMap dense = conjugate(map("diag(1,1,-1)"), p1);
  CHECK_FALSE(dense.is_monomial());
  CHECK_FALSE(coordinate_triangle_stable(std::vector<ProjectiveMap>{ProjectiveMap::identity(f), dense}));
}

TEST_CASE("render and parse_map round trip") {
  for (const char* s : {"[Y:Z:X]", "diag(1,zeta(3),zeta(3)^-1)", "[X:Z:Y]"}) CHECK(render(map(s), f) == s);
  CHECK(render(map("[zeta(6)^-1*Y:Z:X]"), f) == "[Y:zeta(6)*Z:zeta(6)*X]");
  Rng rng(24, 0);
  for (int t = 0; t < 20; ++t) {
    const ProjectiveMap a = random_map(rng);
    CHECK(parse_map(render(a, f), f) == a);
  }
  const FiniteGroup aut = rho(CatalogLabel::AutF6, f);
  for (const auto& g : aut.elements()) CHECK(parse_map(render(g, f), f) == g);
}

TEST_CASE("apply") {
  const auto v = apply(map("[Y:Z:X]"), {f(1), f(2), f(3)});
  CHECK(v == std::array<Fp, 3>{f(2), f(3), f(1)});
}
