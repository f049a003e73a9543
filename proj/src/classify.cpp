#include "sextic/classify.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <set>

namespace sextic {

namespace {

constexpr std::array<std::array<int, 3>, 6> kPerms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

const CatalogTable& catalog_table(const PrimeField& f) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::unique_ptr<CatalogTable>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[f.p()];
  if (!slot) slot = std::make_unique<CatalogTable>(f);
  return *slot;
}

bool invariant(const TernaryForm& F, const ProjectiveMap& m) { return proportional(substitute(F, m), F).has_value(); }

void sort_unique(std::vector<ProjectiveMap>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

int label_order(CatalogLabel l, const PrimeField& f) {
  return l == CatalogLabel::Unknown ? 0 : static_cast<int>(catalog_table(f).group(l).order());
}

}  // namespace

CandidateCatalog::CandidateCatalog(const PrimeField& f) : f_(f) {
  const Fp step = f(f.generator()).pow(static_cast<std::int64_t>((f.p() - 1) / kRootOrder));
  Fp x = f.one();
  for (std::size_t i = 0; i < kRootOrder; ++i, x *= step) roots_.push_back(x);
}

CandidateCatalog::CandidateCatalog(const PrimeField& f, Fp lambda, Fp mu) : CandidateCatalog(f) {
  std::vector<ProjectiveMap> hs = rho(CatalogLabel::Rho1A4, f).elements();
  const FiniteGroup more_group = rho(CatalogLabel::Rho2A4, f);
  const auto& more = more_group.elements();
  hs.insert(hs.end(), more.begin(), more.end());
  sort_unique(hs);
  std::vector<ProjectiveMap> transports;
  for (int i = 1; i <= 6; ++i) {
    // some transports degenerate at special (lambda, mu); those contribute nothing
    try {
      transports.push_back(phi(i, lambda, mu, f));
    } catch (const Error&) {
    }
    try {
      transports.push_back(psi(i, lambda, mu, f));
    } catch (const Error&) {
    }
  }
  for (const auto& T : transports)
    for (const auto& h : hs)
      if (!h.is_identity()) extras_.push_back(conjugate(h, T));
  sort_unique(extras_);
}

ScanResult stabilizer_in_catalog(const TernaryForm& F, const CandidateCatalog& cat) {
  const PrimeField& f = cat.field();
  if (!is_smooth(F)) throw Error(Errc::NotSmooth, "form is singular: " + render(F));
  const std::uint64_t p = f.p();
  const int d = F.degree();
  const auto dense = F.dense();
  const auto& terms = F.terms();
  const auto& roots = cat.roots();
  const std::size_t R = roots.size();

  // pw[i * (d+1) + e] = roots[i]^e
  std::vector<std::uint64_t> pw(R * static_cast<std::size_t>(d + 1));
  for (std::size_t i = 0; i < R; ++i) {
    std::uint64_t x = 1;
    for (int e = 0; e <= d; ++e) {
      pw[i * static_cast<std::size_t>(d + 1) + static_cast<std::size_t>(e)] = x;
      x = x * roots[i].value() % p;
    }
  }

  std::vector<ProjectiveMap> found;
  std::size_t examined = 0;
  const Monomial& m0 = terms.front().first;
  const std::uint64_t c0 = terms.front().second.value();
  for (const auto& sigma : kPerms) {
    examined += R * R;
    // M = P*diag(1,a,b) sends the coefficient of m' to F(m o sigma^-1) * a^m'_Y * b^m'_Z.
    auto source = [&](const Monomial& mp) {
      std::array<int, 3> e{};
      const std::array<int, 3> ep{mp.i, mp.j, mp.k};
      for (int r = 0; r < 3; ++r) e[static_cast<std::size_t>(r)] = ep[static_cast<std::size_t>(sigma[r])];
      return dense[static_cast<std::size_t>(monomial_index({e[0], e[1], e[2]}))].value();
    };
    const std::uint64_t s0 = source(m0);
    if (!s0) continue;
    struct Check {
      int y, z;
      std::uint64_t u, v;  // u * a^y b^z == v * a^y0 b^z0
    };
    std::vector<Check> checks;
    bool support_ok = true;
    for (std::size_t t = 1; t < terms.size(); ++t) {
      const auto& [m, c] = terms[t];
      const std::uint64_t s = source(m);
      if (!s) {
        support_ok = false;
        break;
      }
      checks.push_back({m.j, m.k, s * c0 % p, s0 * c.value() % p});
    }
    if (!support_ok) continue;
    for (std::size_t ia = 0; ia < R; ++ia) {
      const std::uint64_t* pa = &pw[ia * static_cast<std::size_t>(d + 1)];
      for (std::size_t ib = 0; ib < R; ++ib) {
        const std::uint64_t* pb = &pw[ib * static_cast<std::size_t>(d + 1)];
        const std::uint64_t ref = pa[m0.j] * pb[m0.k] % p;
        bool ok = true;
        for (const auto& ch : checks) {
          if (ch.u * (pa[ch.y] * pb[ch.z] % p) % p != ch.v * ref % p) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        const std::array<Fp, 3> dg{f.one(), roots[ia], roots[ib]};
        found.push_back(ProjectiveMap::monomial(
            sigma, {dg[static_cast<std::size_t>(sigma[0])], dg[static_cast<std::size_t>(sigma[1])],
                    dg[static_cast<std::size_t>(sigma[2])]}));
      }
    }
  }
  for (const auto& e : cat.extras()) {
    ++examined;
    if (invariant(F, e)) found.push_back(e);
  }
  sort_unique(found);

  bool added = false;
  if (!is_closed(found)) {
    FiniteGroup g = closure(found, f);
    for (const auto& m : g.elements())
      if (!std::binary_search(found.begin(), found.end(), m) && !invariant(F, m))
        throw Error(Errc::NotClosed, "product outside the stabilizer: " + render(m, f));
    found = g.elements();
    added = true;
  }
  std::vector<ProjectiveMap> gens = found;
  return {FiniteGroup(std::move(found), std::move(gens)), examined, added};
}

namespace {

ProjectiveMap mono_map(std::array<int, 3> src, std::array<Fp, 3> scale) { return ProjectiveMap::monomial(src, scale); }

Fp branch_sign(const Branch& b, const PrimeField& f) { return b.data.at("sign") == "-1" ? -f.one() : f.one(); }

// a with a^3 = eps
Fp cube_root_of_sign(Fp eps, const PrimeField& f) { return eps.is_one() ? f.one() : f.zeta(6); }

struct Candidate {
  CatalogLabel label;
  std::vector<ProjectiveMap> witnesses;
  std::optional<std::pair<Fp, Fp>> lambda_mu;
};

void transported_involutions(const ProjectiveMap& T, std::vector<ProjectiveMap>& out, const PrimeField& f) {
  const Fp one = f.one();
  out.push_back(conjugate(ProjectiveMap::diag(one, one, -one), T));
  out.push_back(conjugate(ProjectiveMap::diag(one, -one, one), T));
}

Candidate lambda_mu_candidate(const Branch& b, bool c1, const PrimeField& f) {
  const Fp l = f(std::stoll(b.data.at("lambda"))), m = f(std::stoll(b.data.at("mu")));
  const int k = std::stoi(b.data.at("ordering"));
  Candidate c{c1 ? CatalogLabel::Rho1A4 : CatalogLabel::Rho2A4, catalog_generators(CatalogLabel::Rho2Z3, f),
              std::make_pair(l, m)};
  transported_involutions(c1 ? phi(k + 1, l, m, f) : psi(k + 1, l, m, f), c.witnesses, f);
  return c;
}

void guard(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::GuardViolated, what);
}

std::vector<Candidate> c1_candidates(const BranchReport& br, const PrimeField& f) {
  std::vector<Candidate> out;
  const auto sigma = catalog_generators(CatalogLabel::Rho2Z3, f);
  std::set<std::string> ii_kinds;
  std::vector<ProjectiveMap> ii_wit = sigma;
  for (const auto& b : br.branches) {
    if (b.name == "i") {
      guard(br.predicates.at("i:a33!=a30"), "(1)(i) needs a33 != a30");
      guard(br.predicates.at("i:pairwise_distinct_mod_sign"), "(1)(i) needs a33, a30, a03 pairwise distinct mod +-1");
      out.push_back({CatalogLabel::Rho1Z3Sq, catalog_generators(CatalogLabel::Rho1Z3Sq, f), std::nullopt});
    } else if (b.name.starts_with("ii-")) {
      const Fp a = cube_root_of_sign(branch_sign(b, f), f), ai = a.inv(), one = f.one();
      if (b.name == "ii-a") ii_wit.push_back(mono_map({1, 0, 2}, {a, ai, one}));
      if (b.name == "ii-b") ii_wit.push_back(mono_map({0, 2, 1}, {one, a, ai}));
      if (b.name == "ii-c") ii_wit.push_back(mono_map({2, 1, 0}, {a, one, ai}));
      ii_kinds.insert(b.name);
    } else if (b.name == "iii") {
      const int l = std::stoi(b.data.at("l"));
      const Fp t = branch_sign(b, f).is_one() ? f.one() : f.zeta(6);
      const Fp s = f.zeta(6, l) / t;
      auto w = sigma;
      w.push_back(mono_map({1, 2, 0}, {s, t, f.one()}));
      out.push_back({CatalogLabel::Rho2Z3Sq, w, std::nullopt});
    } else if (b.name == "iv") {
      out.push_back(lambda_mu_candidate(b, true, f));
    }
  }
  if (ii_kinds.size() == 1) out.push_back({CatalogLabel::Rho2S3, ii_wit, std::nullopt});
  if (ii_kinds.size() >= 2) out.push_back({CatalogLabel::Rho1Z3xS3, ii_wit, std::nullopt});
  return out;
}

std::vector<Candidate> c2_candidates(const BranchReport& br, const PrimeField& f) {
  std::vector<Candidate> out;
  for (const auto& b : br.branches) {
    if (b.name == "i") {
      guard(br.predicates.at("i:(a24,a13)!=(0,0)"), "(2)(i) needs (a24, a13) != (0, 0)");
      const int r = std::stoi(b.data.at("r"));
      auto w = catalog_generators(CatalogLabel::Rho2Z3, f);
      w.push_back(mono_map({1, 2, 0}, {f.zeta(21, r), f.zeta(21, -4 * r), f.one()}));
      out.push_back({CatalogLabel::Rho2Z3Sq, w, std::nullopt});
    } else if (b.name == "ii") {
      out.push_back(lambda_mu_candidate(b, false, f));
    }
  }
  return out;
}

}  // namespace

Prediction predict(FamilyId id, const FamilyParams& params, const PrimeField& f) {
  Prediction pr;
  pr.branches = branch_conditions(id, params, f);
  const auto& br = pr.branches;
  auto set = [&](CatalogLabel l) {
    pr.label = l;
    pr.witnesses = catalog_generators(l, f);
  };
  switch (id) {
    case FamilyId::Thm1:
    case FamilyId::Thm1Even:
      guard(br.predicates.at("L6:degree>=5_in_X_and_Y"), "L6 must have degree >= 5 in X and Y");
      guard(br.predicates.at("(L2,L4)!=(0,0)"), "(L2, L4) != (0, 0)");
      set(br.has("even") ? CatalogLabel::Rho1Z2Sq : CatalogLabel::Rho1Z2);
      break;
    case FamilyId::Thm2:
      guard(br.predicates.at("L3!=0") && br.predicates.at("L6!=0"), "L3 and L6 must be nonzero");
      set(CatalogLabel::Rho1Z3);
      break;
    case FamilyId::Thm2Special:
      guard(br.predicates.at("pairwise_distinct_mod_sign"), "a30, a03, a33 must be pairwise distinct mod +-1");
      set(CatalogLabel::Rho1Z3Sq);
      break;
    case FamilyId::C1Prime:
      guard(br.predicates.at("(a33,a12)!=(0,0)"), "(a33, a12) != (0, 0)");
      set(br.has("extra") ? CatalogLabel::Rho1Z3xS3 : CatalogLabel::Rho2S3);
      if (!br.has("extra")) {
        pr.witnesses = catalog_generators(CatalogLabel::Rho2Z3, f);
        pr.witnesses.push_back(mono_map({0, 2, 1}, {f.one(), f.one(), f.one()}));
      }
      break;
    case FamilyId::C1DoublePrime:
      guard(br.predicates.at("a11!=0"), "a11 != 0");
      set(CatalogLabel::Rho2Z3Sq);
      break;
    case FamilyId::C2Prime:
      guard(br.predicates.at("(a40,a32)!=(0,0)"), "(a40, a32) != (0, 0)");
      set(CatalogLabel::Rho2Z3Sq);
      break;
    case FamilyId::C1LambdaMu: set(CatalogLabel::Rho1A4); break;
    case FamilyId::C2LambdaMu: set(CatalogLabel::Rho2A4); break;
    case FamilyId::Fermat6: set(CatalogLabel::AutF6); break;
    case FamilyId::Klein6: set(CatalogLabel::AutK6); break;
    case FamilyId::C1:
    case FamilyId::C2:
    case FamilyId::C1A4:
    case FamilyId::C2A4: {
      const bool one = id == FamilyId::C1 || id == FamilyId::C1A4;
      auto cands = one ? c1_candidates(br, f) : c2_candidates(br, f);
      set(CatalogLabel::Rho2Z3);
      int best = label_order(pr.label, f);
      for (auto& c : cands) {
        const int o = label_order(c.label, f);
        if (o > best) {
          best = o;
          pr.label = c.label;
          pr.witnesses = c.witnesses;
          pr.lambda_mu = c.lambda_mu;
        }
      }
      if (cands.size() > 1) {
        std::string names;
        for (const auto& b : br.branches) names += (names.empty() ? "" : ",") + b.name;
        pr.notes.push_back("overlapping branches " + names + "; predicting the largest group");
      }
      break;
    }
  }
  if (const auto* b = br.find(id == FamilyId::C1A4 ? "iv" : "ii");
      b && (id == FamilyId::C1A4 || id == FamilyId::C2A4) && !pr.lambda_mu) {
    pr.lambda_mu = std::make_pair(f(std::stoll(b->data.at("lambda"))), f(std::stoll(b->data.at("mu"))));
  }
  return pr;
}

AutReport classify_form(const TernaryForm& F, const CandidateCatalog& cat, const Prediction& prediction,
                        bool allow_high_order, const PrimeField& f) {
  auto scan = stabilizer_in_catalog(F, cat);
  AutReport rep{.stabilizer = std::move(scan.group)};
  rep.closure_added = scan.closure_added;
  rep.examined = scan.examined;
  rep.prediction = prediction;
  rep.predicted = prediction.label;
  rep.identification = catalog_table(f).identify(rep.stabilizer);
  rep.fingerprint = fingerprint(rep.stabilizer);
  for (const auto& w : prediction.witnesses)
    (invariant(F, w) ? rep.verified_witnesses : rep.failed_witnesses).push_back(w);
  for (const auto& m : rep.stabilizer.elements())
    if (order(m) > 3) rep.high_order.push_back(m);
  rep.degenerate = !allow_high_order && !rep.high_order.empty();
  const auto& cands = rep.identification.candidates;
  rep.agrees = std::find(cands.begin(), cands.end(), rep.predicted) != cands.end();
  rep.label = rep.agrees ? rep.predicted : rep.identification.label;
  return rep;
}

AutReport classify(FamilyId id, const FamilyParams& params, const PrimeField& f) {
  const TernaryForm F = build(id, params, f);
  // a singular curve is reported as such before any family guard
  if (!is_smooth(F)) throw Error(Errc::NotSmooth, "form is singular: " + render(F));
  Prediction pr = predict(id, params, f);
  const CandidateCatalog cat = pr.lambda_mu ? CandidateCatalog(f, pr.lambda_mu->first, pr.lambda_mu->second)
                                            : CandidateCatalog(f);
  const bool allow = id == FamilyId::Fermat6 || id == FamilyId::Klein6;
  return classify_form(F, cat, pr, allow, f);
}

std::string_view transport_name(TransportCase c) {
  switch (c) {
    case TransportCase::C1A4: return "c1a4";
    case TransportCase::C2A4: return "c2a4";
    case TransportCase::Cor3123: return "cor3123";
  }
  return "?";
}

namespace {

bool invariant_under(const TernaryForm& F, CatalogLabel l, const PrimeField& f) {
  for (const auto& g : catalog_table(f).group(l).elements())
    if (!invariant(F, g)) return false;
  return true;
}

// Monomials where image/target differs from the ratio fixed by the X^6 term.
std::vector<Monomial> mismatches(const TernaryForm& image, const TernaryForm& target) {
  std::vector<Monomial> out;
  const Monomial x6{6, 0, 0};
  const Fp ti = target.coefficient(x6), ii = image.coefficient(x6);
  for (const auto& m : monomials(image.degree()))
    if (!(image.coefficient(m) * ti == target.coefficient(m) * ii)) out.push_back(m);
  return out;
}

}  // namespace

TransportReport verify_transport(TransportCase which, Fp lambda, Fp mu, const PrimeField& f, int ordering) {
  const LambdaMuParams lm{lambda, mu, ordering};
  TernaryForm image(6, f);
  std::optional<TernaryForm> target;
  CatalogLabel group = CatalogLabel::Rho1A4;
  switch (which) {
    case TransportCase::C1A4:
      image = substitute(build(FamilyId::C1A4, lm, f), phi(ordering + 1, lambda, mu, f));
      target = c1_lambda_mu(f_coeffs(lambda, mu, f), f);
      break;
    case TransportCase::C2A4:
      image = substitute(build(FamilyId::C2A4, lm, f), psi(ordering + 1, lambda, mu, f));
      target = c2_lambda_mu(g_coeffs(lambda, mu, f), f);
      group = CatalogLabel::Rho2A4;
      break;
    case TransportCase::Cor3123:
      image = substitute(substitute(build(FamilyId::C2A4, lm, f), psi(ordering + 1, lambda, mu, f)), cor3123_map(f));
      break;
  }
  TransportReport rep{.which = which, .lambda = lambda, .mu = mu, .ordering = ordering, .image = image};
  rep.target = target;
  if (target) {
    rep.proportional = proportional(image, *target).has_value();
    if (!rep.proportional) rep.mismatched = mismatches(image, *target);
  }
  rep.invariant = invariant_under(image, group, f);
  const Fp x6 = image.coefficient({6, 0, 0});
  if (!x6.is_zero())
    for (const Monomial& m : {Monomial{6, 0, 0}, Monomial{0, 6, 0}, Monomial{0, 0, 6}})
      rep.core_coefficients.push_back(image.coefficient(m) / x6);
  rep.core_matches = rep.core_coefficients.size() == 3 && rep.core_coefficients[0].is_one() &&
                     rep.core_coefficients[1] == f.zeta(3, -1) && rep.core_coefficients[2] == f.zeta(3);
  return rep;
}

std::vector<std::array<Fp, 3>> fixed_points(const ProjectiveMap& m, const PrimeField& f) {
  if (m.is_identity()) throw Error(Errc::BadParams, "every point is fixed by the identity");
  std::vector<std::array<Fp, 3>> out;
  auto normalize = [&](std::array<Fp, 3> v) {
    for (const Fp& x : v)
      if (!x.is_zero()) {
        const Fp s = x.inv();
        for (Fp& y : v) y *= s;
        break;
      }
    return v;
  };
  for (std::uint32_t ev = 0; ev < f.p(); ++ev) {
    Matrix3 a = m.matrix();
    const Fp e = f(ev);
    a[0] -= e, a[4] -= e, a[8] -= e;
    auto row = [&](int r) { return std::array<Fp, 3>{a[3 * r], a[3 * r + 1], a[3 * r + 2]}; };
    auto cross = [&](const std::array<Fp, 3>& u, const std::array<Fp, 3>& v) {
      return std::array<Fp, 3>{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
    };
    auto nonzero = [](const std::array<Fp, 3>& v) { return !(v[0].is_zero() && v[1].is_zero() && v[2].is_zero()); };
    const Fp det = a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
                   a[2] * (a[3] * a[7] - a[4] * a[6]);
    if (!det.is_zero()) continue;
    // rank 2: the kernel is the cross product of two independent rows
    std::optional<std::array<Fp, 3>> k;
    for (int r = 0; r < 3 && !k; ++r)
      for (int s = r + 1; s < 3 && !k; ++s)
        if (auto c = cross(row(r), row(s)); nonzero(c)) k = c;
    if (k) {
      out.push_back(normalize(*k));
      continue;
    }
    // rank 1: a line of fixed points
    std::array<Fp, 3> n{};
    for (int r = 0; r < 3; ++r)
      if (nonzero(row(r))) {
        n = row(r);
        break;
      }
    for (std::uint32_t y = 0; y < f.p(); ++y)
      for (std::uint32_t z = 0; z < f.p(); ++z) {
        const std::array<Fp, 3> v{f.one(), f(y), f(z)};
        if ((n[0] * v[0] + n[1] * v[1] + n[2] * v[2]).is_zero()) out.push_back(v);
      }
    for (std::uint32_t z = 0; z < f.p(); ++z) {
      const std::array<Fp, 3> v{f.zero(), f.one(), f(z)};
      if ((n[1] + n[2] * v[2]).is_zero()) out.push_back(v);
    }
    if (n[2].is_zero()) out.push_back({f.zero(), f.zero(), f.one()});
  }
  return out;
}

}  // namespace sextic
