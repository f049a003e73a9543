#include "sextic/families.hpp"

#include <algorithm>
#include <set>

#include "sextic/expr.hpp"

namespace sextic {

namespace {

constexpr std::pair<FamilyId, std::string_view> kNames[] = {
    {FamilyId::Thm1, "thm1"},
    {FamilyId::Thm1Even, "thm1-even"},
    {FamilyId::Thm2, "thm2"},
    {FamilyId::Thm2Special, "thm2-special"},
    {FamilyId::C1, "c1"},
    {FamilyId::C2, "c2"},
    {FamilyId::C1Prime, "c1-prime"},
    {FamilyId::C1DoublePrime, "c1-double-prime"},
    {FamilyId::C2Prime, "c2-prime"},
    {FamilyId::C1A4, "c1-a4"},
    {FamilyId::C2A4, "c2-a4"},
    {FamilyId::C1LambdaMu, "c1-lambda-mu"},
    {FamilyId::C2LambdaMu, "c2-lambda-mu"},
    {FamilyId::Fermat6, "fermat6"},
    {FamilyId::Klein6, "klein6"},
};

using Terms = std::vector<TernaryForm::Term>;

Monomial mono(int i, int j, int k) { return {i, j, k}; }

TernaryForm sextic_from(const PrimeField& f, Terms terms) { return TernaryForm(6, f, std::move(terms)); }

[[noreturn]] void bad(const std::string& msg) { throw Error(Errc::BadParams, msg); }

bool is_binary(const TernaryForm& F) { return degree_in(F, Var::Z) == 0; }

// Z^a * L for a binary form L, as a sextic.
void add_z_multiple(Terms& out, int z_exp, const TernaryForm& L) {
  for (const auto& [m, c] : L.terms()) out.emplace_back(Monomial{m.i, m.j, m.k + z_exp}, c);
}

int small_int(Fp v) {
  const std::uint32_t p = v.modulus();
  return v.value() > p / 2 ? static_cast<int>(v.value()) - static_cast<int>(p) : static_cast<int>(v.value());
}

int mod(int a, int n) { return ((a % n) + n) % n; }

std::string residue(Fp c) { return std::to_string(c.value()); }

}  // namespace

std::string_view family_name(FamilyId id) {
  for (const auto& [fid, name] : kNames)
    if (fid == id) return name;
  return "unknown";
}

std::optional<FamilyId> family_from_name(std::string_view name) {
  for (const auto& [fid, n] : kNames)
    if (n == name) return fid;
  return std::nullopt;
}

std::vector<std::string> param_keys(FamilyId id) {
  switch (id) {
    case FamilyId::Thm1:
    case FamilyId::Thm1Even: return {"L2", "L4", "L6"};
    case FamilyId::Thm2: return {"L3", "L6"};
    case FamilyId::Thm2Special: return {"a30", "a03", "a33"};
    case FamilyId::C1: return {"a41", "a14", "a11", "a22", "a33", "a30", "a03"};
    case FamilyId::C2: return {"a32", "a13", "a21", "a24", "a02", "a40"};
    case FamilyId::C1Prime: return {"a41", "a33", "a22", "a12", "a03"};
    case FamilyId::C1DoublePrime: return {"l", "a11", "a30"};
    case FamilyId::C2Prime: return {"a40", "a32", "r"};
    case FamilyId::C1A4:
    case FamilyId::C2A4:
    case FamilyId::C1LambdaMu:
    case FamilyId::C2LambdaMu: return {"lambda", "mu", "ordering"};
    case FamilyId::Fermat6:
    case FamilyId::Klein6: return {};
  }
  return {};
}

FamilyParams params_from_assignments(FamilyId id, const std::vector<std::pair<std::string, std::string>>& kv,
                                     const PrimeField& f) {
  const auto keys = param_keys(id);
  std::map<std::string, std::string> given;
  for (const auto& [k, v] : kv) {
    if (std::find(keys.begin(), keys.end(), k) == keys.end())
      bad("unknown parameter '" + k + "' for family " + std::string(family_name(id)));
    given[k] = v;
  }
  auto scalar = [&](const std::string& k) { return given.count(k) ? parse_scalar(given[k], f) : f.zero(); };
  auto required = [&](const std::string& k) {
    if (!given.count(k)) bad("missing parameter '" + k + "' for family " + std::string(family_name(id)));
    return parse_scalar(given[k], f);
  };
  auto form = [&](const std::string& k, int degree) {
    return given.count(k) ? parse_form(given[k], f, degree) : TernaryForm(degree, f);
  };
  switch (id) {
    case FamilyId::Thm1:
    case FamilyId::Thm1Even: return Thm1Params{form("L2", 2), form("L4", 4), form("L6", 6)};
    case FamilyId::Thm2: return Thm2Params{form("L3", 3), form("L6", 6)};
    case FamilyId::Thm2Special: return Thm2SpecialParams{scalar("a30"), scalar("a03"), scalar("a33")};
    case FamilyId::C1:
      return C1Params{scalar("a41"), scalar("a14"), scalar("a11"), scalar("a22"),
                      scalar("a33"), scalar("a30"), scalar("a03")};
    case FamilyId::C2:
      return C2Params{scalar("a32"), scalar("a13"), scalar("a21"), scalar("a24"), scalar("a02"), scalar("a40")};
    case FamilyId::C1Prime:
      return C1PrimeParams{scalar("a41"), scalar("a33"), scalar("a22"), scalar("a12"), scalar("a03")};
    case FamilyId::C1DoublePrime: return C1DoublePrimeParams{small_int(required("l")), scalar("a11"), scalar("a30")};
    case FamilyId::C2Prime: return C2PrimeParams{scalar("a40"), scalar("a32"), small_int(scalar("r"))};
    case FamilyId::C1A4:
    case FamilyId::C2A4:
    case FamilyId::C1LambdaMu:
    case FamilyId::C2LambdaMu:
      return LambdaMuParams{required("lambda"), required("mu"), small_int(scalar("ordering"))};
    case FamilyId::Fermat6:
    case FamilyId::Klein6: return NoParams{};
  }
  return NoParams{};
}

FamilyParams params_from_text(FamilyId id, std::string_view text, const PrimeField& f) {
  return params_from_assignments(id, parse_assignments(text), f);
}

std::vector<std::pair<std::string, std::string>> params_to_assignments(const FamilyParams& params) {
  using Out = std::vector<std::pair<std::string, std::string>>;
  struct Visitor {
    Out operator()(const NoParams&) const { return {}; }
    Out operator()(const Thm1Params& p) const { return {{"L2", render(p.l2)}, {"L4", render(p.l4)}, {"L6", render(p.l6)}}; }
    Out operator()(const Thm2Params& p) const { return {{"L3", render(p.l3)}, {"L6", render(p.l6)}}; }
    Out operator()(const Thm2SpecialParams& p) const {
      return {{"a30", residue(p.a30)}, {"a03", residue(p.a03)}, {"a33", residue(p.a33)}};
    }
    Out operator()(const C1Params& p) const {
      return {{"a41", residue(p.a41)}, {"a14", residue(p.a14)}, {"a11", residue(p.a11)}, {"a22", residue(p.a22)},
              {"a33", residue(p.a33)}, {"a30", residue(p.a30)}, {"a03", residue(p.a03)}};
    }
    Out operator()(const C2Params& p) const {
      return {{"a32", residue(p.a32)}, {"a13", residue(p.a13)}, {"a21", residue(p.a21)},
              {"a24", residue(p.a24)}, {"a02", residue(p.a02)}, {"a40", residue(p.a40)}};
    }
    Out operator()(const C1PrimeParams& p) const {
      return {{"a41", residue(p.a41)}, {"a33", residue(p.a33)}, {"a22", residue(p.a22)},
              {"a12", residue(p.a12)}, {"a03", residue(p.a03)}};
    }
    Out operator()(const C1DoublePrimeParams& p) const {
      return {{"l", std::to_string(p.l)}, {"a11", residue(p.a11)}, {"a30", residue(p.a30)}};
    }
    Out operator()(const C2PrimeParams& p) const {
      return {{"a40", residue(p.a40)}, {"a32", residue(p.a32)}, {"r", std::to_string(p.r)}};
    }
    Out operator()(const LambdaMuParams& p) const {
      return {{"lambda", residue(p.lambda)}, {"mu", residue(p.mu)}, {"ordering", std::to_string(p.ordering)}};
    }
  };
  return std::visit(Visitor{}, params);
}

TernaryForm fermat6(const PrimeField& f) {
  return sextic_from(f, {{mono(6, 0, 0), f.one()}, {mono(0, 6, 0), f.one()}, {mono(0, 0, 6), f.one()}});
}

TernaryForm klein6(const PrimeField& f) {
  return sextic_from(f, {{mono(5, 1, 0), f.one()}, {mono(0, 5, 1), f.one()}, {mono(1, 0, 5), f.one()}});
}

namespace {

TernaryForm build_c1(const C1Params& a, const PrimeField& f) {
  Terms t{{mono(6, 0, 0), f.one()}, {mono(0, 6, 0), f.one()}, {mono(0, 0, 6), f.one()},
          {mono(4, 1, 1), a.a41},  {mono(1, 4, 1), a.a14},  {mono(1, 1, 4), a.a11},
          {mono(2, 2, 2), a.a22},  {mono(3, 3, 0), a.a33},  {mono(3, 0, 3), a.a30},
          {mono(0, 3, 3), a.a03}};
  return sextic_from(f, std::move(t));
}

TernaryForm build_c2(const C2Params& a, const PrimeField& f) {
  Terms t{{mono(5, 1, 0), f.one()}, {mono(0, 5, 1), f.one()}, {mono(1, 0, 5), f.one()},
          {mono(3, 2, 1), a.a32},  {mono(1, 3, 2), a.a13},  {mono(2, 1, 3), a.a21},
          {mono(2, 4, 0), a.a24},  {mono(0, 2, 4), a.a02},  {mono(4, 0, 2), a.a40}};
  return sextic_from(f, std::move(t));
}

void check_lambda_mu(Fp lambda, Fp mu) {
  if (lambda.is_zero() || mu.is_zero()) bad("lambda and mu must be nonzero");
}

void check_ordering(int k) {
  if (k < 0 || k > 2) bad("ordering must be 0, 1 or 2");
}

template <class T>
const T& expect_params(const FamilyParams& params, FamilyId id) {
  if (auto* p = std::get_if<T>(&params)) return *p;
  bad("parameter record does not match family " + std::string(family_name(id)));
}

}  // namespace

C1Params a4_c1_params(Fp lambda, Fp mu, const PrimeField& f, int ordering) {
  check_lambda_mu(lambda, mu);
  check_ordering(ordering);
  const Fp l = lambda, m = mu, l6 = l.pow(6), m6 = m.pow(6);
  auto c = [&](std::int64_t v) { return f(v); };
  // first triple
  const Fp A = c(2) * (c(29) - c(54) * l6 - c(54) * m6) / (c(27) * l * m);
  const Fp B = c(2) * (c(27) * m6 - c(54) * l6 - c(52)) / (c(27) * l * m.pow(4));
  const Fp C = c(2) * (c(27) * l6 - c(54) * m6 - c(52)) / (c(27) * l.pow(4) * m);
  // second triple
  const Fp D = c(2) * (c(81) * l6 - c(27) * m6 - c(26)) / (c(27) * m.pow(3));
  const Fp E = c(2) * (c(81) * m6 - c(27) * l6 - c(26)) / (c(27) * l.pow(3));
  const Fp F = c(2) * (c(82) - c(27) * l6 - c(27) * m6) / (c(27) * l.pow(3) * m.pow(3));
  const Fp a22 = (c(9) * l6 + c(9) * m6 + c(10)) / (c(3) * l * l * m * m);
  C1Params p{};
  p.a22 = a22;
  switch (ordering) {
    case 0:  // (a41,a11,a14), (a30,a33,a03)
      p.a41 = A, p.a11 = B, p.a14 = C;
      p.a30 = D, p.a33 = E, p.a03 = F;
      break;
    case 1:  // (a14,a41,a11), (a33,a03,a30)
      p.a14 = A, p.a41 = B, p.a11 = C;
      p.a33 = D, p.a03 = E, p.a30 = F;
      break;
    default:  // (a11,a14,a41), (a03,a30,a33)
      p.a11 = A, p.a14 = B, p.a41 = C;
      p.a03 = D, p.a30 = E, p.a33 = F;
      break;
  }
  return p;
}

C2Params a4_c2_params(Fp lambda, Fp mu, const PrimeField& f, int ordering) {
  check_lambda_mu(lambda, mu);
  check_ordering(ordering);
  const Fp l = lambda, m = mu, l5m = l.pow(5) * m, m5 = m.pow(5);
  auto c = [&](std::int64_t v) { return f(v); };
  const Fp A1 = (l5m + c(4) * m5) / (c(2) * l.pow(4));
  const Fp A2 = (l + c(4) * l5m) / (c(2) * m * m);
  const Fp A3 = (c(4) * l + m5) / (c(2) * l * l * m.pow(4));
  const Fp B1 = c(2) * (c(2) * l5m + c(2) * l + m5) / (l.pow(3) * m * m);
  const Fp B2 = (c(2) * l5m + c(4) * l + c(4) * m5) / (l * l * m);
  const Fp B3 = c(2) * (c(2) * l5m + l + c(2) * m5) / (l * m.pow(3));
  C2Params p{};
  switch (ordering) {
    case 0:  // (a24,a40,a02), (a13,a32,a21)
      p.a24 = A1, p.a40 = A2, p.a02 = A3;
      p.a13 = B1, p.a32 = B2, p.a21 = B3;
      break;
    case 1:  // (a02,a24,a40), (a21,a13,a32)
      p.a02 = A1, p.a24 = A2, p.a40 = A3;
      p.a21 = B1, p.a13 = B2, p.a32 = B3;
      break;
    default:  // (a40,a02,a24), (a32,a21,a13)
      p.a40 = A1, p.a02 = A2, p.a24 = A3;
      p.a32 = B1, p.a21 = B2, p.a13 = B3;
      break;
  }
  return p;
}

FCoeffs f_coeffs(Fp lambda, Fp mu, const PrimeField& f) {
  const Fp l6 = lambda.pow(6), m6 = mu.pow(6);
  auto f2 = [&](Fp a6, Fp b6) { return f(81) * (f.one() + f.zeta(3) * a6 + f.zeta(3, -1) * b6); };
  return {f(3) * (f(80) + f(81) * l6 + f(81) * m6), f2(l6, m6), f2(m6, l6)};
}

GCoeffs g_coeffs(Fp lambda, Fp mu, const PrimeField& f) {
  const Fp l = lambda, m = mu, l5m = l.pow(5) * m, m5 = m.pow(5);
  const Fp den = l5m + l + m5;
  if (den.is_zero()) bad("g denominator l^5 m + l + m^5 vanishes");
  const Fp s3 = f.sqrt3();
  const Fp g1 = s3 * f.zeta(9) * (f.zeta(4) * l5m + f.zeta(12) * l + f.zeta(12, 5) * m5) / den;
  const Fp g2 = s3 * f.zeta(18) * (f.zeta(12, 5) * l5m + f.zeta(12) * l + f.zeta(4) * m5) / den;
  return {g1, g2};
}

TernaryForm c1_lambda_mu(const FCoeffs& c, const PrimeField& f) {
  Terms t{{mono(6, 0, 0), f.one()}, {mono(0, 6, 0), f.one()}, {mono(0, 0, 6), f.one()}, {mono(2, 2, 2), c.f1},
          {mono(4, 2, 0), c.f2_lm}, {mono(2, 0, 4), c.f2_lm}, {mono(0, 4, 2), c.f2_lm},
          {mono(4, 0, 2), c.f2_ml}, {mono(2, 4, 0), c.f2_ml}, {mono(0, 2, 4), c.f2_ml}};
  return sextic_from(f, std::move(t));
}

TernaryForm c2_lambda_mu(const GCoeffs& c, const PrimeField& f) {
  Terms t{{mono(6, 0, 0), f.one()},
          {mono(0, 6, 0), f.one()},
          {mono(0, 0, 6), f.one()},
          {mono(4, 2, 0), c.g1 * f.zeta(3, -1)},
          {mono(2, 0, 4), c.g1},
          {mono(0, 4, 2), c.g1},
          {mono(4, 0, 2), c.g2},
          {mono(2, 4, 0), c.g2 * f.zeta(3)},
          {mono(0, 2, 4), c.g2}};
  return sextic_from(f, std::move(t));
}

TernaryForm build(FamilyId id, const FamilyParams& params, const PrimeField& f) {
  switch (id) {
    case FamilyId::Thm1:
    case FamilyId::Thm1Even: {
      const auto& p = expect_params<Thm1Params>(params, id);
      if (p.l2.degree() != 2 || p.l4.degree() != 4 || p.l6.degree() != 6) bad("L2, L4, L6 have degrees 2, 4, 6");
      if (!is_binary(p.l2) || !is_binary(p.l4) || !is_binary(p.l6)) bad("L2, L4, L6 must be binary forms in X, Y");
      if (degree_in(p.l6, Var::X) < 5 || degree_in(p.l6, Var::Y) < 5) bad("L6 must have degree >= 5 in X and in Y");
      if (p.l2.is_zero() && p.l4.is_zero()) bad("L2 and L4 cannot both vanish");
      if (id == FamilyId::Thm1Even &&
          !(is_in_even_subring(p.l2) && is_in_even_subring(p.l4) && is_in_even_subring(p.l6)))
        bad("thm1-even needs L2, L4, L6 in K[X^2, Y^2]");
      Terms t{{mono(0, 0, 6), f.one()}};
      add_z_multiple(t, 4, p.l2);
      add_z_multiple(t, 2, p.l4);
      add_z_multiple(t, 0, p.l6);
      return sextic_from(f, std::move(t));
    }
    case FamilyId::Thm2: {
      const auto& p = expect_params<Thm2Params>(params, id);
      if (p.l3.degree() != 3 || p.l6.degree() != 6) bad("L3, L6 have degrees 3, 6");
      if (!is_binary(p.l3) || !is_binary(p.l6)) bad("L3, L6 must be binary forms in X, Y");
      if (p.l3.is_zero() || p.l6.is_zero()) bad("neither L3 nor L6 may vanish");
      Terms t{{mono(0, 0, 6), f.one()}};
      add_z_multiple(t, 3, p.l3);
      add_z_multiple(t, 0, p.l6);
      return sextic_from(f, std::move(t));
    }
    case FamilyId::Thm2Special: {
      const auto& p = expect_params<Thm2SpecialParams>(params, id);
      return sextic_from(f, {{mono(6, 0, 0), f.one()},
                             {mono(0, 6, 0), f.one()},
                             {mono(0, 0, 6), f.one()},
                             {mono(3, 0, 3), p.a30},
                             {mono(0, 3, 3), p.a03},
                             {mono(3, 3, 0), p.a33}});
    }
    case FamilyId::C1: return build_c1(expect_params<C1Params>(params, id), f);
    case FamilyId::C2: return build_c2(expect_params<C2Params>(params, id), f);
    case FamilyId::C1Prime: {
      const auto& p = expect_params<C1PrimeParams>(params, id);
      return sextic_from(f, {{mono(6, 0, 0), f.one()},
                             {mono(0, 6, 0), f.one()},
                             {mono(0, 0, 6), f.one()},
                             {mono(4, 1, 1), p.a41},
                             {mono(3, 3, 0), p.a33},
                             {mono(3, 0, 3), p.a33},
                             {mono(2, 2, 2), p.a22},
                             {mono(1, 4, 1), p.a12},
                             {mono(1, 1, 4), p.a12},
                             {mono(0, 3, 3), p.a03}});
    }
    case FamilyId::C1DoublePrime: {
      const auto& p = expect_params<C1DoublePrimeParams>(params, id);
      if (mod(p.l, 3) == 0) bad("l must not be 0 or 3 mod 6");
      const Fp e = f.zeta(6, 2 * p.l), ei = f.zeta(6, -2 * p.l);
      return sextic_from(f, {{mono(6, 0, 0), f.one()},
                             {mono(0, 6, 0), e},
                             {mono(0, 0, 6), ei},
                             {mono(4, 1, 1), p.a11},
                             {mono(1, 4, 1), p.a11 * e},
                             {mono(1, 1, 4), p.a11 * ei},
                             {mono(3, 3, 0), p.a30},
                             {mono(3, 0, 3), p.a30 * ei},
                             {mono(0, 3, 3), p.a30 * e}});
    }
    case FamilyId::C2Prime: {
      const auto& p = expect_params<C2PrimeParams>(params, id);
      const Fp a = p.a40 * f.zeta(21, 4 * p.r), b = p.a32 * f.zeta(21, -p.r);
      return sextic_from(f, {{mono(5, 1, 0), f.one()},
                             {mono(0, 5, 1), f.one()},
                             {mono(1, 0, 5), f.one()},
                             {mono(4, 0, 2), a},
                             {mono(2, 4, 0), a},
                             {mono(0, 2, 4), a},
                             {mono(3, 2, 1), b},
                             {mono(2, 1, 3), b},
                             {mono(1, 3, 2), b}});
    }
    case FamilyId::C1A4: {
      const auto& p = expect_params<LambdaMuParams>(params, id);
      return build_c1(a4_c1_params(p.lambda, p.mu, f, p.ordering), f);
    }
    case FamilyId::C2A4: {
      const auto& p = expect_params<LambdaMuParams>(params, id);
      return build_c2(a4_c2_params(p.lambda, p.mu, f, p.ordering), f);
    }
    case FamilyId::C1LambdaMu: {
      const auto& p = expect_params<LambdaMuParams>(params, id);
      check_lambda_mu(p.lambda, p.mu);
      return c1_lambda_mu(f_coeffs(p.lambda, p.mu, f), f);
    }
    case FamilyId::C2LambdaMu: {
      const auto& p = expect_params<LambdaMuParams>(params, id);
      check_lambda_mu(p.lambda, p.mu);
      return c2_lambda_mu(g_coeffs(p.lambda, p.mu, f), f);
    }
    case FamilyId::Fermat6: return fermat6(f);
    case FamilyId::Klein6: return klein6(f);
  }
  bad("unknown family");
}

ProjectiveMap phi(int index, Fp lambda, Fp mu, const PrimeField& f) {
  check_lambda_mu(lambda, mu);
  const Fp one = f.one(), w = f.zeta(3), wi = f.zeta(3, -1);
  // rows of phi_1 and phi_4 (conjugate cube roots)
  const std::array<Fp, 3> r1{one, one, one};
  const std::array<Fp, 3> rl{lambda, wi * lambda, w * lambda}, rm{mu, w * mu, wi * mu};
  const std::array<Fp, 3> sl{lambda, w * lambda, wi * lambda}, sm{mu, wi * mu, w * mu};
  std::array<std::array<Fp, 3>, 3> rows;
  switch (index) {
    case 1: rows = {r1, rl, rm}; break;
    case 2: rows = {rm, r1, rl}; break;
    case 3: rows = {rl, rm, r1}; break;
    case 4: rows = {r1, sl, sm}; break;
    case 5: rows = {sm, r1, sl}; break;
    case 6: rows = {sl, sm, r1}; break;
    default: bad("phi index must be 1..6");
  }
  Matrix3 m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m[static_cast<std::size_t>(3 * r + c)] = rows[r][c];
  return ProjectiveMap::from_matrix(m);
}

ProjectiveMap psi(int index, Fp lambda, Fp mu, const PrimeField& f) {
  check_lambda_mu(lambda, mu);
  auto z = [&](int k) { return f.zeta(18, k); };
  const std::array<Fp, 3> r1{f.one(), z(-2), z(-1)};
  const std::array<Fp, 3> rl{lambda, z(-8) * lambda, z(5) * lambda}, rm{mu, z(4) * mu, z(-7) * mu};
  const std::array<Fp, 3> s1{f.one(), z(2), z(1)};
  const std::array<Fp, 3> sl{lambda, z(-4) * lambda, z(7) * lambda}, sm{mu, z(8) * mu, z(-5) * mu};
  std::array<std::array<Fp, 3>, 3> rows;
  switch (index) {
    case 1: rows = {r1, rl, rm}; break;
    case 2: rows = {rm, r1, rl}; break;
    case 3: rows = {rl, rm, r1}; break;
    case 4: rows = {s1, sl, sm}; break;
    case 5: rows = {sm, s1, sl}; break;
    case 6: rows = {sl, sm, s1}; break;
    default: bad("psi index must be 1..6");
  }
  Matrix3 m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m[static_cast<std::size_t>(3 * r + c)] = rows[r][c];
  return ProjectiveMap::from_matrix(m);
}

std::optional<int> find_klein_normalizer(int r) {
  for (int rp = 0; rp < 21; ++rp)
    if (mod(18 * rp + r, 21) == 0 && mod(12 * rp - 4 * r, 21) == 0) return rp;
  return std::nullopt;
}

ProjectiveMap klein_normalizer(int r, int r_prime, const PrimeField& f) {
  if (mod(18 * r_prime + r, 21) != 0 || mod(12 * r_prime - 4 * r, 21) != 0)
    bad("21 must divide 18r'+r and 12r'-4r (r=" + std::to_string(r) + ", r'=" + std::to_string(r_prime) + ")");
  return ProjectiveMap::diag(f.one(), f.zeta(21, r_prime), f.zeta(21, 17 * r_prime));
}

ProjectiveMap cor3123_map(const PrimeField& f) {
  const Fp t = f.zeta(18);
  return ProjectiveMap::diag(f.one(), t * t, t);
}

TernaryForm core(const TernaryForm& F) {
  auto top = [](const Monomial& m) { return std::max({m.i, m.j, m.k}); };
  int best = 0;
  for (const auto& [m, c] : F.terms()) best = std::max(best, top(m));
  std::vector<TernaryForm::Term> t;
  for (const auto& [m, c] : F.terms())
    if (top(m) == best) t.emplace_back(m, c);
  return TernaryForm(F.degree(), F.modulus(), std::move(t));
}

bool BranchReport::has(std::string_view name) const { return find(name) != nullptr; }

const Branch* BranchReport::find(std::string_view name) const {
  for (const auto& b : branches)
    if (b.name == name) return &b;
  return nullptr;
}

namespace {

bool eq_mod_sign(Fp a, Fp b) { return a == b || a == -b; }

bool pairwise_distinct_mod_sign(Fp a, Fp b, Fp c) {
  return !eq_mod_sign(a, b) && !eq_mod_sign(a, c) && !eq_mod_sign(b, c);
}

bool same_c1(const C1Params& a, const C1Params& b) {
  return a.a41 == b.a41 && a.a14 == b.a14 && a.a11 == b.a11 && a.a22 == b.a22 && a.a33 == b.a33 &&
         a.a30 == b.a30 && a.a03 == b.a03;
}

bool same_c2(const C2Params& a, const C2Params& b) {
  return a.a32 == b.a32 && a.a13 == b.a13 && a.a21 == b.a21 && a.a24 == b.a24 && a.a02 == b.a02 && a.a40 == b.a40;
}

Branch lambda_mu_branch(std::string name, Fp lambda, Fp mu, int ordering) {
  return {std::move(name),
          {{"lambda", residue(lambda)}, {"mu", residue(mu)}, {"ordering", std::to_string(ordering)}}};
}

// Slot holding the first listed value of the first triple, per ordering.
Fp c1_first_slot(const C1Params& a, int k) { return k == 0 ? a.a41 : k == 1 ? a.a14 : a.a11; }
// Slot holding the second listed value of the first C2 triple, per ordering.
Fp c2_second_slot(const C2Params& a, int k) { return k == 0 ? a.a40 : k == 1 ? a.a24 : a.a02; }

// Roots of a w^2 + b w + c in F_p.
std::vector<Fp> roots2(Fp a, Fp b, Fp c, const PrimeField& f) {
  std::vector<Fp> out;
  if (a.is_zero()) {
    if (!b.is_zero()) out.push_back(-c / b);
    return out;
  }
  const Fp disc = b * b - f(4) * a * c;
  auto s = f.sqrt(disc);
  if (!s) return out;
  out.push_back((-b + *s) / (f(2) * a));
  if (!s->is_zero()) out.push_back((-b - *s) / (f(2) * a));
  return out;
}

std::optional<Branch> detect_c1_iv(const C1Params& a, const PrimeField& f) {
  for (int k = 0; k < 3; ++k) {
    // 36 a22 w^2 + 27 A w - 178 = 0 with w = lambda*mu
    for (Fp w : roots2(f(36) * a.a22, f(27) * c1_first_slot(a, k), f(-178), f)) {
      if (w.is_zero()) continue;
      for (std::uint32_t lv = 1; lv < f.p(); ++lv) {
        const Fp l = f(lv), m = w / l;
        if (same_c1(a4_c1_params(l, m, f, k), a)) return lambda_mu_branch("iv", l, m, k);
      }
    }
  }
  return std::nullopt;
}

std::optional<Branch> detect_c2_ii(const C2Params& a, const PrimeField& f) {
  for (int k = 0; k < 3; ++k) {
    const Fp B = c2_second_slot(a, k);
    for (std::uint32_t lv = 1; lv < f.p(); ++lv) {
      const Fp l = f(lv);
      // 2 B mu^2 - 4 l^5 mu - l = 0
      for (Fp m : roots2(f(2) * B, -f(4) * l.pow(5), -l, f)) {
        if (m.is_zero()) continue;
        if (same_c2(a4_c2_params(l, m, f, k), a)) return lambda_mu_branch("ii", l, m, k);
      }
    }
  }
  return std::nullopt;
}

void c1_branches(const C1Params& a, const PrimeField& f, BranchReport& rep) {
  const Fp one = f.one();
  if (a.a41.is_zero() && a.a14.is_zero() && a.a11.is_zero() && a.a22.is_zero()) {
    rep.branches.push_back({"i", {}});
    rep.predicates["i:a33!=a30"] = !(a.a33 == a.a30);
    rep.predicates["i:pairwise_distinct_mod_sign"] = pairwise_distinct_mod_sign(a.a33, a.a30, a.a03);
  }
  // One common sign per involution.
  for (Fp eps : {one, -one}) {
    const std::string s = eps.is_one() ? "+1" : "-1";
    if (a.a14 == eps * a.a41 && a.a03 == eps * a.a30) rep.branches.push_back({"ii-a", {{"sign", s}}});
    if (a.a11 == eps * a.a14 && a.a30 == eps * a.a33) rep.branches.push_back({"ii-b", {{"sign", s}}});
    if (a.a11 == eps * a.a41 && a.a03 == eps * a.a33) rep.branches.push_back({"ii-c", {{"sign", s}}});
  }
  if (!a.a11.is_zero() && a.a22.is_zero()) {
    for (int l : {1, 2, 4, 5}) {
      if (!(a.a41 == f.zeta(6, l) * a.a11)) continue;
      for (Fp eps : {one, -one}) {
        const Fp sgn_l = (l % 2) ? -one : one;
        if (a.a14 == eps * f.zeta(6, -l) * a.a11 && a.a33 == eps * sgn_l * a.a30 && a.a03 == eps * a.a30)
          rep.branches.push_back({"iii", {{"l", std::to_string(l)}, {"sign", eps.is_one() ? "+1" : "-1"}}});
      }
    }
  }
  if (auto b = detect_c1_iv(a, f)) rep.branches.push_back(*b);
}

void c2_branches(const C2Params& a, const PrimeField& f, BranchReport& rep) {
  for (int r = 0; r < 21; ++r) {
    if (a.a02 == f.zeta(21, -12 * r) * a.a40 && a.a24 == f.zeta(21, 3 * r) * a.a40 &&
        a.a13 == f.zeta(21, -6 * r) * a.a32 && a.a21 == f.zeta(21, 3 * r) * a.a32) {
      rep.branches.push_back({"i", {{"r", std::to_string(r)}}});
      rep.predicates["i:(a24,a13)!=(0,0)"] = !(a.a24.is_zero() && a.a13.is_zero());
      break;
    }
  }
  if (auto b = detect_c2_ii(a, f)) rep.branches.push_back(*b);
}

}  // namespace

BranchReport branch_conditions(FamilyId id, const FamilyParams& params, const PrimeField& f) {
  BranchReport rep;
  switch (id) {
    case FamilyId::Thm1:
    case FamilyId::Thm1Even: {
      const auto& p = expect_params<Thm1Params>(params, id);
      rep.predicates["L6:degree>=5_in_X_and_Y"] = degree_in(p.l6, Var::X) >= 5 && degree_in(p.l6, Var::Y) >= 5;
      rep.predicates["(L2,L4)!=(0,0)"] = !(p.l2.is_zero() && p.l4.is_zero());
      if (is_in_even_subring(p.l2) && is_in_even_subring(p.l4) && is_in_even_subring(p.l6))
        rep.branches.push_back({"even", {}});
      break;
    }
    case FamilyId::Thm2: {
      const auto& p = expect_params<Thm2Params>(params, id);
      rep.predicates["L3!=0"] = !p.l3.is_zero();
      rep.predicates["L6!=0"] = !p.l6.is_zero();
      break;
    }
    case FamilyId::Thm2Special: {
      const auto& p = expect_params<Thm2SpecialParams>(params, id);
      rep.branches.push_back({"special", {}});
      rep.predicates["pairwise_distinct_mod_sign"] = pairwise_distinct_mod_sign(p.a30, p.a03, p.a33);
      break;
    }
    case FamilyId::C1: c1_branches(expect_params<C1Params>(params, id), f, rep); break;
    case FamilyId::C2: c2_branches(expect_params<C2Params>(params, id), f, rep); break;
    case FamilyId::C1Prime: {
      const auto& p = expect_params<C1PrimeParams>(params, id);
      rep.branches.push_back({"ii", {}});
      if (p.a41 == p.a12 && p.a33 == p.a03) rep.branches.push_back({"extra", {}});
      rep.predicates["(a33,a12)!=(0,0)"] = !(p.a33.is_zero() && p.a12.is_zero());
      break;
    }
    case FamilyId::C1DoublePrime: {
      const auto& p = expect_params<C1DoublePrimeParams>(params, id);
      rep.branches.push_back({"iii", {{"l", std::to_string(p.l)}}});
      rep.predicates["1+a11+a30!=0"] = !(f.one() + p.a11 + p.a30).is_zero();
      rep.predicates["a11!=0"] = !p.a11.is_zero();
      break;
    }
    case FamilyId::C2Prime: {
      const auto& p = expect_params<C2PrimeParams>(params, id);
      rep.branches.push_back({"i", {{"r", std::to_string(p.r)}}});
      rep.predicates["(a40,a32)!=(0,0)"] = !(p.a40.is_zero() && p.a32.is_zero());
      break;
    }
    case FamilyId::C1A4:
    case FamilyId::C1LambdaMu: {
      const auto& p = expect_params<LambdaMuParams>(params, id);
      rep.branches.push_back(lambda_mu_branch("iv", p.lambda, p.mu, p.ordering));
      break;
    }
    case FamilyId::C2A4:
    case FamilyId::C2LambdaMu: {
      const auto& p = expect_params<LambdaMuParams>(params, id);
      rep.branches.push_back(lambda_mu_branch("ii", p.lambda, p.mu, p.ordering));
      break;
    }
    case FamilyId::Fermat6: rep.branches.push_back({"fermat", {}}); break;
    case FamilyId::Klein6: rep.branches.push_back({"klein", {}}); break;
  }
  return rep;
}

}  // namespace sextic
