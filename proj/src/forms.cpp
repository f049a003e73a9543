#include "sextic/forms.hpp"

#include <algorithm>

namespace sextic {

std::vector<Monomial> monomials(int degree) {
  std::vector<Monomial> out;
  out.reserve(static_cast<std::size_t>(monomial_count(degree)));
  for (int i = degree; i >= 0; --i)
    for (int j = degree - i; j >= 0; --j) out.push_back({i, j, degree - i - j});
  return out;
}

TernaryForm::TernaryForm(int degree, std::uint32_t modulus, std::vector<Term> terms)
    : degree_(degree), p_(modulus), terms_(std::move(terms)) {
  for (const auto& [m, c] : terms_) {
    if (m.degree() != degree_ || m.i < 0 || m.j < 0 || m.k < 0)
      throw Error(Errc::BadParams, "monomial degree does not match form degree " + std::to_string(degree_));
    if (c.modulus() != p_) throw Error(Errc::BadParams, "coefficient from a different field");
  }
  normalize();
}

void TernaryForm::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!merged.empty() && merged.back().first == t.first)
      merged.back().second += t.second;
    else
      merged.push_back(t);
  }
  std::erase_if(merged, [](const Term& t) { return t.second.is_zero(); });
  terms_ = std::move(merged);
}

Fp TernaryForm::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.first > key; });
  if (it != terms_.end() && it->first == m) return it->second;
  return Fp(0, p_);
}

std::vector<Fp> TernaryForm::dense() const {
  std::vector<Fp> out(static_cast<std::size_t>(monomial_count(degree_)), Fp(0, p_));
  for (const auto& [m, c] : terms_) out[static_cast<std::size_t>(monomial_index(m))] = c;
  return out;
}

TernaryForm& TernaryForm::operator+=(const TernaryForm& o) {
  if (o.degree_ != degree_ || o.p_ != p_) throw Error(Errc::BadParams, "adding forms of different shape");
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  normalize();
  return *this;
}

TernaryForm& TernaryForm::operator-=(const TernaryForm& o) {
  if (o.degree_ != degree_ || o.p_ != p_) throw Error(Errc::BadParams, "subtracting forms of different shape");
  for (const auto& [m, c] : o.terms_) terms_.emplace_back(m, -c);
  normalize();
  return *this;
}

TernaryForm& TernaryForm::operator*=(Fp c) {
  for (auto& t : terms_) t.second *= c;
  std::erase_if(terms_, [](const Term& t) { return t.second.is_zero(); });
  return *this;
}

TernaryForm monomial_form(const PrimeField& f, Monomial m, Fp c) {
  return TernaryForm(m.degree(), f, {{m, c}});
}

namespace {

// Dense polynomial of a fixed degree, indexed by monomial_index.
struct Dense {
  int degree;
  std::vector<Fp> c;
};

Dense dense_mul(const Dense& a, const Dense& b, std::uint32_t p) {
  const auto ma = monomials(a.degree), mb = monomials(b.degree);
  Dense out{a.degree + b.degree, std::vector<Fp>(static_cast<std::size_t>(monomial_count(a.degree + b.degree)), Fp(0, p))};
  for (std::size_t x = 0; x < ma.size(); ++x) {
    if (a.c[x].is_zero()) continue;
    for (std::size_t y = 0; y < mb.size(); ++y) {
      if (b.c[y].is_zero()) continue;
      Monomial m{ma[x].i + mb[y].i, ma[x].j + mb[y].j, ma[x].k + mb[y].k};
      out.c[static_cast<std::size_t>(monomial_index(m))] += a.c[x] * b.c[y];
    }
  }
  return out;
}

TernaryForm from_dense(const Dense& d, std::uint32_t p) {
  std::vector<TernaryForm::Term> terms;
  const auto ms = monomials(d.degree);
  for (std::size_t x = 0; x < ms.size(); ++x)
    if (!d.c[x].is_zero()) terms.emplace_back(ms[x], d.c[x]);
  return TernaryForm(d.degree, p, std::move(terms));
}

Dense to_dense(const TernaryForm& F) { return {F.degree(), F.dense()}; }

TernaryForm substitute_monomial(const TernaryForm& F, const ProjectiveMap& M) {
  std::array<int, 3> src{};
  std::array<Fp, 3> scale{};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      if (!M.at(r, c).is_zero()) {
        src[r] = c;
        scale[r] = M.at(r, c);
      }
  std::vector<TernaryForm::Term> terms;
  terms.reserve(F.terms().size());
  for (const auto& [m, c] : F.terms()) {
    std::array<int, 3> e{0, 0, 0};
    e[src[0]] += m.i;
    e[src[1]] += m.j;
    e[src[2]] += m.k;
    terms.emplace_back(Monomial{e[0], e[1], e[2]}, c * scale[0].pow(m.i) * scale[1].pow(m.j) * scale[2].pow(m.k));
  }
  return TernaryForm(F.degree(), F.modulus(), std::move(terms));
}

}  // namespace

TernaryForm product(const TernaryForm& a, const TernaryForm& b) {
  if (a.modulus() != b.modulus()) throw Error(Errc::BadParams, "product of forms over different fields");
  return from_dense(dense_mul(to_dense(a), to_dense(b), a.modulus()), a.modulus());
}

TernaryForm substitute(const TernaryForm& F, const ProjectiveMap& M) {
  if (F.modulus() != M.modulus()) throw Error(Errc::BadParams, "form and map over different fields");
  const std::uint32_t p = F.modulus();
  if (M.is_monomial()) return substitute_monomial(F, M);

  const int d = F.degree();
  // pw[r][e] = (row r of M applied to (X,Y,Z))^e
  std::array<std::vector<Dense>, 3> pw;
  for (int r = 0; r < 3; ++r) {
    Dense lin{1, {M.at(r, 0), M.at(r, 1), M.at(r, 2)}};
    pw[r].push_back({0, {Fp(1, p)}});
    for (int e = 1; e <= d; ++e) pw[r].push_back(dense_mul(pw[r].back(), lin, p));
  }
  Dense acc{d, std::vector<Fp>(static_cast<std::size_t>(monomial_count(d)), Fp(0, p))};
  for (const auto& [m, c] : F.terms()) {
    Dense t = dense_mul(dense_mul(pw[0][m.i], pw[1][m.j], p), pw[2][m.k], p);
    for (std::size_t x = 0; x < t.c.size(); ++x) acc.c[x] += c * t.c[x];
  }
  return from_dense(acc, p);
}

std::array<TernaryForm, 3> partials(const TernaryForm& F) {
  const std::uint32_t p = F.modulus();
  auto scalar = [p](int e) { return Fp(static_cast<std::uint32_t>(e), p); };
  std::array<std::vector<TernaryForm::Term>, 3> terms;
  for (const auto& [m, c] : F.terms()) {
    if (m.i > 0) terms[0].emplace_back(Monomial{m.i - 1, m.j, m.k}, c * scalar(m.i));
    if (m.j > 0) terms[1].emplace_back(Monomial{m.i, m.j - 1, m.k}, c * scalar(m.j));
    if (m.k > 0) terms[2].emplace_back(Monomial{m.i, m.j, m.k - 1}, c * scalar(m.k));
  }
  const int d = F.degree() - 1;
  return {TernaryForm(d, p, std::move(terms[0])), TernaryForm(d, p, std::move(terms[1])),
          TernaryForm(d, p, std::move(terms[2]))};
}

std::optional<Fp> proportional(const TernaryForm& F, const TernaryForm& G) {
  if (F.degree() != G.degree() || F.modulus() != G.modulus()) return std::nullopt;
  if (F.terms().size() != G.terms().size()) return std::nullopt;
  if (F.is_zero()) return Fp(1, F.modulus());
  const Fp c = F.terms().front().second / G.terms().front().second;
  for (std::size_t x = 0; x < F.terms().size(); ++x) {
    const auto& [mf, cf] = F.terms()[x];
    const auto& [mg, cg] = G.terms()[x];
    if (!(mf == mg) || !(cf == c * cg)) return std::nullopt;
  }
  return c;
}

int degree_in(const TernaryForm& F, Var v) {
  int best = 0;
  for (const auto& t : F.terms()) best = std::max(best, t.first.exponent(v));
  return best;
}

bool support_subset(const TernaryForm& F, std::span<const Monomial> allowed) {
  return std::all_of(F.terms().begin(), F.terms().end(), [&](const TernaryForm::Term& t) {
    return std::find(allowed.begin(), allowed.end(), t.first) != allowed.end();
  });
}

bool is_in_even_subring(const TernaryForm& F, std::array<bool, 3> mask) {
  return std::all_of(F.terms().begin(), F.terms().end(), [&](const TernaryForm::Term& t) {
    const auto& m = t.first;
    return !(mask[0] && m.i % 2) && !(mask[1] && m.j % 2) && !(mask[2] && m.k % 2);
  });
}

Fp evaluate(const TernaryForm& F, const std::array<Fp, 3>& point) {
  if (point[0].is_zero() && point[1].is_zero() && point[2].is_zero())
    throw Error(Errc::ZeroVector, "evaluation at (0,0,0)");
  Fp acc(0, F.modulus());
  for (const auto& [m, c] : F.terms()) acc += c * point[0].pow(m.i) * point[1].pow(m.j) * point[2].pow(m.k);
  return acc;
}

std::string render(const TernaryForm& F) {
  if (F.is_zero()) return "0";
  static constexpr const char* kNames[3] = {"X", "Y", "Z"};
  std::string out;
  for (const auto& [m, c] : F.terms()) {
    if (!out.empty()) out += " + ";
    std::string term;
    if (!c.is_one() || m.degree() == 0) term = std::to_string(c.value());
    const int e[3] = {m.i, m.j, m.k};
    for (int v = 0; v < 3; ++v) {
      if (e[v] == 0) continue;
      if (!term.empty()) term += "*";
      term += kNames[v];
      if (e[v] > 1) term += "^" + std::to_string(e[v]);
    }
    out += term;
  }
  return out;
}

}  // namespace sextic
