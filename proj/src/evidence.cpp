#include <algorithm>
#include <set>

#include "sextic/classify.hpp"
#include "sextic/sampling.hpp"

namespace sextic {

namespace {

std::array<Fp, 3> vertex_values(const TernaryForm& F, const PrimeField& f) {
  const Fp o = f.one(), z = f.zero();
  return {evaluate(F, {o, z, z}), evaluate(F, {z, o, z}), evaluate(F, {z, z, o})};
}

// Order-3 cyclic subgroups acting with three isolated fixed points, whose
// fixed triangle lies on the curve.
int fixed_triangles_on_curve(const TernaryForm& F, const FiniteGroup& g, const PrimeField& f) {
  int count = 0;
  for (const auto& m : g.elements()) {
    if (order(m) != 3) continue;
    const auto m2 = m * m;
    if (m2 < m) continue;  // one representative per subgroup
    const auto pts = fixed_points(m, f);
    if (pts.size() != 3) continue;
    if (std::all_of(pts.begin(), pts.end(), [&](const auto& v) { return evaluate(F, v).is_zero(); })) ++count;
  }
  return count;
}

VertexSample vertex_sample(const Sampler& s, Rng& rng, const PrimeField& f) {
  Drawn d = draw_classified(s, rng, f);
  const TernaryForm F = build(s.family, d.params, f);
  VertexSample v{s.family, d.params, d.report.label, d.report.fingerprint, vertex_values(F, f)};
  if (const auto* p = std::get_if<C1DoublePrimeParams>(&d.params)) v.guard = !(f.one() + p->a11 + p->a30).is_zero();
  v.fixed_triangles_on_curve = fixed_triangles_on_curve(F, d.report.stabilizer, f);
  return v;
}

bool all_zero(const std::array<Fp, 3>& v) {
  return std::all_of(v.begin(), v.end(), [](Fp x) { return x.is_zero(); });
}

}  // namespace

EvidenceReport fake_evidence(const PrimeField& f, int samples, std::uint64_t seed) {
  EvidenceReport rep;
  std::vector<VertexSample> c2_i;
  for (const char* key : {"c2/generic", "c2/i"}) {
    const Sampler& s = sampler(key);
    for (int i = 0; i < samples; ++i) {
      Rng rng(seed, stream_id(s.key, static_cast<std::uint64_t>(i)));
      rep.c2_samples.push_back(vertex_sample(s, rng, f));
      if (s.key == "c2/i") c2_i.push_back(rep.c2_samples.back());
    }
  }
  const Sampler& pp = sampler("c1-double-prime/generic");
  for (int i = 0; i < samples; ++i) {
    Rng rng(seed, stream_id(pp.key, static_cast<std::uint64_t>(i)));
    rep.c1pp_samples.push_back(vertex_sample(pp, rng, f));
  }

  int a_checked = 0;
  rep.a_holds = true;
  for (const auto& v : rep.c2_samples) {
    if (v.label != CatalogLabel::Rho2Z3 && v.label != CatalogLabel::Rho2Z3Sq) continue;
    ++a_checked;
    rep.a_holds = rep.a_holds && all_zero(v.vertex_values);
  }
  rep.a_holds = rep.a_holds && a_checked > 0;

  int b_checked = 0;
  rep.b_holds = true;
  for (const auto& v : rep.c1pp_samples) {
    if (!v.guard) continue;
    ++b_checked;
    rep.b_holds = rep.b_holds && !all_zero(v.vertex_values);
  }
  rep.b_holds = rep.b_holds && b_checked > 0;

  rep.c_holds = !c2_i.empty() && !rep.c1pp_samples.empty();
  const auto& ref = c2_i.empty() ? VertexSample{} : c2_i.front();
  for (const auto* group : {&c2_i, &rep.c1pp_samples})
    for (const auto& v : *group)
      rep.c_holds = rep.c_holds && v.label == CatalogLabel::Rho2Z3Sq && v.label == ref.label &&
                    v.fingerprint == ref.fingerprint;
  return rep;
}

std::map<std::string, int> StrataTable::counts() const {
  std::map<std::string, int> out;
  for (const auto& [g, comps] : strata) out[g] = static_cast<int>(comps.size());
  return out;
}

namespace {

struct Source {
  const char* sampler;
  const char* normal_form;
};

// Every sampler whose members carry a stratum witness, keyed by the normal
// form they are written in.
constexpr Source kSources[] = {
    {"thm1/generic", "Thm1"},
    {"thm1/even", "Thm1"},
    {"thm2/generic", "Thm2"},
    {"c1/generic", "C1"},
    {"c2/generic", "C2"},
    {"thm2/special", "C'"},
    {"c1/i", "C'"},
    {"c1-double-prime/generic", "C1''"},
    {"c1/iii", "C1''"},
    {"c2-prime/generic", "C2'"},
    {"c2/i", "C2'"},
    {"c1/ii-a", "C1'"},
    {"c1/ii-b", "C1'"},
    {"c1/ii-c", "C1'"},
    {"c1-prime/generic", "C1'"},
    {"c1-prime/extra", "C1'"},
    {"c1-lambda-mu/generic", "C1lm"},
    {"c1/iv", "C1lm"},
    {"c1-a4/generic", "C1lm"},
    {"c2/ii", "C2lm"},
    {"c2-a4/generic", "C2lm"},
};

}  // namespace

StrataTable strata_table(const PrimeField& f, int samples, std::uint64_t seed) {
  if (samples < 1) throw Error(Errc::BadParams, "samples must be >= 1");
  StrataTable table;
  for (const auto& src : kSources) {
    const Sampler& s = sampler(src.sampler);
    int found = 0;
    for (int i = 0; i < samples; ++i) {
      Rng rng(seed, stream_id(s.key, static_cast<std::uint64_t>(i)));
      Drawn d = draw_classified(s, rng, f);
      if (d.report.degenerate || !d.report.agrees || !d.report.failed_witnesses.empty()) continue;
      ++found;
      const std::string group(abstract_group(d.report.label));
      auto& comps = table.strata[group];
      auto it = std::find_if(comps.begin(), comps.end(),
                             [&](const StrataComponent& c) { return c.fingerprint == d.report.fingerprint; });
      if (it == comps.end()) {
        comps.push_back(StrataComponent{d.report.fingerprint, {}, {}, {}, false});
        it = std::prev(comps.end());
      }
      if (std::find(it->labels.begin(), it->labels.end(), d.report.label) == it->labels.end())
        it->labels.push_back(d.report.label);
      const TernaryForm F = build(s.family, d.params, f);
      it->witnesses.push_back(StrataWitness{src.normal_form, s.key, s.family, d.params, F, d.report.label});
      std::set<std::string> nf(it->normal_forms.begin(), it->normal_forms.end());
      nf.insert(src.normal_form);
      it->normal_forms.assign(nf.begin(), nf.end());
      it->fake = it->normal_forms.size() >= 2;
    }
    if (found == 0) throw Error(Errc::WitnessNotFound, "no agreeing witness from " + s.key);
  }
  return table;
}

}  // namespace sextic
