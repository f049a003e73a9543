#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "sextic/expr.hpp"
#include "sextic/report.hpp"

namespace sextic::cli {

namespace {

struct Verdict {
  bool binding = true;
  int warnings = 0;

  void fail() { binding = false; }
  void merge(const Verdict& o) {
    binding = binding && o.binding;
    warnings += o.warnings;
  }
};

std::string pass(bool ok) { return ok ? "PASS" : "FAIL"; }

std::string percent(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f%%", 100.0 * x);
  return buf;
}

bool selected(const Sampler& s, const RunConfig& cfg) {
  const auto slash = s.key.find('/');
  if (!cfg.family.empty() && s.key.substr(0, slash) != cfg.family) return false;
  if (!cfg.branch.empty() && s.key.substr(slash + 1) != cfg.branch) return false;
  return true;
}

Verdict run_samplers(const std::vector<std::string>& keys, const RunConfig& cfg, const PrimeField& f,
                     ReportSink& sink, std::ostream& out) {
  Verdict v;
  const CatalogTable table(f);
  for (const auto& key : keys) {
    const Sampler& s = sampler(key);
    if (!selected(s, cfg)) continue;
    const BranchRun run = run_sampler(s, cfg.samples, cfg.seed, f);
    const auto& expected = table.print(s.expected);
    int matching = 0;
    for (const auto& r : run.records) {
      sink.write(to_json(r));
      if (r.degenerate) continue;
      if (r.agrees && r.failed_witnesses == 0 && r.predicted == s.expected && r.fingerprint == expected) ++matching;
    }
    json summary = to_json(run);
    summary["expected"] = label_name(s.expected);
    summary["matching"] = matching;
    sink.write(summary);
    const bool ok = matching == run.samples && run.exhausted == 0 && run.degenerate_fraction() < 0.05;
    if (!ok) v.fail();
    out << key << ": " << matching << "/" << run.samples << " classify as " << label_name(s.expected)
        << ", degenerate draws " << run.degenerate_draws << "/" << run.draws << " ("
        << percent(run.degenerate_fraction()) << ") " << pass(ok) << "\n";
  }
  return v;
}

Verdict verify_group(const std::string& name, const RunConfig&, const PrimeField& f, ReportSink& sink,
                     std::ostream& out) {
  Verdict v;
  const bool fermat = name == "fermat";
  const CatalogLabel label = fermat ? CatalogLabel::AutF6 : CatalogLabel::AutK6;
  const std::size_t expected = fermat ? 216 : 63;
  const auto gens = catalog_generators(label, f);
  const FiniteGroup g = closure(gens, f);
  const auto pres = verify_presentation(fermat ? "fermat6" : "klein6", f);
  const AutReport rep = classify(fermat ? FamilyId::Fermat6 : FamilyId::Klein6, NoParams{}, f);
  sink.write({{"kind", "closure"}, {"name", name}, {"order", g.order()}, {"expected", expected}});
  sink.write(to_json(pres));
  sink.write(to_json(rep, f));
  const bool order_ok = g.order() == expected;
  const bool scan_ok = rep.stabilizer == g;
  out << name << ": closure order " << g.order() << " (expected " << expected << ") " << pass(order_ok) << "\n";
  for (const auto& r : pres.relations) out << "  " << r.relation << ": " << (r.holds ? "holds" : "FAILS") << "\n";
  for (const auto& r : pres.supplementary)
    out << "  [supplementary] " << r.relation << ": " << (r.holds ? "holds" : "fails") << "\n";
  out << name << ": presentation relations " << pass(pres.holds) << "\n";
  out << name << ": invariance scan finds the same group " << pass(scan_ok) << "\n";
  if (!order_ok || !scan_ok || !pres.holds) v.fail();
  return v;
}

Verdict verify_cor312(const RunConfig& cfg, const PrimeField& f, ReportSink& sink, std::ostream& out) {
  Verdict v;
  const EvidenceReport ev = fake_evidence(f, cfg.samples, cfg.seed);
  sink.write(to_json(ev));
  out << "cor312: (a) C2 vertices on the curve " << pass(ev.a_holds) << "\n";
  out << "cor312: (b) C1'' has a vertex off the curve " << pass(ev.b_holds) << "\n";
  out << "cor312: (c) same label and fingerprint " << pass(ev.c_holds) << "\n";
  std::map<int, int> tri_c2, tri_pp;
  for (const auto& s : ev.c2_samples)
    if (s.label == CatalogLabel::Rho2Z3Sq) ++tri_c2[s.fixed_triangles_on_curve];
  for (const auto& s : ev.c1pp_samples) ++tri_pp[s.fixed_triangles_on_curve];
  auto show = [](const std::map<int, int>& m) {
    std::string s;
    for (const auto& [k, n] : m) s += (s.empty() ? "" : ", ") + std::to_string(k) + " in " + std::to_string(n);
    return s;
  };
  out << "cor312: fixed triangles on the curve, (2)(i): " << show(tri_c2) << "; C1'': " << show(tri_pp) << "\n";
  if (!ev.holds()) v.fail();
  return v;
}

Verdict verify_cor3123(const RunConfig& cfg, const PrimeField& f, ReportSink& sink, std::ostream& out) {
  Verdict v;
  std::map<TransportCase, std::pair<int, int>> tally;  // binding ok, proportional
  std::map<TransportCase, std::set<std::string>> mismatch;
  for (int i = 0; i < cfg.samples; ++i) {
    Rng rng(cfg.seed, stream_id("transport", static_cast<std::uint64_t>(i)));
    const int k = i % 3;
    for (;;) {
      const Fp l = rng.nonzero(f), m = rng.nonzero(f);
      try {
        std::vector<TransportReport> reps;
        for (auto c : {TransportCase::C1A4, TransportCase::C2A4, TransportCase::Cor3123})
          reps.push_back(verify_transport(c, l, m, f, k));
        for (const auto& r : reps) {
          sink.write(to_json(r, f));
          tally[r.which].first += r.binding();
          tally[r.which].second += r.proportional;
          for (const auto& mono : r.mismatched) mismatch[r.which].insert(render(monomial_form(f, mono)));
        }
        break;
      } catch (const Error& e) {
        if (e.code() != Errc::BadParams) throw;
      }
    }
  }
  for (auto c : {TransportCase::C1A4, TransportCase::C2A4, TransportCase::Cor3123}) {
    const auto [ok, prop] = tally[c];
    const bool good = ok == cfg.samples;
    if (!good) v.fail();
    out << transport_name(c) << ": binding " << ok << "/" << cfg.samples << " " << pass(good);
    if (c != TransportCase::Cor3123) {
      out << ", normal form proportional " << prop << "/" << cfg.samples;
      if (prop != cfg.samples) {
        ++v.warnings;
        std::string names;
        for (const auto& s : mismatch[c]) names += (names.empty() ? "" : ", ") + s;
        out << " (WARNING: printed coefficients disagree on " << names << ")";
      }
    }
    out << "\n";
  }
  return v;
}

Verdict verify_strata(const RunConfig& cfg, const PrimeField& f, ReportSink& sink, std::ostream& out) {
  Verdict v;
  const int n = std::min(cfg.samples, 5);
  const StrataTable t = strata_table(f, n, cfg.seed);
  sink.write(to_json(t));
  const std::map<std::string, int> expected{{"Z/2", 1}, {"(Z/2)^2", 1}, {"Z/3", 2}, {"(Z/3)^2", 2},
                                            {"S3", 1},  {"Z/3xS3", 1},  {"A4", 1}};
  const auto counts = t.counts();
  for (const auto& [g, comps] : t.strata) {
    out << "strata " << g << ": " << comps.size() << " component(s)";
    for (const auto& c : comps) {
      out << " [";
      for (std::size_t i = 0; i < c.labels.size(); ++i) out << (i ? "," : "") << label_name(c.labels[i]);
      out << " via";
      for (const auto& nf : c.normal_forms) out << " " << nf;
      out << (c.fake ? ", fake" : "") << "]";
    }
    out << "\n";
  }
  const bool ok = counts == expected;
  out << "strata: component counts " << pass(ok) << "\n";
  if (!ok) v.fail();
  return v;
}

const std::vector<std::string> kThm1{"thm1/generic", "thm1/even"};
const std::vector<std::string> kThm2{"thm2/generic", "thm2/special"};
const std::vector<std::string> kThm3{"c1/generic",      "c1/i",          "c1/ii-a",      "c1/ii-b",
                                     "c1/ii-c",         "c1-prime/generic", "c1-prime/extra", "c1/iii",
                                     "c1-double-prime/generic", "c1/iv", "c2/generic",  "c2/i",
                                     "c2-prime/generic", "c2/ii"};

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Parse, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_verify(const std::string& target, const RunConfig& cfg, std::ostream& out) {
  if (cfg.samples < 1) throw Error(Errc::BadParams, "--samples must be >= 1");
  const PrimeField f = make_field(cfg.prime);
  ReportSink sink(cfg.out, "verify-" + target);
  const std::map<std::string, std::function<Verdict()>> targets{
      {"fermat", [&] { return verify_group("fermat", cfg, f, sink, out); }},
      {"klein", [&] { return verify_group("klein", cfg, f, sink, out); }},
      {"thm1", [&] { return run_samplers(kThm1, cfg, f, sink, out); }},
      {"thm2", [&] { return run_samplers(kThm2, cfg, f, sink, out); }},
      {"thm3", [&] { return run_samplers(kThm3, cfg, f, sink, out); }},
      {"cor312", [&] { return verify_cor312(cfg, f, sink, out); }},
      {"cor3123", [&] { return verify_cor3123(cfg, f, sink, out); }},
      {"strata", [&] { return verify_strata(cfg, f, sink, out); }},
  };
  Verdict v;
  if (target == "all") {
    for (const char* t : {"fermat", "klein", "thm1", "thm2", "thm3", "cor312", "cor3123", "strata"})
      v.merge(targets.at(t)());
  } else {
    auto it = targets.find(target);
    if (it == targets.end()) throw Error(Errc::BadParams, "unknown verify target '" + target + "'");
    v = it->second();
  }
  out << "verify " << target << ": " << (v.binding ? "all binding checks pass" : "binding check FAILED");
  if (v.warnings) out << " (" << v.warnings << " diagnostic warning(s))";
  out << "\n";
  if (sink.active()) out << "report: " << sink.path().string() << "\n";
  return v.binding ? kOk : kBindingFailure;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  const PrimeField f = make_field(cfg.prime);
  const auto id = family_from_name(cfg.family);
  if (!id) throw Error(Errc::BadParams, "unknown family '" + cfg.family + "'");
  const std::string text = cfg.params.empty() ? std::string() : read_file(cfg.params);
  const FamilyParams params = params_from_text(*id, text, f);
  const AutReport rep = classify(*id, params, f);
  json j = to_json(rep, f);
  j["family"] = family_name(*id);
  j["params"] = params_json(params);
  j["form"] = render(build(*id, params, f));
  ReportSink sink(cfg.out, "classify");
  sink.write(j);
  out << j.dump() << "\n";
  out << "label " << label_name(rep.label) << ", order " << rep.stabilizer.order() << ", predicted "
      << label_name(rep.predicted) << (rep.agrees ? ", agrees" : ", DISAGREES") << " (catalog-relative)\n";
  return kOk;
}

int cmd_smooth(const std::string& form_file, const RunConfig& cfg, std::ostream& out) {
  const PrimeField f = make_field(cfg.prime);
  const TernaryForm F = parse_form(read_file(form_file), f);
  const int rank = macaulay_rank(F);
  const bool smooth = rank == monomial_count(3 * F.degree() - 5);
  out << (smooth ? "true" : "false") << "\n";
  ReportSink sink(cfg.out, "smooth");
  sink.write({{"kind", "smooth"}, {"form", render(F)}, {"smooth", smooth}, {"rank", rank}});
  return kOk;
}

int cmd_transform(const std::string& form_file, const std::string& matrix, const RunConfig& cfg, std::ostream& out) {
  const PrimeField f = make_field(cfg.prime);
  const TernaryForm F = parse_form(read_file(form_file), f);
  const ProjectiveMap M = parse_map(matrix, f);
  const TernaryForm G = substitute(F, M);
  out << render(G) << "\n";
  json j{{"kind", "transform"}, {"form", render(F)}, {"map", render(M, f)}, {"image", render(G)}};
  if (auto s = proportional(G, F)) {
    out << "proportional to the input, scalar " << render_scalar(*s, f) << "\n";
    j["scalar"] = render_scalar(*s, f);
  }
  ReportSink sink(cfg.out, "transform");
  sink.write(j);
  return kOk;
}

}  // namespace sextic::cli
