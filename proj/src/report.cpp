#include "sextic/report.hpp"

namespace sextic {

namespace {

json int_map(const std::map<int, int>& m) {
  json j = json::object();
  for (const auto& [k, v] : m) j[std::to_string(k)] = v;
  return j;
}

json string_pairs(const std::vector<std::pair<std::string, std::string>>& kv) {
  json j = json::object();
  for (const auto& [k, v] : kv) j[k] = v;
  return j;
}

json maps_json(const std::vector<ProjectiveMap>& ms, const PrimeField& f) {
  json j = json::array();
  for (const auto& m : ms) j.push_back(render(m, f));
  return j;
}

json residues(const std::vector<Fp>& v) {
  json j = json::array();
  for (Fp x : v) j.push_back(x.value());
  return j;
}

}  // namespace

json params_json(const FamilyParams& params) { return string_pairs(params_to_assignments(params)); }

json to_json(const GroupFingerprint& fp) {
  return {{"order", fp.order},
          {"abelian", fp.abelian},
          {"histogram", int_map(fp.order_histogram)},
          {"homology", int_map(fp.homology_count)},
          {"center", fp.center_order}};
}

json to_json(const SampleRecord& r) {
  return {{"kind", "sample"},
          {"sampler", r.sampler},
          {"index", r.index},
          {"attempt", r.attempt},
          {"family", family_name(r.family)},
          {"params", string_pairs(r.params)},
          {"branches", r.branches},
          {"label", label_name(r.label)},
          {"predicted", label_name(r.predicted)},
          {"agrees", r.agrees},
          {"order", r.fingerprint.order},
          {"histogram", int_map(r.fingerprint.order_histogram)},
          {"homology", int_map(r.fingerprint.homology_count)},
          {"degenerate", r.degenerate},
          {"closure_added", r.closure_added},
          {"failed_witnesses", r.failed_witnesses},
          {"singular_draws", r.singular_draws}};
}

json to_json(const BranchRun& run) {
  return {{"kind", "branch"},
          {"sampler", run.sampler},
          {"samples", run.samples},
          {"agreeing", run.agreeing},
          {"draws", run.draws},
          {"degenerate_draws", run.degenerate_draws},
          {"degenerate_fraction", run.degenerate_fraction()},
          {"exhausted", run.exhausted}};
}

json to_json(const AutReport& r, const PrimeField& f) {
  json branches = json::array();
  for (const auto& b : r.prediction.branches.branches) branches.push_back({{"name", b.name}, {"data", b.data}});
  json candidates = json::array();
  for (auto l : r.identification.candidates) candidates.push_back(label_name(l));
  return {{"kind", "classify"},
          {"label", label_name(r.label)},
          {"predicted", label_name(r.predicted)},
          {"agrees", r.agrees},
          {"catalog_relative", true},
          {"exact_catalog_match", r.identification.exact},
          {"candidates", candidates},
          {"fingerprint", to_json(r.fingerprint)},
          {"stabilizer", maps_json(r.stabilizer.elements(), f)},
          {"branches", branches},
          {"predicates", r.prediction.branches.predicates},
          {"notes", r.prediction.notes},
          {"witnesses_verified", maps_json(r.verified_witnesses, f)},
          {"witnesses_failed", maps_json(r.failed_witnesses, f)},
          {"high_order", maps_json(r.high_order, f)},
          {"degenerate", r.degenerate},
          {"closure_added", r.closure_added},
          {"examined", r.examined}};
}

json to_json(const TransportReport& r, const PrimeField& f) {
  json mism = json::array();
  for (const auto& m : r.mismatched) mism.push_back(render(monomial_form(f, m)));
  json j{{"kind", "transport"},
         {"case", transport_name(r.which)},
         {"lambda", r.lambda.value()},
         {"mu", r.mu.value()},
         {"ordering", r.ordering},
         {"invariant", r.invariant},
         {"binding", r.binding()},
         {"core", residues(r.core_coefficients)},
         {"core_matches", r.core_matches}};
  if (r.target) {
    j["proportional"] = r.proportional;
    j["mismatched"] = mism;
  }
  return j;
}

json to_json(const VertexSample& v) {
  json vals = json::array();
  for (Fp x : v.vertex_values) vals.push_back(x.value());
  return {{"family", family_name(v.family)},
          {"params", params_json(v.params)},
          {"label", label_name(v.label)},
          {"fingerprint", to_json(v.fingerprint)},
          {"vertices", vals},
          {"guard", v.guard},
          {"fixed_triangles_on_curve", v.fixed_triangles_on_curve}};
}

json to_json(const EvidenceReport& r) {
  json c2 = json::array(), pp = json::array();
  for (const auto& v : r.c2_samples) c2.push_back(to_json(v));
  for (const auto& v : r.c1pp_samples) pp.push_back(to_json(v));
  return {{"kind", "evidence"},
          {"a", r.a_holds},
          {"b", r.b_holds},
          {"c", r.c_holds},
          {"holds", r.holds()},
          {"c2_samples", c2},
          {"c1pp_samples", pp}};
}

json to_json(const StrataTable& t) {
  json strata = json::object();
  for (const auto& [g, comps] : t.strata) {
    json arr = json::array();
    for (const auto& c : comps) {
      json labels = json::array();
      for (auto l : c.labels) labels.push_back(label_name(l));
      const auto& w = c.witnesses.front();
      arr.push_back({{"fingerprint", to_json(c.fingerprint)},
                     {"labels", labels},
                     {"normal_forms", c.normal_forms},
                     {"fake", c.fake},
                     {"witness_count", c.witnesses.size()},
                     {"witness",
                      {{"normal_form", w.normal_form},
                       {"sampler", w.source},
                       {"family", family_name(w.family)},
                       {"params", params_json(w.params)},
                       {"form", render(w.form)},
                       {"label", label_name(w.label)}}}});
    }
    strata[g] = arr;
  }
  return {{"kind", "strata"}, {"strata", strata}, {"counts", t.counts()}};
}

json to_json(const PresentationReport& r) {
  auto checks = [](const std::vector<RelationCheck>& v) {
    json j = json::array();
    for (const auto& c : v) j.push_back({{"relation", c.relation}, {"holds", c.holds}});
    return j;
  };
  return {{"kind", "presentation"},
          {"name", r.name},
          {"relations", checks(r.relations)},
          {"supplementary", checks(r.supplementary)},
          {"holds", r.holds}};
}

ReportSink::ReportSink(const std::optional<std::filesystem::path>& dir, const std::string& name) {
  if (!dir) return;
  std::filesystem::create_directories(*dir);
  path_ = *dir / (name + ".jsonl");
  out_.open(path_, std::ios::trunc);
  if (!out_) throw Error(Errc::BadParams, "cannot write " + path_.string());
}

void ReportSink::write(const json& record) {
  if (out_.is_open()) out_ << record.dump() << '\n';
}

}  // namespace sextic
