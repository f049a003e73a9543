#include "sextic/sampling.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

namespace sextic {

Rng::Rng(std::uint64_t seed, std::uint64_t stream) : state_(mix(seed ^ mix(stream))) {}

std::uint64_t Rng::mix(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t Rng::next() {
  state_ += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw Error(Errc::BadParams, "empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do x = next();
  while (x >= limit);
  return x % n;
}

Fp Rng::residue(const PrimeField& f) { return f(static_cast<std::int64_t>(below(f.p()))); }

Fp Rng::nonzero(const PrimeField& f) { return f(static_cast<std::int64_t>(1 + below(f.p() - 1))); }

std::uint64_t stream_id(std::string_view key, std::uint64_t index) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : key) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return Rng::mix(h) ^ index;
}

const std::vector<Sampler>& samplers() {
  using F = FamilyId;
  using L = CatalogLabel;
  static const std::vector<Sampler> all{
      {"thm1/generic", F::Thm1, L::Rho1Z2},
      {"thm1/even", F::Thm1Even, L::Rho1Z2Sq},
      {"thm2/generic", F::Thm2, L::Rho1Z3},
      {"thm2/special", F::Thm2Special, L::Rho1Z3Sq},
      {"c1/generic", F::C1, L::Rho2Z3},
      {"c1/i", F::C1, L::Rho1Z3Sq},
      {"c1/ii-a", F::C1, L::Rho2S3},
      {"c1/ii-b", F::C1, L::Rho2S3},
      {"c1/ii-c", F::C1, L::Rho2S3},
      {"c1-prime/generic", F::C1Prime, L::Rho2S3},
      {"c1-prime/extra", F::C1Prime, L::Rho1Z3xS3},
      {"c1/iii", F::C1, L::Rho2Z3Sq},
      {"c1-double-prime/generic", F::C1DoublePrime, L::Rho2Z3Sq},
      {"c1/iv", F::C1, L::Rho1A4},
      {"c1-a4/generic", F::C1A4, L::Rho1A4},
      {"c1-lambda-mu/generic", F::C1LambdaMu, L::Rho1A4},
      {"c2/generic", F::C2, L::Rho2Z3},
      {"c2/i", F::C2, L::Rho2Z3Sq},
      {"c2-prime/generic", F::C2Prime, L::Rho2Z3Sq},
      {"c2/ii", F::C2, L::Rho2A4},
      {"c2-a4/generic", F::C2A4, L::Rho2A4},
      {"c2-lambda-mu/generic", F::C2LambdaMu, L::Rho2A4},
  };
  return all;
}

const Sampler& sampler(std::string_view key) {
  for (const auto& s : samplers())
    if (s.key == key) return s;
  throw Error(Errc::BadParams, "unknown sampler '" + std::string(key) + "'");
}

namespace {

TernaryForm random_binary(int degree, bool even, Rng& rng, const PrimeField& f) {
  std::vector<TernaryForm::Term> t;
  for (int i = 0; i <= degree; ++i)
    if (!even || i % 2 == 0) t.emplace_back(Monomial{i, degree - i, 0}, rng.residue(f));
  return TernaryForm(degree, f, std::move(t));
}

bool distinct_mod_sign(Fp a, Fp b, Fp c) {
  auto eq = [](Fp x, Fp y) { return x == y || x == -y; };
  return !eq(a, b) && !eq(a, c) && !eq(b, c);
}

Fp sign(Rng& rng, const PrimeField& f) { return rng.below(2) ? -f.one() : f.one(); }

FamilyParams draw_once(const Sampler& s, Rng& rng, const PrimeField& f) {
  auto nz = [&] { return rng.nonzero(f); };
  const std::string_view branch = std::string_view(s.key).substr(s.key.find('/') + 1);
  switch (s.family) {
    case FamilyId::Thm1:
      return Thm1Params{random_binary(2, false, rng, f), random_binary(4, false, rng, f),
                        random_binary(6, false, rng, f)};
    case FamilyId::Thm1Even:
      return Thm1Params{random_binary(2, true, rng, f), random_binary(4, true, rng, f),
                        random_binary(6, true, rng, f)};
    case FamilyId::Thm2: return Thm2Params{random_binary(3, false, rng, f), random_binary(6, false, rng, f)};
    case FamilyId::Thm2Special: return Thm2SpecialParams{nz(), nz(), nz()};
    case FamilyId::C1: {
      C1Params a{nz(), nz(), nz(), nz(), nz(), nz(), nz()};
      const Fp e = sign(rng, f);
      if (branch == "i") {
        a.a41 = a.a14 = a.a11 = a.a22 = f.zero();
      } else if (branch == "ii-a") {
        a.a14 = e * a.a41, a.a03 = e * a.a30;
      } else if (branch == "ii-b") {
        a.a11 = e * a.a14, a.a30 = e * a.a33;
      } else if (branch == "ii-c") {
        a.a11 = e * a.a41, a.a03 = e * a.a33;
      } else if (branch == "iii") {
        const int l = std::array{1, 2, 4, 5}[rng.below(4)];
        a.a22 = f.zero();
        a.a41 = f.zeta(6, l) * a.a11;
        a.a14 = e * f.zeta(6, -l) * a.a11;
        a.a33 = e * ((l % 2) ? -f.one() : f.one()) * a.a30;
        a.a03 = e * a.a30;
      } else if (branch == "iv") {
        a = a4_c1_params(nz(), nz(), f, static_cast<int>(rng.below(3)));
      }
      return a;
    }
    case FamilyId::C2: {
      C2Params a{nz(), nz(), nz(), nz(), nz(), nz()};
      if (branch == "i") {
        const int r = static_cast<int>(rng.below(21));
        a.a02 = f.zeta(21, -12 * r) * a.a40;
        a.a24 = f.zeta(21, 3 * r) * a.a40;
        a.a13 = f.zeta(21, -6 * r) * a.a32;
        a.a21 = f.zeta(21, 3 * r) * a.a32;
      } else if (branch == "ii") {
        a = a4_c2_params(nz(), nz(), f, static_cast<int>(rng.below(3)));
      }
      return a;
    }
    case FamilyId::C1Prime: {
      C1PrimeParams a{nz(), nz(), nz(), nz(), nz()};
      if (branch == "extra") a.a12 = a.a41, a.a03 = a.a33;
      return a;
    }
    case FamilyId::C1DoublePrime: return C1DoublePrimeParams{std::array{1, 2, 4, 5}[rng.below(4)], nz(), nz()};
    case FamilyId::C2Prime: return C2PrimeParams{nz(), nz(), static_cast<int>(rng.below(21))};
    case FamilyId::C1A4:
    case FamilyId::C2A4:
    case FamilyId::C1LambdaMu:
    case FamilyId::C2LambdaMu: return LambdaMuParams{nz(), nz(), static_cast<int>(rng.below(3))};
    case FamilyId::Fermat6:
    case FamilyId::Klein6: return NoParams{};
  }
  return NoParams{};
}

// Side conditions the branch needs beyond the constructor guards.
bool acceptable(const Sampler& s, const FamilyParams& params, const PrimeField& f) {
  try {
    if (s.key == "thm1/generic") {
      const auto& p = std::get<Thm1Params>(params);
      if (is_in_even_subring(p.l2) && is_in_even_subring(p.l4) && is_in_even_subring(p.l6)) return false;
    }
    if (const auto* p = std::get_if<Thm2SpecialParams>(&params))
      if (!distinct_mod_sign(p->a30, p->a03, p->a33)) return false;
    if (s.key == "c1/i") {
      const auto& p = std::get<C1Params>(params);
      if (!distinct_mod_sign(p.a33, p.a30, p.a03)) return false;
    }
    if (const auto* p = std::get_if<C1DoublePrimeParams>(&params))
      if ((f.one() + p->a11 + p->a30).is_zero()) return false;
    build(s.family, params, f);
    predict(s.family, params, f);
  } catch (const Error& e) {
    if (e.code() == Errc::BadParams || e.code() == Errc::GuardViolated) return false;
    throw;
  }
  return true;
}

}  // namespace

FamilyParams draw_params(const Sampler& s, Rng& rng, const PrimeField& f) {
  for (int i = 0; i < kSingularBudget; ++i) {
    FamilyParams p = draw_once(s, rng, f);
    if (acceptable(s, p, f)) return p;
  }
  throw Error(Errc::WitnessNotFound, "no admissible parameters for " + s.key);
}

namespace {

struct Attempt {
  FamilyParams params;
  int singular = 0;
};

Attempt draw_smooth(const Sampler& s, Rng& rng, const PrimeField& f) {
  Attempt a{NoParams{}, 0};
  for (; a.singular < kSingularBudget; ++a.singular) {
    a.params = draw_params(s, rng, f);
    if (is_smooth(build(s.family, a.params, f))) return a;
  }
  throw Error(Errc::WitnessNotFound, "no smooth member drawn for " + s.key);
}

std::vector<std::string> branch_names(const AutReport& r) {
  std::vector<std::string> out;
  for (const auto& b : r.prediction.branches.branches) out.push_back(b.name);
  if (out.empty()) out.push_back("generic");
  return out;
}

}  // namespace

Drawn draw_classified(const Sampler& s, Rng& rng, const PrimeField& f) {
  for (int attempt = 0;; ++attempt) {
    Attempt a = draw_smooth(s, rng, f);
    AutReport rep = classify(s.family, a.params, f);
    if (!rep.degenerate || attempt == kResampleBudget) return Drawn{std::move(a.params), std::move(rep), attempt + 1};
  }
}

namespace {

// All draws for sample i, the last one final.
std::vector<SampleRecord> sample_records(const Sampler& s, int i, std::uint64_t seed, const PrimeField& f) {
  std::vector<SampleRecord> out;
  Rng rng(seed, stream_id(s.key, static_cast<std::uint64_t>(i)));
  for (int attempt = 0; attempt <= kResampleBudget; ++attempt) {
    Attempt a = draw_smooth(s, rng, f);
    AutReport rep = classify(s.family, a.params, f);
    SampleRecord rec;
    rec.sampler = s.key;
    rec.index = i;
    rec.attempt = attempt;
    rec.family = s.family;
    rec.params = params_to_assignments(a.params);
    rec.branches = branch_names(rep);
    rec.label = rep.label;
    rec.predicted = rep.predicted;
    rec.agrees = rep.agrees;
    rec.fingerprint = rep.fingerprint;
    rec.degenerate = rep.degenerate;
    rec.closure_added = rep.closure_added;
    rec.failed_witnesses = static_cast<int>(rep.failed_witnesses.size());
    rec.singular_draws = a.singular;
    out.push_back(std::move(rec));
    if (!rep.degenerate) break;
  }
  return out;
}

}  // namespace

BranchRun run_sampler(const Sampler& s, int samples, std::uint64_t seed, const PrimeField& f) {
  if (samples < 1) throw Error(Errc::BadParams, "samples must be >= 1");
  std::vector<std::vector<SampleRecord>> per(static_cast<std::size_t>(samples));
  std::vector<std::exception_ptr> errors(per.size());
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i; (i = next.fetch_add(1)) < samples;) {
      try {
        per[i] = sample_records(s, i, seed, f);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::clamp(std::thread::hardware_concurrency(), 1u, static_cast<unsigned>(samples));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  BranchRun run;
  run.sampler = s.key;
  run.samples = samples;
  for (auto& recs : per) {
    for (auto& rec : recs) {
      ++run.draws;
      if (rec.degenerate) ++run.degenerate_draws;
      run.records.push_back(std::move(rec));
    }
    const SampleRecord& last = run.records.back();
    if (last.degenerate)
      ++run.exhausted;
    else if (last.agrees && last.failed_witnesses == 0)
      ++run.agreeing;
  }
  return run;
}

}  // namespace sextic
