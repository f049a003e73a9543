#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sextic/classify.hpp"

namespace sextic {

/// SplitMix64 stream. The state starts at mix(seed ^ mix(stream)), so every
/// (seed, stream) pair gives an independent, reproducible sequence.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next();
  /// Uniform in [0, n) by rejection; n > 0.
  std::uint64_t below(std::uint64_t n);
  Fp residue(const PrimeField& f);
  Fp nonzero(const PrimeField& f);

  static std::uint64_t mix(std::uint64_t z);

 private:
  std::uint64_t state_;
};

/// FNV-1a of the key, combined with the sample index.
std::uint64_t stream_id(std::string_view key, std::uint64_t index);

/// A named way of drawing parameters, e.g. "c1/ii-a" or "thm2/special".
struct Sampler {
  std::string key;
  FamilyId family;
  CatalogLabel expected;
};

const std::vector<Sampler>& samplers();
const Sampler& sampler(std::string_view key);  // BadParams if unknown

/// Parameters passing the family's guards and the branch's side conditions.
/// The form may still be singular.
FamilyParams draw_params(const Sampler& s, Rng& rng, const PrimeField& f);

struct SampleRecord {
  std::string sampler;
  int index = 0;
  int attempt = 0;  // 0 for the first draw; degenerate draws are retried
  FamilyId family = FamilyId::Fermat6;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> branches;
  CatalogLabel label = CatalogLabel::Unknown;
  CatalogLabel predicted = CatalogLabel::Unknown;
  bool agrees = false;
  GroupFingerprint fingerprint;
  bool degenerate = false;
  bool closure_added = false;
  int failed_witnesses = 0;
  int singular_draws = 0;  // singular forms skipped before this one
};

struct BranchRun {
  std::string sampler;
  std::vector<SampleRecord> records;  // every classified draw, degenerate ones included
  int samples = 0;
  int agreeing = 0;        // final draws with agrees and all witnesses verified
  int degenerate_draws = 0;
  int draws = 0;
  int exhausted = 0;       // samples still degenerate after the resample budget
  double degenerate_fraction() const { return draws ? static_cast<double>(degenerate_draws) / draws : 0.0; }
  bool all_agree() const { return agreeing == samples; }
};

inline constexpr int kResampleBudget = 10;
inline constexpr int kSingularBudget = 1000;

/// Draw, classify and record `samples` samples. Sample i uses the stream
/// stream_id(key, i) of `seed`, so runs are reproducible sample by sample.
BranchRun run_sampler(const Sampler& s, int samples, std::uint64_t seed, const PrimeField& f);

/// One smooth draw and its report (degenerate draws retried up to the budget).
struct Drawn {
  FamilyParams params;
  AutReport report;
  int attempts = 0;
};
Drawn draw_classified(const Sampler& s, Rng& rng, const PrimeField& f);

}  // namespace sextic
