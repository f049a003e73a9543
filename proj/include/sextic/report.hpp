#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include "json.hpp"
#include "sextic/classify.hpp"
#include "sextic/sampling.hpp"

namespace sextic {

using nlohmann::json;

// Every record is a flat JSON object with a "kind" field; object keys are
// emitted in sorted order so reports diff cleanly.

json to_json(const GroupFingerprint& fp);
json to_json(const SampleRecord& r);
json to_json(const BranchRun& run);  // the summary record only, not the samples
json to_json(const AutReport& r, const PrimeField& f);
json to_json(const TransportReport& r, const PrimeField& f);
json to_json(const VertexSample& v);
json to_json(const EvidenceReport& r);
json to_json(const StrataTable& t);
json to_json(const PresentationReport& r);
json params_json(const FamilyParams& params);

/// Line-delimited writer. With no directory, records are discarded and only
/// the summary goes to the caller's stream.
class ReportSink {
 public:
  ReportSink(const std::optional<std::filesystem::path>& dir, const std::string& name);
  void write(const json& record);
  bool active() const noexcept { return out_.is_open(); }
  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
  std::ofstream out_;
};

}  // namespace sextic
