#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace sextic::cli {

inline constexpr int kOk = 0;
inline constexpr int kBindingFailure = 1;
inline constexpr int kConfigError = 2;
inline constexpr int kNotSmooth = 3;

struct RunConfig {
  std::uint64_t prime = 757;
  std::uint64_t seed = 1;
  int samples = 100;
  std::string family;  // sampler family filter, or the family for `classify`
  std::string branch;  // sampler branch filter
  std::string params;  // parameter file for `classify`
  std::optional<std::filesystem::path> out;
};

int cmd_verify(const std::string& target, const RunConfig& cfg, std::ostream& out);
int cmd_classify(const RunConfig& cfg, std::ostream& out);
int cmd_smooth(const std::string& form_file, const RunConfig& cfg, std::ostream& out);
int cmd_transform(const std::string& form_file, const std::string& matrix, const RunConfig& cfg, std::ostream& out);

std::string read_file(const std::string& path);

}  // namespace sextic::cli
