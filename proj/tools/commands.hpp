#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "config.hpp"

namespace proflik::cli {

struct RunContext {
  RunConfig config;
  std::filesystem::path output_dir;
  std::optional<std::uint64_t> seed_override;
  int threads = 1;
};

// Each command writes its artifacts under output_dir and returns their
// file names in creation order.
std::vector<std::string> cmd_simulate(const RunContext& ctx);
std::vector<std::string> cmd_fit(const RunContext& ctx);
std::vector<std::string> cmd_profile(const RunContext& ctx);
std::vector<std::string> cmd_predict(const RunContext& ctx);
std::vector<std::string> cmd_report(const RunContext& ctx);

}  // namespace proflik::cli
