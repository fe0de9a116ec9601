#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace hestondist::cli {

inline constexpr const char* kToolName = "hestondist";
inline constexpr const char* kVersion = "0.1.0";

/// One result document. `kind` is one of point-distance, line-distance,
/// level-set, horizontal, smile, oracle-compare.
struct OutputRecord {
  std::string kind;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json outputs = nlohmann::json::object();
  nlohmann::json diagnostics = nlohmann::json::object();

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

void to_json(nlohmann::json& j, const OutputRecord& r);
void from_json(const nlohmann::json& j, OutputRecord& r);

/// Runs the tool on argv without the program name. Returns 0 on success, 2 on
/// a usage error and 1 when the computation fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hestondist::cli
