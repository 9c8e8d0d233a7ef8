#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace b3cert::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInput = 2;

struct Outcome {
  int exit_code = kExitOk;
  std::string out;  // JSON or SVG document
  std::string err;
};

/// args excludes the program name.
Outcome run(const std::vector<std::string>& args);

/// Batch checks behind `suite <name>`; {"suite", "items": [{"item", "pass", ...}], "pass"}.
nlohmann::json run_suite(const std::string& name);
const std::vector<std::string>& suite_names();

}  // namespace b3cert::cli
