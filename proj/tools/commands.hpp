#pragma once

// Command implementations for the toric command-line tool. Each command
// produces both a JSON document and a plain-text table.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toric/io.hpp"

namespace toric::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitMath = 4;

struct CommandOutput {
  Json json;
  std::string table;
  int status = kExitOk;
};

CommandOutput fan_check(const std::string& fan_path);
CommandOutput arr_poset(const std::string& arr_path);
CommandOutput arr_goodness(const std::string& arr_path, const std::string& fan_path, int bound);

CommandOutput model_nested(const std::string& arr_path);
CommandOutput model_admissible(const std::string& arr_path);
CommandOutput model_basis(const std::string& arr_path, const std::string& fan_path, int bound);
CommandOutput model_poincare(const std::string& arr_path, const std::string& fan_path, int bound);
CommandOutput model_presentation(const std::string& arr_path, const std::string& fan_path, int bound);

CommandOutput typea_eulerian(std::size_t n);
CommandOutput typea_lec(const std::string& word);
CommandOutput typea_psi(const std::string& forest, const std::string& sigma);
CommandOutput typea_psi_inverse(const std::string& forest);
CommandOutput typea_forests(std::size_t n);
CommandOutput typea_model(std::size_t n);
CommandOutput typea_verify(std::size_t order);

std::vector<std::string> reproduce_ids();
/// Runs a bundled example and compares the table output with
/// <golden_dir>/<id>.txt; with `update` the golden file is rewritten.
CommandOutput reproduce(const std::string& id, const std::string& data_dir, const std::string& golden_dir,
                        bool update);

}  // namespace toric::cli
