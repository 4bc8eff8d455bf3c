#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zeno/optics/polarizer_stack.hpp"

namespace zeno::app {

enum class OutputFormat { kCsv, kJson };

/// Working precision for a run: a fixed digit count or per-N auto estimate.
struct DigitsChoice {
  std::optional<int> fixed;  // nullopt means auto

  static DigitsChoice parse(std::string_view text);
  std::string to_string() const;
  friend bool operator==(const DigitsChoice&, const DigitsChoice&) = default;
};

struct ExperimentConfig {
  int n_min = 1;
  int n_max = 20;
  optics::Decimal xi{"100"};
  optics::DielectricEigenvalues eps = optics::DielectricEigenvalues::parse("1", "1+2i");
  /// Unset: ZENO_DEFAULT_DIGITS if present, otherwise auto.
  std::optional<DigitsChoice> digits;
  /// Unset: theta_k = k pi / 2N. An explicit list fixes N to its length.
  std::optional<std::vector<hp::Angle>> schedule;
  std::optional<optics::Decimal> spacer_xi;
  std::string output_path;  // empty: stdout
  OutputFormat format = OutputFormat::kCsv;
  int threads = 0;  // 0: hardware concurrency

  /// Throws ValidationError.
  void validate() const;
  DigitsChoice effective_digits() const;
  optics::StackConfig stack_for(int n) const;
};

/// Sets one key. Keys: n_min, n_max, xi, eps1, eps2, digits, schedule, spacer,
/// output, format, threads. Throws ValidationError for unknown keys or bad values.
void apply_setting(ExperimentConfig& config, std::string_view key, std::string_view value);

/// Flat "key = value" lines; '#' starts a comment. `origin` prefixes errors.
ExperimentConfig parse_config(std::string_view text, std::string_view origin = "config");
ExperimentConfig load_config(const std::filesystem::path& path);

/// ZENO_DEFAULT_DIGITS, or nullopt when unset. Throws ValidationError when malformed.
std::optional<DigitsChoice> digits_from_environment();

OutputFormat parse_format(std::string_view text);
std::string_view to_string(OutputFormat format);

}  // namespace zeno::app
