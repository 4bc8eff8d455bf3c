#include "zeno/app/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "zeno/error.hpp"

namespace zeno::app {

namespace {

// Decimal-radian schedule entries are stored at this precision.
const hp::PrecisionContext kAngleContext(2048);

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view key, std::string_view text) {
  text = trim(text);
  int value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
    throw ValidationError(std::string(key) + ": expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

std::vector<hp::Angle> parse_schedule(std::string_view text) {
  std::vector<hp::Angle> angles;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (item.empty()) throw ValidationError("schedule: empty angle entry");
    angles.push_back(hp::Angle::parse(item, kAngleContext));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return angles;
}

}  // namespace

DigitsChoice DigitsChoice::parse(std::string_view text) {
  text = trim(text);
  if (text == "auto") return {};
  const int value = parse_int("digits", text);
  if (value < 1) throw ValidationError("digits must be positive or 'auto'");
  return {value};
}

std::string DigitsChoice::to_string() const { return fixed ? std::to_string(*fixed) : "auto"; }

OutputFormat parse_format(std::string_view text) {
  text = trim(text);
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "json") return OutputFormat::kJson;
  throw ValidationError("format must be 'csv' or 'json', got '" + std::string(text) + "'");
}

std::string_view to_string(OutputFormat format) { return format == OutputFormat::kCsv ? "csv" : "json"; }

void ExperimentConfig::validate() const {
  if (n_min < 1) throw ValidationError("n_min must be >= 1");
  if (n_max < n_min) throw ValidationError("n_max must be >= n_min");
  if (xi.approx() <= 0.0) throw ValidationError("xi must be positive");
  if (spacer_xi && spacer_xi->approx() <= 0.0) throw ValidationError("spacer must be positive");
  if (schedule) {
    const int size = static_cast<int>(schedule->size());
    if (n_min != size || n_max != size) {
      throw ValidationError("an explicit schedule of " + std::to_string(size) + " angles requires n_min = n_max = " +
                            std::to_string(size));
    }
  }
  if (threads < 0) throw ValidationError("threads must be >= 0");
}

DigitsChoice ExperimentConfig::effective_digits() const {
  if (digits) return *digits;
  return digits_from_environment().value_or(DigitsChoice{});
}

optics::StackConfig ExperimentConfig::stack_for(int n) const {
  optics::StackConfig stack = optics::StackConfig::zeno(n, xi, eps);
  if (schedule) stack.angle_schedule = *schedule;
  stack.digits = effective_digits().fixed;
  stack.spacer_xi = spacer_xi;
  return stack;
}

void apply_setting(ExperimentConfig& config, std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  if (key == "n_min") {
    config.n_min = parse_int(key, value);
  } else if (key == "n_max") {
    config.n_max = parse_int(key, value);
  } else if (key == "xi") {
    config.xi = optics::Decimal(value);
  } else if (key == "eps1") {
    config.eps.allowed = optics::AxisPermittivity(optics::ComplexLiteral::parse(value));
  } else if (key == "eps2") {
    config.eps.blocked = optics::AxisPermittivity(optics::ComplexLiteral::parse(value));
  } else if (key == "digits") {
    config.digits = DigitsChoice::parse(value);
  } else if (key == "schedule") {
    if (value == "zeno") {
      config.schedule.reset();
    } else {
      config.schedule = parse_schedule(value);
      config.n_min = config.n_max = static_cast<int>(config.schedule->size());
    }
  } else if (key == "spacer") {
    if (value == "none") {
      config.spacer_xi.reset();
    } else {
      config.spacer_xi = optics::Decimal(value);
    }
  } else if (key == "output") {
    config.output_path = std::string(value);
  } else if (key == "format") {
    config.format = parse_format(value);
  } else if (key == "threads") {
    config.threads = parse_int(key, value);
  } else {
    throw ValidationError("unknown configuration key '" + std::string(key) + "'");
  }
}

ExperimentConfig parse_config(std::string_view text, std::string_view origin) {
  ExperimentConfig config;
  std::istringstream lines{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    std::string_view body = line;
    if (const std::size_t hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    body = trim(body);
    if (body.empty()) continue;
    const std::size_t eq = body.find('=');
    const std::string where = std::string(origin) + ":" + std::to_string(line_no) + ": ";
    if (eq == std::string_view::npos) throw ValidationError(where + "expected 'key = value'");
    try {
      apply_setting(config, body.substr(0, eq), body.substr(eq + 1));
    } catch (const ValidationError& e) {
      throw ValidationError(where + e.what());
    }
  }
  return config;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path.string(), "cannot open configuration file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), path.string());
}

std::optional<DigitsChoice> digits_from_environment() {
  const char* raw = std::getenv("ZENO_DEFAULT_DIGITS");
  if (raw == nullptr || trim(raw).empty()) return std::nullopt;
  try {
    return DigitsChoice::parse(raw);
  } catch (const ValidationError& e) {
    throw ValidationError(std::string("ZENO_DEFAULT_DIGITS: ") + e.what());
  }
}

}  // namespace zeno::app
