#include "zeno/app/output.hpp"

#include <array>
#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "zeno/error.hpp"

namespace zeno::app {

using nlohmann::json;

namespace {

constexpr std::array<std::string_view, 14> kColumns = {"N",     "P_maxwell", "P_projection", "abs_diff", "T1_re",
                                                       "T1_im", "T2_re",     "T2_im",        "R1_re",    "R1_im",
                                                       "R2_re", "R2_im",     "digits_used",  "det_residual"};
constexpr std::string_view kFailurePrefix = "# FAILED N=";

// Enough to reproduce every printed digit on re-emission.
const hp::PrecisionContext kReadContext(kOutputSignificantDigits + 10);

std::array<std::string, 14> row_fields(const ResultRow& row) {
  return {std::to_string(row.n),        format_value(row.p_maxwell), format_value(row.p_projection),
          format_value(row.abs_diff),   format_value(row.t1.re()),   format_value(row.t1.im()),
          format_value(row.t2.re()),    format_value(row.t2.im()),   format_value(row.r1.re()),
          format_value(row.r1.im()),    format_value(row.r2.re()),   format_value(row.r2.im()),
          std::to_string(row.digits_used), format_value(row.det_residual)};
}

int parse_count(const std::string& text, std::string_view what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw ValidationError(std::string(what) + ": expected an integer, got '" + text + "'");
  return value;
}

ResultRow row_from_fields(const std::vector<std::string>& f) {
  auto real = [&](std::size_t i) { return hp::HReal::parse(f[i], kReadContext); };
  ResultRow row;
  row.n = parse_count(f[0], "N");
  row.p_maxwell = real(1);
  row.p_projection = real(2);
  row.abs_diff = real(3);
  row.t1 = {real(4), real(5)};
  row.t2 = {real(6), real(7)};
  row.r1 = {real(8), real(9)};
  row.r2 = {real(10), real(11)};
  row.digits_used = parse_count(f[12], "digits_used");
  row.det_residual = real(13);
  return row;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

json config_json(const ExperimentConfig& config) {
  json schedule = "zeno";
  if (config.schedule) {
    schedule = json::array();
    for (const hp::Angle& a : *config.schedule) schedule.push_back(a.to_string());
  }
  return {{"n_min", config.n_min},
          {"n_max", config.n_max},
          {"xi", config.xi.text()},
          {"eps1", config.eps.allowed.to_string()},
          {"eps2", config.eps.blocked.to_string()},
          {"digits", config.effective_digits().to_string()},
          {"schedule", schedule},
          {"spacer", config.spacer_xi ? json(config.spacer_xi->text()) : json(nullptr)}};
}

}  // namespace

std::string format_value(const hp::HReal& x) { return x.to_scientific(kOutputSignificantDigits); }

void write_csv(std::ostream& out, const ExperimentResult& result) {
  out << kCsvHeader << '\n';
  for (const ResultRow& row : result.rows) {
    const auto fields = row_fields(row);
    for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i];
    out << '\n';
  }
  if (result.failure) {
    std::string message = result.failure->message;
    for (char& c : message) {
      if (c == '\n' || c == '\r') c = ' ';
    }
    out << kFailurePrefix << result.failure->n << ": " << message << '\n';
  }
}

ExperimentResult read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw ValidationError("CSV does not start with the run header");
  ExperimentResult result;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line.starts_with(kFailurePrefix)) {
      const std::string rest = line.substr(kFailurePrefix.size());
      const std::size_t colon = rest.find(": ");
      if (colon == std::string::npos) throw ValidationError("line " + std::to_string(line_no) + ": malformed failure marker");
      result.failure = RunFailure{parse_count(rest.substr(0, colon), "N"), rest.substr(colon + 2)};
      continue;
    }
    if (line.starts_with('#')) continue;
    const auto fields = split_csv(line);
    if (fields.size() != kColumns.size()) {
      throw ValidationError("line " + std::to_string(line_no) + ": expected " + std::to_string(kColumns.size()) +
                            " fields, got " + std::to_string(fields.size()));
    }
    result.rows.push_back(row_from_fields(fields));
  }
  return result;
}

json to_json(const ExperimentResult& result, const ExperimentConfig& config) {
  json rows = json::array();
  for (const ResultRow& row : result.rows) {
    const auto fields = row_fields(row);
    json entry = json::object();
    for (std::size_t i = 0; i < kColumns.size(); ++i) entry[std::string(kColumns[i])] = fields[i];
    entry["N"] = row.n;
    entry["digits_used"] = row.digits_used;
    rows.push_back(std::move(entry));
  }
  json failure = nullptr;
  if (result.failure) failure = {{"N", result.failure->n}, {"message", result.failure->message}};
  return {{"schema", kJsonSchemaId}, {"config", config_json(config)}, {"rows", rows}, {"failure", failure}};
}

void validate_json(const json& doc) {
  auto fail = [](const std::string& what) { throw ValidationError("run JSON: " + what); };
  if (!doc.is_object()) fail("document is not an object");
  for (const char* key : {"schema", "config", "rows", "failure"}) {
    if (!doc.contains(key)) fail(std::string("missing key '") + key + "'");
  }
  if (doc["schema"] != kJsonSchemaId) fail("unknown schema id");
  if (!doc["config"].is_object()) fail("config is not an object");
  if (!doc["rows"].is_array()) fail("rows is not an array");
  for (std::size_t r = 0; r < doc["rows"].size(); ++r) {
    const json& row = doc["rows"][r];
    const std::string where = "rows[" + std::to_string(r) + "]";
    if (!row.is_object() || row.size() != kColumns.size()) fail(where + " must have exactly the run columns");
    for (std::string_view column : kColumns) {
      const std::string key(column);
      if (!row.contains(key)) fail(where + " lacks '" + key + "'");
      if (key == "N" || key == "digits_used") {
        if (!row[key].is_number_integer()) fail(where + "." + key + " is not an integer");
      } else {
        if (!row[key].is_string()) fail(where + "." + key + " is not a string");
        try {
          (void)hp::HReal::parse(row[key].get<std::string>(), kReadContext);
        } catch (const ValidationError&) {
          fail(where + "." + key + " is not a decimal number");
        }
      }
    }
  }
  const json& failure = doc["failure"];
  if (!failure.is_null()) {
    if (!failure.is_object() || !failure.contains("N") || !failure["N"].is_number_integer() ||
        !failure.contains("message") || !failure["message"].is_string()) {
      fail("failure must be null or {N: integer, message: string}");
    }
  }
}

void write_output(const ExperimentResult& result, const ExperimentConfig& config) {
  auto emit = [&](std::ostream& out) {
    if (config.format == OutputFormat::kCsv) {
      write_csv(out, result);
    } else {
      out << to_json(result, config).dump(2) << '\n';
    }
  };
  if (config.output_path.empty()) {
    emit(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream file(config.output_path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError(config.output_path, "cannot open output file for writing");
  emit(file);
  file.flush();
  if (!file) throw IoError(config.output_path, "write failed");
}

}  // namespace zeno::app
