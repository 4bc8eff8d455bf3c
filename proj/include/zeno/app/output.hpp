#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

#include "zeno/app/config.hpp"
#include "zeno/app/experiment.hpp"

namespace zeno::app {

inline constexpr std::string_view kCsvHeader =
    "N,P_maxwell,P_projection,abs_diff,T1_re,T1_im,T2_re,T2_im,R1_re,R1_im,R2_re,R2_im,digits_used,det_residual";
inline constexpr int kOutputSignificantDigits = 30;
inline constexpr std::string_view kJsonSchemaId = "zeno-run/1";

/// "+d.ddd...e+XX" with 30 significant digits.
std::string format_value(const hp::HReal& x);

/// Header, one line per row, then "# FAILED N=<n>: <message>" if the run failed.
void write_csv(std::ostream& out, const ExperimentResult& result);
/// Parses write_csv output. Values are read at a precision that reproduces
/// every printed digit. Throws ValidationError on malformed input.
ExperimentResult read_csv(std::istream& in);

nlohmann::json to_json(const ExperimentResult& result, const ExperimentConfig& config);
/// Throws ValidationError naming the first violation of the run schema.
void validate_json(const nlohmann::json& doc);

/// To config.output_path (stdout when empty) in config.format. Throws IoError.
void write_output(const ExperimentResult& result, const ExperimentConfig& config);

}  // namespace zeno::app
