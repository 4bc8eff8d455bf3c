#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zeno/app/config.hpp"
#include "zeno/hp/complex.hpp"

namespace zeno::app {

struct ResultRow {
  int n = 0;
  hp::HReal p_maxwell;
  hp::HReal p_projection;
  hp::HReal abs_diff;
  hp::HComplex t1;
  hp::HComplex t2;
  hp::HComplex r1;
  hp::HComplex r2;
  int digits_used = 0;
  /// |det M_tot - 1|
  hp::HReal det_residual;
};

/// The first N whose evaluation raised a numerical error.
struct RunFailure {
  int n = 0;
  std::string message;
};

struct ExperimentResult {
  std::vector<ResultRow> rows;  // ordered by N; stops before a failure
  std::optional<RunFailure> failure;
};

/// One row; numerical errors propagate.
ResultRow compute_row(const ExperimentConfig& config, int n);

/// All N in [n_min, n_max], in parallel when MPFR is thread-safe. A numerical
/// failure at some N keeps the rows below it and records the failure.
ExperimentResult run_experiment(const ExperimentConfig& config);

}  // namespace zeno::app
