#include "zeno/app/experiment.hpp"

#include <mpfr.h>

#include <algorithm>
#include <atomic>
#include <thread>
#include <variant>

#include "zeno/error.hpp"
#include "zeno/optics/baseline.hpp"

namespace zeno::app {

ResultRow compute_row(const ExperimentConfig& config, int n) {
  const optics::StackEvaluation eval = optics::evaluate_stack(config.stack_for(n));
  const hp::PrecisionContext ctx(eval.digits_used);
  ResultRow row;
  row.n = n;
  row.p_maxwell = eval.p_maxwell;
  row.p_projection = optics::projection_probability(n, ctx);
  row.abs_diff = hp::abs(row.p_maxwell - row.p_projection);
  row.t1 = eval.amplitudes.t1;
  row.t2 = eval.amplitudes.t2;
  row.r1 = eval.amplitudes.r1;
  row.r2 = eval.amplitudes.r2;
  row.digits_used = eval.digits_used;
  row.det_residual = eval.det_residual;
  return row;
}

namespace {

using Outcome = std::variant<std::monostate, ResultRow, RunFailure>;

int worker_count(const ExperimentConfig& config, int jobs) {
  if (!mpfr_buildopt_tls_p()) return 1;
  int threads = config.threads;
  if (threads == 0) threads = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  return std::clamp(threads, 1, jobs);
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  const int jobs = config.n_max - config.n_min + 1;
  std::vector<Outcome> outcomes(static_cast<std::size_t>(jobs));
  std::atomic<int> next{0};

  auto work = [&] {
    for (int job = next++; job < jobs; job = next++) {
      const int n = config.n_min + job;
      Outcome& slot = outcomes[static_cast<std::size_t>(job)];
      try {
        slot = compute_row(config, n);
      } catch (const Error& e) {
        if (e.category() != Error::Category::kNumerical) throw;
        slot = RunFailure{n, e.what()};
      }
    }
  };

  const int workers = worker_count(config, jobs);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    {
      std::vector<std::jthread> pool;
      for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            work();
          } catch (...) {
            errors[static_cast<std::size_t>(w)] = std::current_exception();
            next = jobs;
          }
        });
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  ExperimentResult result;
  for (Outcome& outcome : outcomes) {
    if (auto* failure = std::get_if<RunFailure>(&outcome)) {
      result.failure = std::move(*failure);
      break;
    }
    result.rows.push_back(std::move(std::get<ResultRow>(outcome)));
  }
  return result;
}

}  // namespace zeno::app
