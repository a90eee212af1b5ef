#pragma once

// Task runners. Each produces one deterministic report.

#include <optional>
#include <string>
#include <vector>

#include "config.hpp"
#include "glmn/superalgebra.hpp"
#include "report.hpp"

namespace glmn::app {

struct RunOptions {
  ExperimentConfig config;
  std::optional<std::string> dump_module_dir;
};

/// Algebra, character and chosen weights shared by the tasks of one run.
struct Setting {
  SuperAlgebra algebra;     // over the input field
  Character chi;
  WeightVariety variety;    // possibly over an extension
  std::vector<Weight> lambdas;
  std::vector<std::size_t> lambda_index;  // position in variety.weights
};

/// Throws ConfigError on invalid field, algebra, character or weights.
Setting make_setting(const ExperimentConfig& c);

/// Never throws for task-level failures; status is one of pass, fail, error, refused.
Report run_task(const std::string& task, const RunOptions& opt, const Setting& s);

/// Normal form of the pbar product and its Cartan projection, as text.
std::string dump_pbar_element(const Setting& s);

/// 0 pass, 1 hard failure, 2 config or budget refusal.
int exit_code(const std::vector<Report>& reports);

/// Runs f(0..count-1) on up to `jobs` threads; results in index order; the
/// first exception by index is rethrown.
std::vector<Report> parallel_rows(std::size_t count, unsigned jobs, const std::function<Report(std::size_t)>& f);

}  // namespace glmn::app
