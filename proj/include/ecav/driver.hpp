#pragma once

#include <functional>
#include <optional>
#include <string>

#include "ecav/config.hpp"
#include "ecav/diagnostics.hpp"

namespace ecav {

enum class RunStatus
{
  completed,
  integration_failure,
  admissibility_failure,
};

const char* to_string(RunStatus status);

/// Process exit codes of the command-line driver.
enum ExitCode : int
{
  exit_ok = 0,
  exit_config_error = 2,
  exit_integration_failure = 3,
  exit_admissibility_failure = 4,
};

int exit_code(RunStatus status);

/// Everything needed to advance one configured experiment.
struct Setup
{
  Problem problem;
  Discretization disc;
  SpatialOperator op;
  SolutionField initial;
  double t_final;
};

Setup make_setup(const RunConfig& cfg);

struct RunResult
{
  RunStatus status = RunStatus::completed;
  std::string failure;        ///< message for failed runs
  int failure_element = -1;
  int failure_node = -1;
  double t_reached = 0.0;
  SolutionField solution;     ///< last accepted state
  StageDiagnostics final_diagnostics;
  EntropyHistory history;
  int accepted_steps = 0;
  int rejected_steps = 0;
  long rhs_evaluations = 0;
  double wall_seconds = 0.0;
  /// Largest eq22_rate / eq22_scale over every stage evaluation of the run.
  double max_stage_eq22_relative = -1.0;
  double final_l2_error = 0.0;         ///< NaN without an exact solution
  double final_l1_density_error = 0.0; ///< NaN without an exact solution
  bool positive = true;                ///< min density and pressure at quadrature points > 0
  double min_density = 0.0;
  double min_pressure = 0.0;
};

using SnapshotCallback = std::function<void(double t, const SolutionField& u)>;

/// Integrate a configuration to its final time. Admissibility and step-size
/// failures are reported in the result rather than thrown.
RunResult simulate(const RunConfig& cfg, const SnapshotCallback& on_snapshot = {});

/// Advance an existing setup; used by simulate and the spectrum command.
RunResult simulate(const RunConfig& cfg, const Setup& setup, const SnapshotCallback& on_snapshot = {});

// CSV writers. Floating point columns use scientific notation with 17
// significant digits.
void write_snapshot_csv(const std::string& path, const SolutionField& u, const Eigen::VectorXd& eps_quad,
                        const ExactSolution& exact, double t);
void write_history_csv(const std::string& path, const EntropyHistory& history);
void write_convergence_csv(const std::string& path, const ConvergenceTable& table);
void write_residual_csv(const std::string& path, const std::vector<ResidualStudy>& studies);
void write_spectrum_csv(const std::string& path, const SpectrumReport& report);

/// Config echo followed by `result.*` lines; loadable with load_config.
std::string manifest_text(const RunConfig& cfg, const RunResult& result);

/// Command implementations; each returns a process exit code and reports
/// problems on stderr.
int run_command(const std::string& config_path, const std::optional<std::string>& out_dir);
int sweep_command(const std::string& config_path, const std::string& grid_path,
                  const std::optional<std::string>& out_dir);
int spectrum_command(const std::string& config_path, const std::optional<std::string>& out_dir);

} // namespace ecav
