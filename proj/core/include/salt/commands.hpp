#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "salt/config.hpp"
#include "salt/solver.hpp"

namespace salt {

/// Members with seeds sim.seed + i, i < ensemble, in seed order.
std::vector<TrajectoryRecord> run_ensemble(const ExperimentSpec& spec);

/// Per-step mean and standard deviation of the H^s norm and the blow-up
/// functional across members, summed in seed order:
/// step,t,members,Hs_mean,Hs_std,V_mean,V_std.
std::string ensemble_statistics(const std::vector<TrajectoryRecord>& members);

struct ConvergeRow {
  /// "eps", "dt" (EM vs Heun at T) or "dt_exact" (linear model strong error).
  std::string kind;
  double param = 0.0;
  double distance = 0.0;
};

struct ConvergeReport {
  std::vector<ConvergeRow> rows;
  /// Slopes of log distance against log ε and log dt; NaN when a ladder
  /// is absent or all its distances vanish.
  double eps_order = 0.0;
  double dt_order = 0.0;
};

/// Fixed seed and grid. ε ladder: ‖X_{ε_i}(T) - X_{ε_{i+1}}(T)‖ at index
/// s - 2. dt ladder: ‖X_EM(T) - X_Heun(T)‖ at s - 2 on one refined path, or
/// the EM strong error against the exact solution for the linear model.
/// Throws ParameterError for ladders shorter than 3 rungs.
ConvergeReport converge(const ExperimentSpec& spec);

/// X0 from the config and Y0 = X0 + δ cos(m x1) (on u for sch2).
ModelState perturbed_state(const ExperimentSpec& spec, const ModelState& X0,
                           double delta);

/// Each command writes its files under spec.out, prints a short summary to
/// `log` and returns the process exit status.
int cmd_simulate(const ExperimentSpec& spec, std::ostream& log);
int cmd_verify(const ExperimentSpec& spec, std::ostream& log);
int cmd_converge(const ExperimentSpec& spec, std::ostream& log);
int cmd_stability(const ExperimentSpec& spec, std::ostream& log);
int run_command(const ExperimentSpec& spec, std::ostream& log);

}  // namespace salt
