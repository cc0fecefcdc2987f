#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "salt/estimates.hpp"
#include "salt/solver.hpp"

namespace salt {

enum class Command { Simulate, Verify, Converge, Stability };

std::string to_string(Command c);
Command parse_command(const std::string& text);

/// A fully resolved experiment: every field carries a value, defaults
/// included, so serialize() lists the complete run description.
struct ExperimentSpec {
  Command command = Command::Simulate;
  SimConfig sim{};
  LabConfig lab{};
  /// Estimate id for verify ("all" or one of estimate_ids()).
  std::string estimate = "all";
  std::size_t ensemble = 1;
  std::string out = "out";
  std::size_t workers = 1;
  /// converge: ε rungs, and dt rungs where each rung halves the previous.
  std::vector<double> eps_ladder;
  std::vector<double> dt_ladder;
  /// converge on the linear model: Monte Carlo sample size.
  std::size_t paths = 200;
  /// stability: size and wavenumber of the initial perturbation.
  double delta = 1e-6;
  int perturb_mode = 3;

  friend bool operator==(const ExperimentSpec&, const ExperimentSpec&) = default;
};

/// Parses the flat key-value format:
///
///   # comment
///   key = value
///
/// One assignment per line, no sections, no repeated keys. Lists are comma
/// separated. `model` selects the per-model defaults and must appear for
/// every command except verify; simulate, converge and stability also need
/// N, dt and T. Errors cite `source:line`.
ExperimentSpec parse_config_text(std::string_view text,
                                 const std::string& source = "<config>");
ExperimentSpec parse_config(const std::string& path);

/// Every key with its resolved value; parse_config_text(serialize(s)) == s.
std::string serialize(const ExperimentSpec& spec);

/// Keys understood by the parser, in manifest order.
const std::vector<std::string>& config_keys();

}  // namespace salt
