// saltsim: runs simulate / verify / converge / stability experiments from a
// flat key-value config file.

#include <CLI11.hpp>

#include <iostream>
#include <optional>

#include "salt/commands.hpp"
#include "salt/config.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Stochastic transport-noise fluid experiments"};
  app.require_subcommand(1);

  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::size_t> workers;

  const std::pair<const char*, salt::Command> commands[] = {
      {"simulate", salt::Command::Simulate},
      {"verify", salt::Command::Verify},
      {"converge", salt::Command::Converge},
      {"stability", salt::Command::Stability},
  };
  const char* help[] = {
      "integrate an ensemble and write trajectories",
      "run estimate checks; exit status 1 if any fails",
      "epsilon and dt ladders",
      "same-path perturbation experiment",
  };
  std::vector<CLI::App*> subs;
  for (std::size_t i = 0; i < 4; ++i) {
    auto* sub = app.add_subcommand(commands[i].first, help[i]);
    sub->add_option("config", config, "config file")->required()->check(CLI::ExistingFile);
    sub->add_option("--seed", seed, "base seed (overrides the config)");
    sub->add_option("--out", out, "output directory (overrides the config)");
    sub->add_option("--workers", workers, "worker threads (overrides the config)")
        ->check(CLI::PositiveNumber);
    subs.push_back(sub);
  }
  CLI11_PARSE(app, argc, argv);

  try {
    auto spec = salt::parse_config(config);
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (subs[i]->parsed()) spec.command = commands[i].second;
    }
    if (seed) spec.sim.seed = *seed;
    if (out) spec.out = *out;
    if (workers) spec.workers = *workers;
    return salt::run_command(spec, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "saltsim: " << e.what() << '\n';
    return 2;
  }
}
