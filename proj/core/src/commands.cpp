#include "salt/commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include "salt/errors.hpp"
#include "salt/estimates.hpp"
#include "salt/format.hpp"
#include "salt/parallel.hpp"
#include "salt/trajectory_io.hpp"

namespace salt {

namespace fs = std::filesystem;

namespace {

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParameterError("cannot write '" + path.string() + "'");
  out << text;
}

fs::path prepare_out(const ExperimentSpec& spec) {
  fs::path dir(spec.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw ParameterError("output directory '" + spec.out + "' is not writable");
  }
  write_file(dir / "manifest.txt", serialize(spec));
  return dir;
}

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

std::vector<TrajectoryRecord> run_ensemble(const ExperimentSpec& spec) {
  return parallel_map(spec.ensemble, spec.workers, [&](std::size_t i) {
    SimConfig cfg = spec.sim;
    cfg.seed = spec.sim.seed + i;
    return run_path(cfg);
  });
}

std::string ensemble_statistics(const std::vector<TrajectoryRecord>& members) {
  struct Acc {
    double t = 0.0;
    std::size_t count = 0;
    double hs = 0.0, hs2 = 0.0, v = 0.0, v2 = 0.0;
  };
  std::map<std::size_t, Acc> rows;
  for (const auto& m : members) {
    for (std::size_t i = 0; i < m.samples(); ++i) {
      auto& a = rows[m.steps[i]];
      a.t = m.t[i];
      ++a.count;
      a.hs += m.hs_norm[i];
      a.hs2 += m.hs_norm[i] * m.hs_norm[i];
      a.v += m.v_norm[i];
      a.v2 += m.v_norm[i] * m.v_norm[i];
    }
  }
  std::ostringstream out;
  out << "step,t,members,Hs_mean,Hs_std,V_mean,V_std\n";
  for (const auto& [step, a] : rows) {
    const double n = static_cast<double>(a.count);
    const double hm = a.hs / n;
    const double vm = a.v / n;
    out << step << ',' << format_double(a.t) << ',' << a.count << ','
        << format_double(hm) << ',' << format_double(std::sqrt(std::max(0.0, a.hs2 / n - hm * hm)))
        << ',' << format_double(vm) << ','
        << format_double(std::sqrt(std::max(0.0, a.v2 / n - vm * vm))) << '\n';
  }
  return out.str();
}

int cmd_simulate(const ExperimentSpec& spec, std::ostream& log) {
  const fs::path dir = prepare_out(spec);
  const auto members = run_ensemble(spec);
  std::ostringstream table;
  table << "seed,tau,stopped,reason,blowup_flag,samples\n";
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto& m = members[i];
    const auto seed = spec.sim.seed + i;
    std::ostringstream traj;
    write_trajectory(m, traj);
    write_file(dir / ("traj_seed" + std::to_string(seed) + ".csv"), traj.str());
    for (std::size_t j = 0; j < m.states.size(); ++j) {
      std::ostringstream st;
      write_state_table(m.states[j], st);
      write_file(dir / ("state_seed" + std::to_string(seed) + "_step" +
                        std::to_string(m.steps[j]) + ".csv"),
                 st.str());
    }
    table << seed << ',' << format_double(m.tau) << ',' << (m.stopped ? 1 : 0) << ','
          << to_string(m.reason) << ',' << (m.blowup_flag ? 1 : 0) << ',' << m.samples()
          << '\n';
    if (!m.diagnostic.empty()) log << "seed " << seed << ": " << m.diagnostic << '\n';
  }
  write_file(dir / "ensemble.csv", table.str());
  write_file(dir / "stats.csv", ensemble_statistics(members));
  log << "simulate: " << members.size() << " trajectories written to " << dir.string()
      << '\n';
  return 0;
}

int cmd_verify(const ExperimentSpec& spec, std::ostream& log) {
  const fs::path dir = prepare_out(spec);
  LabConfig lab = spec.lab;
  lab.workers = spec.workers;
  const auto reps = run_estimate(spec.estimate, lab);
  bool ok = true;
  for (const auto& r : reps) {
    std::ostringstream rep;
    write_report(r, rep);
    write_file(dir / ("report_" + r.id + ".csv"), rep.str());
    ok = ok && r.pass;
  }
  std::ostringstream summary;
  write_summary(reps, summary);
  write_file(dir / "summary.csv", summary.str());
  log << summary.str();
  for (const auto& r : reps) {
    if (!r.note.empty()) log << r.id << ": " << r.note << '\n';
  }
  return ok ? 0 : 1;
}

ConvergeReport converge(const ExperimentSpec& spec) {
  const SimConfig& base = spec.sim;
  if (spec.eps_ladder.empty() && spec.dt_ladder.empty()) {
    throw ParameterError("converge: give eps_ladder and/or dt_ladder");
  }
  for (const auto* ladder : {&spec.eps_ladder, &spec.dt_ladder}) {
    if (!ladder->empty() && ladder->size() < 3) {
      throw ParameterError("converge: ladder too short (" + std::to_string(ladder->size()) +
                           " rungs, need at least 3)");
    }
  }
  ConvergeReport rep;
  rep.eps_order = kNaN;
  rep.dt_order = kNaN;
  auto fit = [](const std::vector<double>& x, const std::vector<double>& y) {
    for (double v : y) {
      if (!(v > 0.0)) return kNaN;
    }
    return fit_loglog_slope(x, y);
  };

  if (!spec.eps_ladder.empty()) {
    const ModelState X0 = initial_state(base);
    const auto finals = parallel_map(spec.eps_ladder.size(), spec.workers, [&](std::size_t i) {
      SimConfig cfg = base;
      cfg.eps = spec.eps_ladder[i];
      const ModelOps ops = make_ops(cfg);
      const auto path = sample_path(cfg.seed, cfg.dt, cfg.n_steps(), ops.noise_count());
      return run_path(cfg, X0, ops, path);
    });
    std::vector<double> x, y;
    for (std::size_t i = 0; i + 1 < finals.size(); ++i) {
      const double d = state_norm(*finals[i].final_state - *finals[i + 1].final_state,
                                  base.s - 2.0);
      rep.rows.push_back({"eps", spec.eps_ladder[i], d});
      x.push_back(spec.eps_ladder[i]);
      y.push_back(d);
    }
    rep.eps_order = fit(x, y);
  }

  if (!spec.dt_ladder.empty()) {
    const auto& dts = spec.dt_ladder;
    for (std::size_t i = 1; i < dts.size(); ++i) {
      if (std::abs(dts[i - 1] / dts[i] - 2.0) > 1e-9) {
        throw ParameterError("converge: each dt_ladder rung must halve the previous one");
      }
    }
    const double dt_min = dts.back();
    SimConfig fine = base;
    fine.dt = dt_min;
    fine.validate();
    const std::size_t n_fine = fine.n_steps();
    std::vector<double> y;
    if (base.model == ModelKind::Linear) {
      const auto fit_lin = linear_strong_order(base.linear_rate, base.init_amplitude,
                                               base.T_end, n_fine, dts.size(), spec.paths,
                                               base.seed);
      // fit_lin.dts runs from fine to coarse.
      for (std::size_t i = 0; i < dts.size(); ++i) {
        const std::size_t j = dts.size() - 1 - i;
        rep.rows.push_back({"dt_exact", fit_lin.dts[j], fit_lin.errors[j]});
        y.push_back(fit_lin.errors[j]);
      }
    } else {
      const ModelState X0 = initial_state(base);
      const ModelOps ops = make_ops(base);
      const BrownianPath fine_path = sample_path(base.seed, dt_min, n_fine, ops.noise_count());
      std::vector<BrownianPath> paths{fine_path};
      while (paths.size() < dts.size()) paths.push_back(paths.back().coarsen());
      const auto dist = parallel_map(dts.size(), spec.workers, [&](std::size_t i) {
        const auto& path = paths[dts.size() - 1 - i];
        SimConfig cfg = base;
        cfg.dt = path.dt;
        cfg.scheme = Scheme::ItoEuler;
        const auto em = run_path(cfg, X0, ops, path);
        cfg.scheme = Scheme::StratHeun;
        const auto heun = run_path(cfg, X0, ops, path);
        return state_norm(*em.final_state - *heun.final_state, base.s - 2.0);
      });
      for (std::size_t i = 0; i < dts.size(); ++i) {
        rep.rows.push_back({"dt", dts[i], dist[i]});
        y.push_back(dist[i]);
      }
    }
    rep.dt_order = fit(dts, y);
  }
  return rep;
}

int cmd_converge(const ExperimentSpec& spec, std::ostream& log) {
  const fs::path dir = prepare_out(spec);
  const auto rep = converge(spec);
  std::ostringstream out;
  out << "kind,param,distance\n";
  for (const auto& r : rep.rows) {
    out << r.kind << ',' << format_double(r.param) << ',' << format_double(r.distance) << '\n';
  }
  write_file(dir / "converge.csv", out.str());
  log << out.str();
  log << "observed order in eps: " << format_double(rep.eps_order) << '\n';
  log << "observed order in dt: " << format_double(rep.dt_order) << '\n';
  return 0;
}

ModelState perturbed_state(const ExperimentSpec& spec, const ModelState& X0,
                           double delta) {
  const int m = spec.perturb_mode;
  const Grid& grid = X0.grid();
  const GridField bump =
      grid.dim() == 1
          ? GridField::from_function(grid, [&](double x) { return delta * std::cos(m * x); })
          : GridField::from_function(grid,
                                     [&](double x, double) { return delta * std::cos(m * x); });
  ModelState Y = X0;
  Y.components()[0] += bump;
  return Y;
}

int cmd_stability(const ExperimentSpec& spec, std::ostream& log) {
  const fs::path dir = prepare_out(spec);
  const ModelState X0 = initial_state(spec.sim);
  const auto deltas = std::vector<double>{spec.delta, spec.delta / 10.0};
  const auto reps = parallel_map(deltas.size(), spec.workers, [&](std::size_t i) {
    return stability_experiment(spec.sim, X0, perturbed_state(spec, X0, deltas[i]));
  });
  std::ostringstream out;
  out << "t,distance_delta,distance_delta_over_10\n";
  for (std::size_t i = 0; i < reps[0].t.size(); ++i) {
    out << format_double(reps[0].t[i]) << ',' << format_double(reps[0].distance[i]) << ','
        << (i < reps[1].distance.size() ? format_double(reps[1].distance[i]) : "") << '\n';
  }
  write_file(dir / "stability.csv", out.str());
  const double spread = std::abs(reps[0].ratio - reps[1].ratio) / reps[1].ratio;
  log << "ratio(delta) = " << format_double(reps[0].ratio)
      << ", ratio(delta/10) = " << format_double(reps[1].ratio)
      << ", relative difference = " << format_double(spread)
      << ", joint stopping time = " << format_double(std::min(reps[0].tau, reps[1].tau))
      << '\n';
  return 0;
}

int run_command(const ExperimentSpec& spec, std::ostream& log) {
  switch (spec.command) {
    case Command::Simulate: return cmd_simulate(spec, log);
    case Command::Verify: return cmd_verify(spec, log);
    case Command::Converge: return cmd_converge(spec, log);
    case Command::Stability: return cmd_stability(spec, log);
  }
  return 2;
}

}  // namespace salt
