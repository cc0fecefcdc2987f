#include "salt/solver.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "salt/corpus.hpp"
#include "salt/errors.hpp"
#include "salt/format.hpp"

namespace salt {

CutoffParam::CutoffParam(double radius) : R(radius) {
  if (!(radius > 1.0) || !std::isfinite(radius)) {
    throw ParameterError("cut-off radius R must be a finite number > 1, got " +
                         format_double(radius));
  }
}

double chi_cutoff(double v, const CutoffParam& R) {
  if (v <= R.R) return 1.0;
  if (v >= 2.0 * R.R) return 0.0;
  const double t = (v - R.R) / R.R;
  const double a = std::exp(-1.0 / (1.0 - t));
  const double b = std::exp(-1.0 / t);
  return a / (a + b);
}

std::string to_string(Scheme scheme) {
  return scheme == Scheme::ItoEuler ? "ito_em" : "strat_heun";
}

Scheme parse_scheme(const std::string& text) {
  if (text == "ito_em") return Scheme::ItoEuler;
  if (text == "strat_heun") return Scheme::StratHeun;
  throw ParameterError("unknown scheme '" + text + "' (expected ito_em or strat_heun)");
}

std::string to_string(InitKind kind) {
  switch (kind) {
    case InitKind::Cosine: return "cosine";
    case InitKind::Random: return "random";
    case InitKind::Zero: return "zero";
  }
  return "unknown";
}

InitKind parse_init_kind(const std::string& text) {
  if (text == "cosine") return InitKind::Cosine;
  if (text == "random") return InitKind::Random;
  if (text == "zero") return InitKind::Zero;
  throw ParameterError("unknown init '" + text + "' (expected cosine, random or zero)");
}

std::string to_string(StopReason reason) {
  switch (reason) {
    case StopReason::End: return "end";
    case StopReason::Threshold: return "threshold";
    case StopReason::Blowup: return "blowup";
    case StopReason::Divergence: return "divergence";
    case StopReason::Cfl: return "cfl";
  }
  return "unknown";
}

// SimConfig ------------------------------------------------------------------

SimConfig SimConfig::defaults(ModelKind model) {
  SimConfig cfg;
  cfg.model = model;
  switch (model) {
    case ModelKind::Sch2: cfg.s = 6.0; break;
    case ModelKind::Ccf: cfg.s = 4.0; break;
    case ModelKind::Sqg: cfg.s = 4.5; break;
    case ModelKind::Linear:
      cfg.s = 0.0;
      cfg.N = 2;
      cfg.K = 1;
      cfg.init_amplitude = 1.0;
      break;
  }
  cfg.s_max = cfg.s + 2.0;
  return cfg;
}

void SimConfig::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw ParameterError("dt must be > 0, got " + format_double(dt));
  }
  if (!(T_end >= 0.0) || !std::isfinite(T_end)) {
    throw ParameterError("T must be >= 0, got " + format_double(T_end));
  }
  if (!(eps > 0.0 && eps < 1.0)) {
    throw ParameterError("epsilon must lie in (0,1), got " + format_double(eps));
  }
  CutoffParam{R};
  const double thr = sobolev_threshold(model);
  if (model != ModelKind::Linear && !(s > thr)) {
    throw ParameterError("s must exceed " + format_double(thr) + " for " +
                         to_string(model) + ", got " + format_double(s));
  }
  if (!(N_stop > 0.0)) throw ParameterError("N_stop must be > 0");
  if (N < 2 || (N & (N - 1)) != 0) {
    throw ParameterError("N must be a power of two >= 2, got " + std::to_string(N));
  }
  if (model == ModelKind::Linear && K != 1) {
    throw ParameterError("the linear test SDE has exactly one noise (K = 1)");
  }
  if (sample_every == 0) throw ParameterError("sample_every must be >= 1");
  if (!(blowup_factor > 1.0)) throw ParameterError("blowup_factor must be > 1");
  if (!(cfl > 0.0)) throw ParameterError("cfl must be > 0");
  if (init_band < 1) throw ParameterError("init_band must be >= 1");
  const double steps = T_end / dt;
  if (std::abs(steps - std::round(steps)) > 1e-9 * std::max(1.0, steps)) {
    throw ParameterError("T / dt must be an integer, got " + format_double(steps));
  }
}

std::size_t SimConfig::n_steps() const {
  return static_cast<std::size_t>(std::llround(T_end / dt));
}

Grid SimConfig::grid() const { return Grid(model == ModelKind::Sqg ? 2 : 1, N); }

std::size_t SimConfig::noise_count() const { return K; }

ModelOps make_ops(const SimConfig& cfg) {
  const Grid grid = cfg.grid();
  switch (cfg.model) {
    case ModelKind::Linear: return ModelOps::linear(grid, cfg.linear_rate);
    case ModelKind::Sqg:
      return ModelOps(cfg.model, build_basis_sqg(grid, cfg.K, cfg.decay, cfg.s_max),
                      cfg.eps);
    default:
      return ModelOps(cfg.model, build_basis_1d(grid, cfg.K, cfg.decay, cfg.s_max),
                      cfg.eps);
  }
}

ModelState initial_state(const SimConfig& cfg) {
  const Grid grid = cfg.grid();
  const double A = cfg.init_amplitude;
  if (cfg.init == InitKind::Zero) {
    switch (cfg.model) {
      case ModelKind::Sch2: return ModelState::sch2(GridField(grid), GridField(grid));
      case ModelKind::Ccf: return ModelState::ccf(GridField(grid));
      case ModelKind::Sqg: return ModelState::sqg(GridField(grid));
      case ModelKind::Linear: return ModelState::linear(GridField(grid));
    }
  }
  if (cfg.init == InitKind::Random) {
    TrigSpec spec{Roughness::Smooth, 0.0, cfg.init_band, cfg.init_seed, A, 0.0};
    switch (cfg.model) {
      case ModelKind::Sch2: {
        auto u = random_trig(grid, spec);
        spec.seed += 1000003;
        return ModelState::sch2(std::move(u), random_trig(grid, spec));
      }
      case ModelKind::Ccf: return ModelState::ccf(random_trig(grid, spec));
      case ModelKind::Sqg: return ModelState::sqg(random_trig(grid, spec));
      case ModelKind::Linear: break;
    }
  }
  switch (cfg.model) {
    case ModelKind::Sch2:
      return ModelState::sch2(
          GridField::from_function(grid, [A](double x) { return A * std::cos(x); }),
          GridField::from_function(grid, [A](double x) { return A * std::sin(x); }));
    case ModelKind::Ccf:
      return ModelState::ccf(
          GridField::from_function(grid, [A](double x) { return A * std::cos(x); }));
    case ModelKind::Sqg:
      return ModelState::sqg(GridField::from_function(grid, [A](double x, double y) {
        return A * (std::cos(x) + 0.5 * std::sin(x + 2.0 * y));
      }));
    case ModelKind::Linear:
      return ModelState::linear(GridField::constant(grid, A));
  }
  throw UnsupportedError("initial_state: unknown model");
}

// Steppers -------------------------------------------------------------------

namespace {

double cutoff_factor(const ModelState& X, const std::optional<CutoffParam>& R) {
  return R ? chi_cutoff(v_norm(X), *R) : 1.0;
}

void check_increments(const ModelOps& ops, std::span<const double> dW) {
  if (dW.size() != ops.noise_count()) {
    throw ParameterError("stepper: path provides " + std::to_string(dW.size()) +
                         " increments, model needs " +
                         std::to_string(ops.noise_count()));
  }
}

}  // namespace

ModelState step_ito_em(const ModelState& X, const ModelOps& ops,
                       std::span<const double> dW, double dt,
                       std::optional<CutoffParam> R) {
  check_increments(ops, dW);
  const double chi = cutoff_factor(X, R);
  if (chi == 0.0) return X;
  ModelState drift = ops.b(X);
  drift += ops.g_eps(X);
  ModelState out = X;
  out.axpy(chi * chi * dt, drift);
  out.axpy(chi, ops.noise_eps(X, dW));
  return out;
}

ModelState step_strat_heun(const ModelState& X, const ModelOps& ops,
                           std::span<const double> dW, double dt,
                           std::optional<CutoffParam> R) {
  check_increments(ops, dW);
  auto F = [&](const ModelState& Y) {
    const double chi = cutoff_factor(Y, R);
    ModelState inc = ModelState::zeros_like(Y);
    if (chi == 0.0) return inc;
    inc.axpy(chi * chi * dt, ops.strat_drift_eps(Y));
    inc.axpy(chi, ops.noise_eps(Y, dW));
    return inc;
  };
  const ModelState F0 = F(X);
  ModelState pred = X;
  pred += F0;
  const ModelState F1 = F(pred);
  ModelState out = X;
  out.axpy(0.5, F0);
  out.axpy(0.5, F1);
  return out;
}

// Trajectories ---------------------------------------------------------------

namespace {

void record_sample(TrajectoryRecord& rec, const SimConfig& cfg, std::size_t step,
                   double t, const ModelState& X, double hs) {
  rec.steps.push_back(step);
  rec.t.push_back(t);
  rec.hs_norm.push_back(hs);
  rec.v_norm.push_back(blowup_functional(X));
  rec.cutoff_norm.push_back(v_norm(X));
  std::vector<double> m;
  for (const auto& c : X.components()) m.push_back(c.mean());
  rec.means.push_back(std::move(m));
  if (cfg.record_states) rec.states.push_back(X);
}

}  // namespace

TrajectoryRecord run_path(const SimConfig& cfg) {
  return run_path(cfg, initial_state(cfg));
}

TrajectoryRecord run_path(const SimConfig& cfg, const ModelState& X0) {
  cfg.validate();
  const ModelOps ops = make_ops(cfg);
  const BrownianPath path =
      sample_path(cfg.seed, cfg.dt, cfg.n_steps(), ops.noise_count());
  return run_path(cfg, X0, ops, path);
}

TrajectoryRecord run_path(const SimConfig& cfg, const ModelState& X0,
                          const ModelOps& ops, const BrownianPath& path) {
  cfg.validate();
  if (X0.kind() != cfg.model) {
    throw ParameterError("run_path: initial state is " + to_string(X0.kind()) +
                         ", config says " + to_string(cfg.model));
  }
  const std::size_t n_steps = cfg.n_steps();
  if (path.K != ops.noise_count() || path.n_steps < n_steps ||
      std::abs(path.dt - cfg.dt) > 1e-15 * cfg.dt) {
    throw ParameterError("run_path: Brownian path does not match the config");
  }
  const CutoffParam R{cfg.R};
  TrajectoryRecord rec;
  rec.model = cfg.model;
  ModelState X = X0;
  double hs = state_norm(X, cfg.s);
  record_sample(rec, cfg, 0, 0.0, X, hs);
  const double F0 = rec.v_norm.front();
  auto finish = [&](StopReason reason, double t) {
    rec.stopped = reason != StopReason::End;
    rec.reason = reason;
    rec.tau = t;
    rec.final_state = X;
    return rec;
  };
  if (hs >= cfg.N_stop) return finish(StopReason::Threshold, 0.0);

  const double dx = X.grid().spacing();
  for (std::size_t n = 0; n < n_steps; ++n) {
    const double t0 = static_cast<double>(n) * cfg.dt;
    const double speed = transport_speed(X);
    if (cfg.dt * speed > cfg.cfl * dx) {
      rec.diagnostic = "CFL guard: dt * max speed = " + format_double(cfg.dt * speed) +
                       " exceeds " + format_double(cfg.cfl) + " * dx = " +
                       format_double(cfg.cfl * dx) + " at t = " + format_double(t0);
      return finish(StopReason::Cfl, t0);
    }
    const auto dW = path.step(n);
    X = cfg.scheme == Scheme::ItoEuler ? step_ito_em(X, ops, dW, cfg.dt, R)
                                       : step_strat_heun(X, ops, dW, cfg.dt, R);
    const double t = static_cast<double>(n + 1) * cfg.dt;
    if (!X.all_finite()) {
      rec.diagnostic = "non-finite state at t = " + format_double(t);
      return finish(StopReason::Divergence, t);
    }
    hs = state_norm(X, cfg.s);
    const bool last = n + 1 == n_steps;
    if (hs >= cfg.N_stop) {
      record_sample(rec, cfg, n + 1, t, X, hs);
      return finish(StopReason::Threshold, t);
    }
    if ((n + 1) % cfg.sample_every == 0 || last) {
      record_sample(rec, cfg, n + 1, t, X, hs);
      if (F0 > 0.0 && rec.v_norm.back() > cfg.blowup_factor * F0) {
        rec.blowup_flag = true;
        rec.diagnostic = "blow-up indicator: functional grew past " +
                         format_double(cfg.blowup_factor) + "x its initial value";
        return finish(StopReason::Blowup, t);
      }
    }
  }
  return finish(StopReason::End, cfg.T_end);
}

StabilityReport stability_experiment(const SimConfig& cfg, const ModelState& X0,
                                     const ModelState& Y0) {
  cfg.validate();
  if (X0.kind() != cfg.model || Y0.kind() != cfg.model || !(X0.grid() == Y0.grid())) {
    throw ParameterError("stability_experiment: states do not match the config");
  }
  const ModelOps ops = make_ops(cfg);
  const BrownianPath path =
      sample_path(cfg.seed, cfg.dt, cfg.n_steps(), ops.noise_count());
  const CutoffParam R{cfg.R};
  const double z = cfg.s - 2.0;
  auto step = [&](const ModelState& S, std::size_t n) {
    return cfg.scheme == Scheme::ItoEuler
               ? step_ito_em(S, ops, path.step(n), cfg.dt, R)
               : step_strat_heun(S, ops, path.step(n), cfg.dt, R);
  };

  StabilityReport rep;
  ModelState X = X0;
  ModelState Y = Y0;
  rep.initial_distance = state_norm(X - Y, z);
  rep.t.push_back(0.0);
  rep.distance.push_back(rep.initial_distance);
  rep.sup_distance = rep.initial_distance;
  auto over = [&](const ModelState& S) { return state_norm(S, cfg.s) >= cfg.N_stop; };
  if (over(X) || over(Y)) {
    rep.stopped = true;
  } else {
    for (std::size_t n = 0; n < cfg.n_steps(); ++n) {
      X = step(X, n);
      Y = step(Y, n);
      const double t = static_cast<double>(n + 1) * cfg.dt;
      const double d = state_norm(X - Y, z);
      rep.t.push_back(t);
      rep.distance.push_back(d);
      rep.sup_distance = std::max(rep.sup_distance, d);
      rep.tau = t;
      if (!X.all_finite() || !Y.all_finite() || over(X) || over(Y)) {
        rep.stopped = true;
        break;
      }
    }
  }
  rep.ratio = rep.initial_distance > 0.0
                  ? rep.sup_distance / rep.initial_distance
                  : std::numeric_limits<double>::quiet_NaN();
  return rep;
}

double linear_exact(double x0, double rate, double W) {
  return x0 * std::exp(rate * W);
}

double fit_loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw ParameterError("fit_loglog_slope: need at least two matching points");
  }
  double mx = 0.0, my = 0.0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]) / n;
    my += std::log(y[i]) / n;
  }
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

OrderFit linear_strong_order(double rate, double x0, double T,
                             std::size_t n_finest, std::size_t levels,
                             std::size_t n_paths, std::uint64_t seed) {
  if (levels < 2 || n_paths == 0 || n_finest >> (levels - 1) == 0) {
    throw ParameterError("linear_strong_order: ladder too short");
  }
  const Grid grid(1, 2);
  const ModelOps ops = ModelOps::linear(grid, rate);
  OrderFit fit;
  fit.errors.assign(levels, 0.0);
  for (std::size_t j = 0; j < levels; ++j) {
    fit.dts.push_back(T / static_cast<double>(n_finest) * std::ldexp(1.0, int(j)));
  }
  for (std::size_t p = 0; p < n_paths; ++p) {
    BrownianPath path = sample_path(seed + p, T / static_cast<double>(n_finest),
                                    n_finest, 1);
    const double exact = linear_exact(x0, rate, path.value(0, n_finest));
    for (std::size_t j = 0; j < levels; ++j) {
      if (j > 0) path = path.coarsen();
      ModelState X = ModelState::linear(GridField::constant(grid, x0));
      for (std::size_t n = 0; n < path.n_steps; ++n) {
        X = step_ito_em(X, ops, path.step(n), path.dt);
      }
      fit.errors[j] += std::abs(X.x()[0] - exact) / static_cast<double>(n_paths);
    }
  }
  fit.slope = fit_loglog_slope(fit.dts, fit.errors);
  return fit;
}

}  // namespace salt
