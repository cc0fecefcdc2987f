#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "salt/models.hpp"
#include "salt/noise.hpp"

namespace salt {

/// Cut-off radius; R > 1.
struct CutoffParam {
  double R;
  explicit CutoffParam(double radius);
};

/// Smooth step: exactly 1 on [0, R], exactly 0 on [2R, ∞), C^∞ and
/// non-increasing in between. Largest slope is 2 / R.
double chi_cutoff(double v, const CutoffParam& R);

enum class Scheme { ItoEuler, StratHeun };
std::string to_string(Scheme scheme);
Scheme parse_scheme(const std::string& text);

enum class InitKind { Cosine, Random, Zero };
std::string to_string(InitKind kind);
InitKind parse_init_kind(const std::string& text);

enum class StopReason { End, Threshold, Blowup, Divergence, Cfl };
std::string to_string(StopReason reason);

struct SimConfig {
  ModelKind model = ModelKind::Ccf;
  std::size_t N = 64;
  double dt = 1e-3;
  double T_end = 1.0;
  double eps = 1e-3;
  double R = 100.0;
  std::size_t K = 8;
  std::uint64_t seed = 0;
  double s = 4.0;
  double N_stop = 1e8;
  Scheme scheme = Scheme::ItoEuler;
  DecaySpec decay{};
  /// Regularity index at which the noise family is normalized.
  double s_max = 6.0;
  InitKind init = InitKind::Cosine;
  double init_amplitude = 0.1;
  /// Highest wavenumber of a random initial state.
  int init_band = 6;
  std::uint64_t init_seed = 1;
  /// Rate a of the linear test SDE dX = a X ∘ dW.
  double linear_rate = 1.0;
  std::size_t sample_every = 1;
  /// Blow-up indicator fires when the functional exceeds this multiple
  /// of its initial value.
  double blowup_factor = 50.0;
  double cfl = 0.5;
  bool record_states = false;

  /// Defaults for a model: s above the local-theory threshold, s_max = s + 2,
  /// one Wiener process for the linear test SDE.
  static SimConfig defaults(ModelKind model);
  /// Throws ParameterError naming the violated invariant.
  void validate() const;
  [[nodiscard]] std::size_t n_steps() const;
  [[nodiscard]] Grid grid() const;
  [[nodiscard]] std::size_t noise_count() const;

  friend bool operator==(const SimConfig&, const SimConfig&) = default;
};

ModelOps make_ops(const SimConfig& cfg);
ModelState initial_state(const SimConfig& cfg);

/// X + χ²(b + g_ε) dt + χ Σ_k h_ε^k dW_k with χ = χ_R(‖X‖_V).
/// Returns X unchanged when χ = 0.
ModelState step_ito_em(const ModelState& X, const ModelOps& ops,
                       std::span<const double> dW, double dt,
                       std::optional<CutoffParam> R = std::nullopt);

/// Heun step on the Stratonovich form (no Itô correction):
/// F(Y) = χ²(Y) drift(Y) dt + χ(Y) Σ h_ε^k(Y) dW_k, X' = X + (F(X) + F(X + F(X))) / 2.
ModelState step_strat_heun(const ModelState& X, const ModelOps& ops,
                           std::span<const double> dW, double dt,
                           std::optional<CutoffParam> R = std::nullopt);

struct TrajectoryRecord {
  ModelKind model = ModelKind::Ccf;
  std::vector<std::size_t> steps;
  std::vector<double> t;
  std::vector<double> hs_norm;
  /// Model blow-up functional.
  std::vector<double> v_norm;
  /// Cut-off argument ‖X‖_V.
  std::vector<double> cutoff_norm;
  /// Spatial mean of every component, one inner vector per sample.
  std::vector<std::vector<double>> means;
  std::vector<ModelState> states;
  bool stopped = false;
  double tau = 0.0;
  StopReason reason = StopReason::End;
  bool blowup_flag = false;
  std::string diagnostic;
  std::optional<ModelState> final_state;

  [[nodiscard]] std::size_t samples() const { return t.size(); }
};

TrajectoryRecord run_path(const SimConfig& cfg);
TrajectoryRecord run_path(const SimConfig& cfg, const ModelState& X0);
/// Integrates X0 along a given path; path.dt and path.K must match.
TrajectoryRecord run_path(const SimConfig& cfg, const ModelState& X0,
                          const ModelOps& ops, const BrownianPath& path);

struct StabilityReport {
  std::vector<double> t;
  std::vector<double> distance;
  double initial_distance = 0.0;
  double sup_distance = 0.0;
  /// sup_distance / initial_distance; NaN when the initial distance is 0.
  double ratio = 0.0;
  /// Joint stopping time.
  double tau = 0.0;
  bool stopped = false;
};

/// Runs X0 and Y0 on the same Brownian path and measures ‖X - Y‖ at index
/// s - 2 up to the first time either H^s norm reaches N_stop.
StabilityReport stability_experiment(const SimConfig& cfg, const ModelState& X0,
                                     const ModelState& Y0);

/// Exact solution X0 exp(a W) of dX = a X ∘ dW.
double linear_exact(double x0, double rate, double W);

struct OrderFit {
  std::vector<double> dts;
  std::vector<double> errors;
  double slope = 0.0;
};

/// Least-squares slope of log y against log x.
double fit_loglog_slope(std::span<const double> x, std::span<const double> y);

/// Monte Carlo strong error E|X_T - X0 exp(a W_T)| of Euler-Maruyama on the
/// Itô form of the linear test SDE, for dt = T / n_finest * 2^j,
/// j = 0..levels-1. Paths are seeds seed, seed+1, ...; each coarse path is
/// the coarsening of the finest one.
OrderFit linear_strong_order(double rate, double x0, double T,
                             std::size_t n_finest, std::size_t levels,
                             std::size_t n_paths, std::uint64_t seed);

}  // namespace salt
