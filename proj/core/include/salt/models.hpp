#pragma once

#include <span>
#include <string>
#include <vector>

#include "salt/grid.hpp"
#include "salt/noise.hpp"

namespace salt {

/// Model variants. Linear is the degenerate scalar test SDE dX = a X ∘ dW
/// applied independently at every grid node.
enum class ModelKind { Sch2, Ccf, Sqg, Linear };

std::string to_string(ModelKind kind);
ModelKind parse_model_kind(const std::string& text);

/// State (or increment) of one of the models: SCH2 {u, η}, CCF {θ} on T,
/// SQG {θ} on T² with zero mean, Linear {x}. All components share a grid.
class ModelState {
 public:
  static ModelState sch2(GridField u, GridField eta);
  static ModelState ccf(GridField theta);
  /// Throws DomainError unless θ has zero mean.
  static ModelState sqg(GridField theta);
  static ModelState linear(GridField x);
  /// Increment-valued state; no mean constraint is imposed.
  static ModelState increment(ModelKind kind, std::vector<GridField> fields);
  static ModelState zeros_like(const ModelState& other);

  [[nodiscard]] ModelKind kind() const { return kind_; }
  [[nodiscard]] const Grid& grid() const { return fields_.front().grid(); }
  [[nodiscard]] std::span<const GridField> components() const { return fields_; }
  [[nodiscard]] std::span<GridField> components() { return fields_; }

  [[nodiscard]] const GridField& u() const;
  [[nodiscard]] const GridField& eta() const;
  [[nodiscard]] const GridField& theta() const;
  [[nodiscard]] const GridField& x() const;

  ModelState& axpy(double a, const ModelState& other);
  ModelState& operator+=(const ModelState& other) { return axpy(1.0, other); }
  ModelState& operator*=(double a);
  [[nodiscard]] bool all_finite() const;

  friend bool operator==(const ModelState&, const ModelState&) = default;

 private:
  ModelState(ModelKind kind, std::vector<GridField> fields);
  ModelKind kind_;
  std::vector<GridField> fields_;
};

ModelState operator-(const ModelState& a, const ModelState& b);

/// Smallest Sobolev index admitted by the local theory of each model
/// (strict lower bound): SCH2 11/2, CCF 7/2, SQG 4.
double sobolev_threshold(ModelKind kind);

// Norms -------------------------------------------------------------------

/// Norm of the model's solution space at index s: SCH2 H^s × H^{s-1},
/// CCF H^s, SQG homogeneous Λ^s (mean-zero space), Linear sup norm.
double state_norm(const ModelState& X, double s);
double state_inner(const ModelState& X, const ModelState& Y, double s);
/// Cut-off norm ‖X‖_V: sum of lipschitz_norm over components.
double v_norm(const ModelState& X);
/// Blow-up functional: SCH2 ‖(u,η)‖_{W^{1,∞}×W^{1,∞}};
/// CCF ‖θ_x‖_∞ + ‖Hθ_x‖_∞; SQG ‖∇θ‖_∞ + ‖R∇θ‖_∞; Linear max |x|.
double blowup_functional(const ModelState& X);
/// Largest drift transport speed (u, Hθ or R^⊥θ); 0 for Linear.
double transport_speed(const ModelState& X);

// Operator splittings -----------------------------------------------------

/// SCH2 regular drift b(X) = (-∂x D^{-2}(u²/2 + u_x² + η²/2), -η u_x).
ModelState sch2_b(const ModelState& X);
/// SCH2 singular drift g(X) = (-u u_x + ½ D^{-2} Σ L² D² u, -u η_x + ½ Σ L² η).
ModelState sch2_g(const ModelState& X, const NoiseBasis& basis);
/// SCH2 diffusion h^k(X) = (-D^{-2} L_k D² u, -L_k η).
ModelState sch2_h(const ModelState& X, const NoiseBasis& basis, std::size_t k);
/// g_ε(X) = (-J[Ju J u_x] + ½ J³ D^{-2} Σ L² D² J u,
///           -J[Ju J η_x] + ½ J³ Σ L² J η).
ModelState sch2_g_eps(const ModelState& X, const NoiseBasis& basis, double eps);
/// h_ε^k(X) = (-J D^{-2} L_k D² J u, -J L_k J η).
ModelState sch2_h_eps(const ModelState& X, const NoiseBasis& basis, double eps,
                      std::size_t k);

/// CCF drift g(θ) = -(Hθ) θ_x + ½ Σ L² θ (b = 0).
ModelState ccf_g(const ModelState& X, const NoiseBasis& basis);
ModelState ccf_h(const ModelState& X, const NoiseBasis& basis, std::size_t k);
/// g_ε(θ) = -J[(H J θ) ∂x J θ] + ½ J³ Σ L² J θ.
ModelState ccf_g_eps(const ModelState& X, const NoiseBasis& basis, double eps);
/// h_ε^k(θ) = -J L_k J θ.
ModelState ccf_h_eps(const ModelState& X, const NoiseBasis& basis, double eps,
                     std::size_t k);

/// SQG drift -u·∇θ with u = R^⊥θ, plus ½ Σ L² θ when ito is true. The
/// transport term is evaluated as div(uθ), equal to u·∇θ since div u = 0.
ModelState sqg_rhs(const ModelState& X, const NoiseBasis& basis, bool ito = true);
/// SQG diffusion -ξ_k·∇θ (= -L_k θ for divergence-free ξ_k).
ModelState sqg_h(const ModelState& X, const NoiseBasis& basis, std::size_t k);
ModelState sqg_g_eps(const ModelState& X, const NoiseBasis& basis, double eps);
ModelState sqg_h_eps(const ModelState& X, const NoiseBasis& basis, double eps,
                     std::size_t k);

/// Model, noise family and mollifier parameter bundled for the integrators.
class ModelOps {
 public:
  /// Throws ParameterError unless 0 < eps < 1, or if the basis does not suit
  /// the model (grid dimension; divergence-free family for SQG).
  ModelOps(ModelKind kind, NoiseBasis basis, double eps);
  /// Scalar test SDE dX = rate X ∘ dW with a single Wiener process.
  static ModelOps linear(const Grid& grid, double rate);

  [[nodiscard]] ModelKind kind() const { return kind_; }
  [[nodiscard]] const NoiseBasis& basis() const { return basis_; }
  [[nodiscard]] double eps() const { return eps_; }
  [[nodiscard]] double linear_rate() const { return rate_; }
  /// Number of driving Wiener processes.
  [[nodiscard]] std::size_t noise_count() const;

  [[nodiscard]] ModelState b(const ModelState& X) const;
  [[nodiscard]] ModelState g(const ModelState& X) const;
  [[nodiscard]] ModelState h(const ModelState& X, std::size_t k) const;
  [[nodiscard]] ModelState g_eps(const ModelState& X) const;
  [[nodiscard]] ModelState h_eps(const ModelState& X, std::size_t k) const;
  /// Mollified drift of the Stratonovich form: b + g_ε without the
  /// ½ J³ Σ L² correction.
  [[nodiscard]] ModelState strat_drift_eps(const ModelState& X) const;
  /// Σ_k h_ε^k(X) dW_k.
  [[nodiscard]] ModelState noise_eps(const ModelState& X,
                                     std::span<const double> dW) const;

 private:
  ModelOps(ModelKind kind, NoiseBasis basis, double eps, double rate);
  void check_state(const ModelState& X) const;

  ModelKind kind_;
  NoiseBasis basis_;
  double eps_;
  double rate_ = 0.0;
};

}  // namespace salt
