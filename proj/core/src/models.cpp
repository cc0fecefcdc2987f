#include "salt/models.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "salt/errors.hpp"
#include "salt/fft.hpp"
#include "salt/lie.hpp"
#include "salt/norms.hpp"
#include "salt/spectral.hpp"

namespace salt {

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::Sch2: return "sch2";
    case ModelKind::Ccf: return "ccf";
    case ModelKind::Sqg: return "sqg";
    case ModelKind::Linear: return "linear";
  }
  return "unknown";
}

ModelKind parse_model_kind(const std::string& text) {
  if (text == "sch2") return ModelKind::Sch2;
  if (text == "ccf") return ModelKind::Ccf;
  if (text == "sqg") return ModelKind::Sqg;
  if (text == "linear") return ModelKind::Linear;
  throw ParameterError("unknown model '" + text +
                       "' (expected sch2, ccf, sqg or linear)");
}

double sobolev_threshold(ModelKind kind) {
  switch (kind) {
    case ModelKind::Sch2: return 5.5;
    case ModelKind::Ccf: return 3.5;
    case ModelKind::Sqg: return 4.0;
    case ModelKind::Linear: return 0.0;
  }
  return 0.0;
}

// ModelState ---------------------------------------------------------------

ModelState::ModelState(ModelKind kind, std::vector<GridField> fields)
    : kind_(kind), fields_(std::move(fields)) {
  const std::size_t expected = kind == ModelKind::Sch2 ? 2 : 1;
  if (fields_.size() != expected) {
    throw ParameterError(to_string(kind) + " state needs " +
                         std::to_string(expected) + " component(s)");
  }
  for (const auto& f : fields_) {
    require_same_grid(fields_.front().grid(), f.grid(), "ModelState");
  }
  const int dim = fields_.front().grid().dim();
  if ((kind == ModelKind::Sch2 || kind == ModelKind::Ccf) && dim != 1) {
    throw UnsupportedError(to_string(kind) + " lives on the 1D torus");
  }
  if (kind == ModelKind::Sqg && dim != 2) {
    throw UnsupportedError("sqg lives on the 2D torus");
  }
}

ModelState ModelState::sch2(GridField u, GridField eta) {
  std::vector<GridField> f;
  f.push_back(std::move(u));
  f.push_back(std::move(eta));
  return ModelState(ModelKind::Sch2, std::move(f));
}

ModelState ModelState::ccf(GridField theta) {
  return ModelState(ModelKind::Ccf, {std::move(theta)});
}

ModelState ModelState::sqg(GridField theta) {
  const double scale = std::max(1.0, theta.max_abs());
  if (std::abs(to_spectral(theta).mean().real()) > 1e-12 * scale) {
    throw DomainError("sqg state must have zero spatial mean");
  }
  return ModelState(ModelKind::Sqg, {std::move(theta)});
}

ModelState ModelState::linear(GridField x) {
  return ModelState(ModelKind::Linear, {std::move(x)});
}

ModelState ModelState::increment(ModelKind kind, std::vector<GridField> fields) {
  return ModelState(kind, std::move(fields));
}

ModelState ModelState::zeros_like(const ModelState& other) {
  std::vector<GridField> f;
  for (const auto& c : other.fields_) f.emplace_back(c.grid());
  return ModelState(other.kind_, std::move(f));
}

namespace {
[[noreturn]] void wrong_variant(const char* accessor, ModelKind kind) {
  throw UnsupportedError(std::string("ModelState::") + accessor +
                         "() is not available on a " + to_string(kind) +
                         " state");
}
}  // namespace

const GridField& ModelState::u() const {
  if (kind_ != ModelKind::Sch2) wrong_variant("u", kind_);
  return fields_[0];
}

const GridField& ModelState::eta() const {
  if (kind_ != ModelKind::Sch2) wrong_variant("eta", kind_);
  return fields_[1];
}

const GridField& ModelState::theta() const {
  if (kind_ != ModelKind::Ccf && kind_ != ModelKind::Sqg) {
    wrong_variant("theta", kind_);
  }
  return fields_[0];
}

const GridField& ModelState::x() const {
  if (kind_ != ModelKind::Linear) wrong_variant("x", kind_);
  return fields_[0];
}

ModelState& ModelState::axpy(double a, const ModelState& other) {
  if (other.kind_ != kind_) {
    throw UnsupportedError("ModelState::axpy: mixing " + to_string(kind_) +
                           " and " + to_string(other.kind_));
  }
  for (std::size_t i = 0; i < fields_.size(); ++i) {
    fields_[i].axpy(a, other.fields_[i]);
  }
  return *this;
}

ModelState& ModelState::operator*=(double a) {
  for (auto& f : fields_) f *= a;
  return *this;
}

bool ModelState::all_finite() const {
  return std::all_of(fields_.begin(), fields_.end(),
                     [](const GridField& f) { return f.all_finite(); });
}

ModelState operator-(const ModelState& a, const ModelState& b) {
  ModelState out = a;
  out.axpy(-1.0, b);
  return out;
}

// Norms ---------------------------------------------------------------------

double state_inner(const ModelState& X, const ModelState& Y, double s) {
  if (X.kind() != Y.kind()) {
    throw UnsupportedError("state_inner: different model variants");
  }
  switch (X.kind()) {
    case ModelKind::Sch2:
      return sobolev_inner(to_spectral(X.u()), to_spectral(Y.u()), s) +
             sobolev_inner(to_spectral(X.eta()), to_spectral(Y.eta()), s - 1.0);
    case ModelKind::Ccf:
      return sobolev_inner(to_spectral(X.theta()), to_spectral(Y.theta()), s);
    case ModelKind::Sqg:
      return homogeneous_inner(to_spectral(X.theta()), to_spectral(Y.theta()), s);
    case ModelKind::Linear:
      return l2_inner(X.x(), Y.x());
  }
  return 0.0;
}

double state_norm(const ModelState& X, double s) {
  if (X.kind() == ModelKind::Linear) return linf_norm(X.x());
  return std::sqrt(std::max(0.0, state_inner(X, X, s)));
}

double v_norm(const ModelState& X) {
  if (X.kind() == ModelKind::Linear) return linf_norm(X.x());
  double acc = 0.0;
  for (const auto& f : X.components()) acc += lipschitz_norm(f);
  return acc;
}

double blowup_functional(const ModelState& X) {
  switch (X.kind()) {
    case ModelKind::Sch2:
      return v_norm(X);
    case ModelKind::Ccf: {
      const auto tx = derivative(to_spectral(X.theta()), 0);
      return linf_norm(to_grid(tx)) + linf_norm(to_grid(hilbert_transform(tx)));
    }
    case ModelKind::Sqg: {
      const auto T = to_spectral(X.theta());
      std::vector<GridField> rgrad;
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          rgrad.push_back(to_grid(riesz(derivative(T, j), i)));
        }
      }
      double worst = 0.0;
      for (std::size_t p = 0; p < X.theta().size(); ++p) {
        double m2 = 0.0;
        for (const auto& r : rgrad) m2 += r[p] * r[p];
        worst = std::max(worst, std::sqrt(m2));
      }
      return gradient_sup(X.theta()) + worst;
    }
    case ModelKind::Linear:
      return linf_norm(X.x());
  }
  return 0.0;
}

double transport_speed(const ModelState& X) {
  switch (X.kind()) {
    case ModelKind::Sch2:
      return linf_norm(X.u());
    case ModelKind::Ccf:
      return linf_norm(to_grid(hilbert_transform(to_spectral(X.theta()))));
    case ModelKind::Sqg: {
      const auto u = riesz_perp(to_spectral(X.theta()));
      const auto u1 = to_grid(u[0]);
      const auto u2 = to_grid(u[1]);
      double worst = 0.0;
      for (std::size_t p = 0; p < u1.size(); ++p) {
        worst = std::max(worst, std::hypot(u1[p], u2[p]));
      }
      return worst;
    }
    case ModelKind::Linear:
      return 0.0;
  }
  return 0.0;
}

// Operator splittings -------------------------------------------------------

namespace {

// J_ε when eps is set, identity otherwise; the unmollified operators are
// the ε-family with every J replaced by the identity.
struct Mollifier {
  std::optional<double> eps;
  SpectralField operator()(const SpectralField& F) const {
    return eps ? mollify_J(F, *eps) : F;
  }
  SpectralField cubed(const SpectralField& F) const {
    return (*this)((*this)((*this)(F)));
  }
};

void require_kind(const ModelState& X, ModelKind kind, const char* what) {
  if (X.kind() != kind) {
    throw UnsupportedError(std::string(what) + ": expected a " + to_string(kind) +
                           " state, got " + to_string(X.kind()));
  }
}

void require_k(const NoiseBasis& basis, std::size_t k, const char* what) {
  if (k >= basis.size()) {
    throw ParameterError(std::string(what) + ": noise index " + std::to_string(k) +
                         " out of range (K = " + std::to_string(basis.size()) + ")");
  }
}

SpectralField sum_lie_second(const NoiseBasis& basis, const SpectralField& f) {
  SpectralField acc(f.grid());
  for (const auto& xi : basis.xis()) acc += lie_second(xi, f);
  return acc;
}

ModelState from_spectral(ModelKind kind, std::initializer_list<SpectralField> parts) {
  std::vector<GridField> f;
  for (const auto& p : parts) f.push_back(to_grid(p));
  return ModelState::increment(kind, std::move(f));
}

ModelState sch2_drift(const ModelState& X, const NoiseBasis& basis,
                      const Mollifier& J, bool ito) {
  const auto U = J(to_spectral(X.u()));
  const auto E = J(to_spectral(X.eta()));
  const auto Ux = derivative(U, 0);
  const auto Ex = derivative(E, 0);
  auto gu = -1.0 * J(product(U, Ux));
  auto ge = -1.0 * J(product(U, Ex));
  if (ito && !basis.empty()) {
    const auto M = bessel_multiplier(U, 2.0);
    gu.axpy(0.5, J.cubed(bessel_multiplier(sum_lie_second(basis, M), -2.0)));
    ge.axpy(0.5, J.cubed(sum_lie_second(basis, E)));
  }
  return from_spectral(ModelKind::Sch2, {gu, ge});
}

ModelState sch2_diffusion(const ModelState& X, const NoiseBasis& basis,
                          const Mollifier& J, std::size_t k) {
  const auto& xi = basis[k];
  const auto U = J(to_spectral(X.u()));
  const auto E = J(to_spectral(X.eta()));
  const auto hu = -1.0 * J(bessel_multiplier(
                             lie_derivative(xi, bessel_multiplier(U, 2.0)), -2.0));
  const auto he = -1.0 * J(lie_derivative(xi, E));
  return from_spectral(ModelKind::Sch2, {hu, he});
}

ModelState ccf_drift(const ModelState& X, const NoiseBasis& basis,
                     const Mollifier& J, bool ito) {
  const auto T = J(to_spectral(X.theta()));
  auto g = -1.0 * J(product(hilbert_transform(T), derivative(T, 0)));
  if (ito && !basis.empty()) g.axpy(0.5, J.cubed(sum_lie_second(basis, T)));
  return from_spectral(ModelKind::Ccf, {g});
}

ModelState scalar_diffusion(ModelKind kind, const ModelState& X,
                            const NoiseBasis& basis, const Mollifier& J,
                            std::size_t k) {
  const auto T = J(to_spectral(X.theta()));
  return from_spectral(kind, {-1.0 * J(lie_derivative(basis[k], T))});
}

ModelState sqg_drift(const ModelState& X, const NoiseBasis& basis,
                     const Mollifier& J, bool ito) {
  const auto T = J(to_spectral(X.theta()));
  const auto u = riesz_perp(T);
  auto g = -1.0 * J(divergence({product(u[0], T), product(u[1], T)}));
  if (ito && !basis.empty()) g.axpy(0.5, J.cubed(sum_lie_second(basis, T)));
  return from_spectral(ModelKind::Sqg, {g});
}

}  // namespace

ModelState sch2_b(const ModelState& X) {
  require_kind(X, ModelKind::Sch2, "sch2_b");
  const auto U = to_spectral(X.u());
  const auto E = to_spectral(X.eta());
  const auto Ux = derivative(U, 0);
  SpectralField inner = 0.5 * product(U, U);
  inner += product(Ux, Ux);
  inner.axpy(0.5, product(E, E));
  const auto bu = -1.0 * derivative(bessel_multiplier(inner, -2.0), 0);
  const auto be = -1.0 * product(E, Ux);
  return from_spectral(ModelKind::Sch2, {bu, be});
}

ModelState sch2_g(const ModelState& X, const NoiseBasis& basis) {
  require_kind(X, ModelKind::Sch2, "sch2_g");
  return sch2_drift(X, basis, Mollifier{}, true);
}

ModelState sch2_h(const ModelState& X, const NoiseBasis& basis, std::size_t k) {
  require_kind(X, ModelKind::Sch2, "sch2_h");
  require_k(basis, k, "sch2_h");
  return sch2_diffusion(X, basis, Mollifier{}, k);
}

ModelState sch2_g_eps(const ModelState& X, const NoiseBasis& basis, double eps) {
  require_kind(X, ModelKind::Sch2, "sch2_g_eps");
  return sch2_drift(X, basis, Mollifier{eps}, true);
}

ModelState sch2_h_eps(const ModelState& X, const NoiseBasis& basis, double eps,
                      std::size_t k) {
  require_kind(X, ModelKind::Sch2, "sch2_h_eps");
  require_k(basis, k, "sch2_h_eps");
  return sch2_diffusion(X, basis, Mollifier{eps}, k);
}

ModelState ccf_g(const ModelState& X, const NoiseBasis& basis) {
  require_kind(X, ModelKind::Ccf, "ccf_g");
  return ccf_drift(X, basis, Mollifier{}, true);
}

ModelState ccf_h(const ModelState& X, const NoiseBasis& basis, std::size_t k) {
  require_kind(X, ModelKind::Ccf, "ccf_h");
  require_k(basis, k, "ccf_h");
  return scalar_diffusion(ModelKind::Ccf, X, basis, Mollifier{}, k);
}

ModelState ccf_g_eps(const ModelState& X, const NoiseBasis& basis, double eps) {
  require_kind(X, ModelKind::Ccf, "ccf_g_eps");
  return ccf_drift(X, basis, Mollifier{eps}, true);
}

ModelState ccf_h_eps(const ModelState& X, const NoiseBasis& basis, double eps,
                     std::size_t k) {
  require_kind(X, ModelKind::Ccf, "ccf_h_eps");
  require_k(basis, k, "ccf_h_eps");
  return scalar_diffusion(ModelKind::Ccf, X, basis, Mollifier{eps}, k);
}

ModelState sqg_rhs(const ModelState& X, const NoiseBasis& basis, bool ito) {
  require_kind(X, ModelKind::Sqg, "sqg_rhs");
  return sqg_drift(X, basis, Mollifier{}, ito);
}

ModelState sqg_h(const ModelState& X, const NoiseBasis& basis, std::size_t k) {
  require_kind(X, ModelKind::Sqg, "sqg_h");
  require_k(basis, k, "sqg_h");
  return scalar_diffusion(ModelKind::Sqg, X, basis, Mollifier{}, k);
}

ModelState sqg_g_eps(const ModelState& X, const NoiseBasis& basis, double eps) {
  require_kind(X, ModelKind::Sqg, "sqg_g_eps");
  return sqg_drift(X, basis, Mollifier{eps}, true);
}

ModelState sqg_h_eps(const ModelState& X, const NoiseBasis& basis, double eps,
                     std::size_t k) {
  require_kind(X, ModelKind::Sqg, "sqg_h_eps");
  require_k(basis, k, "sqg_h_eps");
  return scalar_diffusion(ModelKind::Sqg, X, basis, Mollifier{eps}, k);
}

// ModelOps ------------------------------------------------------------------

ModelOps::ModelOps(ModelKind kind, NoiseBasis basis, double eps, double rate)
    : kind_(kind), basis_(std::move(basis)), eps_(eps), rate_(rate) {}

ModelOps::ModelOps(ModelKind kind, NoiseBasis basis, double eps)
    : ModelOps(kind, std::move(basis), eps, 0.0) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw ParameterError("ModelOps: epsilon must lie in (0,1)");
  }
  if (kind == ModelKind::Linear) {
    throw ParameterError("ModelOps: use ModelOps::linear for the test SDE");
  }
  const int dim = basis_.grid().dim();
  if ((kind == ModelKind::Sqg) != (dim == 2)) {
    throw UnsupportedError("ModelOps: noise basis dimension does not match " +
                           to_string(kind));
  }
  if (kind == ModelKind::Sqg && basis_.max_divergence() > 1e-12) {
    throw DomainError("ModelOps: sqg requires a divergence-free noise basis");
  }
}

ModelOps ModelOps::linear(const Grid& grid, double rate) {
  return ModelOps(ModelKind::Linear, NoiseBasis(grid, {}, DecaySpec{}, 0.0), 0.5,
                  rate);
}

std::size_t ModelOps::noise_count() const {
  return kind_ == ModelKind::Linear ? 1 : basis_.size();
}

void ModelOps::check_state(const ModelState& X) const {
  if (X.kind() != kind_) {
    throw UnsupportedError("ModelOps(" + to_string(kind_) + ") given a " +
                           to_string(X.kind()) + " state");
  }
  if (kind_ != ModelKind::Linear) {
    require_same_grid(basis_.grid(), X.grid(), "ModelOps");
  }
}

ModelState ModelOps::b(const ModelState& X) const {
  check_state(X);
  if (kind_ == ModelKind::Sch2) return sch2_b(X);
  return ModelState::zeros_like(X);
}

ModelState ModelOps::g(const ModelState& X) const {
  check_state(X);
  switch (kind_) {
    case ModelKind::Sch2: return sch2_g(X, basis_);
    case ModelKind::Ccf: return ccf_g(X, basis_);
    case ModelKind::Sqg: return sqg_rhs(X, basis_, true);
    case ModelKind::Linear: {
      ModelState out = X;
      out *= 0.5 * rate_ * rate_;
      return out;
    }
  }
  return ModelState::zeros_like(X);
}

ModelState ModelOps::h(const ModelState& X, std::size_t k) const {
  check_state(X);
  switch (kind_) {
    case ModelKind::Sch2: return sch2_h(X, basis_, k);
    case ModelKind::Ccf: return ccf_h(X, basis_, k);
    case ModelKind::Sqg: return sqg_h(X, basis_, k);
    case ModelKind::Linear: {
      if (k != 0) throw ParameterError("linear model has a single noise");
      ModelState out = X;
      out *= rate_;
      return out;
    }
  }
  return ModelState::zeros_like(X);
}

ModelState ModelOps::g_eps(const ModelState& X) const {
  check_state(X);
  switch (kind_) {
    case ModelKind::Sch2: return sch2_g_eps(X, basis_, eps_);
    case ModelKind::Ccf: return ccf_g_eps(X, basis_, eps_);
    case ModelKind::Sqg: return sqg_g_eps(X, basis_, eps_);
    case ModelKind::Linear: return g(X);
  }
  return ModelState::zeros_like(X);
}

ModelState ModelOps::h_eps(const ModelState& X, std::size_t k) const {
  check_state(X);
  switch (kind_) {
    case ModelKind::Sch2: return sch2_h_eps(X, basis_, eps_, k);
    case ModelKind::Ccf: return ccf_h_eps(X, basis_, eps_, k);
    case ModelKind::Sqg: return sqg_h_eps(X, basis_, eps_, k);
    case ModelKind::Linear: return h(X, k);
  }
  return ModelState::zeros_like(X);
}

ModelState ModelOps::strat_drift_eps(const ModelState& X) const {
  check_state(X);
  const Mollifier J{eps_};
  switch (kind_) {
    case ModelKind::Sch2: {
      ModelState out = sch2_b(X);
      out += sch2_drift(X, basis_, J, false);
      return out;
    }
    case ModelKind::Ccf: return ccf_drift(X, basis_, J, false);
    case ModelKind::Sqg: return sqg_drift(X, basis_, J, false);
    case ModelKind::Linear: return ModelState::zeros_like(X);
  }
  return ModelState::zeros_like(X);
}

ModelState ModelOps::noise_eps(const ModelState& X,
                               std::span<const double> dW) const {
  if (dW.size() != noise_count()) {
    throw ParameterError("ModelOps::noise_eps: expected " +
                         std::to_string(noise_count()) + " increments, got " +
                         std::to_string(dW.size()));
  }
  ModelState acc = ModelState::zeros_like(X);
  for (std::size_t k = 0; k < dW.size(); ++k) acc.axpy(dW[k], h_eps(X, k));
  return acc;
}

}  // namespace salt
