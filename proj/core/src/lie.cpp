#include "salt/lie.hpp"

#include <algorithm>
#include <cmath>

#include "salt/errors.hpp"
#include "salt/fft.hpp"
#include "salt/spectral.hpp"

namespace salt {

VectorField::VectorField(std::vector<GridField> components) {
  if (components.empty()) throw ParameterError("VectorField: no components");
  std::vector<SpectralField> spectral;
  for (const auto& c : components) {
    require_same_grid(components.front().grid(), c.grid(), "VectorField");
    spectral.push_back(to_spectral(c));
  }
  *this = VectorField(std::move(spectral), 0);
}

VectorField VectorField::from_spectral(std::vector<SpectralField> components) {
  if (components.empty()) throw ParameterError("VectorField: no components");
  for (const auto& c : components) {
    require_same_grid(components.front().grid(), c.grid(), "VectorField");
  }
  return VectorField(std::move(components), 0);
}

VectorField::VectorField(std::vector<SpectralField> spectral, int)
    : spectral_(std::move(spectral)) {
  if (static_cast<int>(spectral_.size()) != spectral_.front().grid().dim()) {
    throw GridMismatch("VectorField: component count must equal grid dimension");
  }
  for (const auto& c : spectral_) samples_.push_back(to_grid(dealias(c)));
}

std::vector<GridField> VectorField::components() const {
  std::vector<GridField> out;
  for (const auto& c : spectral_) out.push_back(to_grid(c));
  return out;
}

SpectralField VectorField::divergence() const { return salt::divergence(spectral_); }

double VectorField::divergence_residual() const {
  const auto d = divergence();
  double worst = 0.0;
  for (const auto& c : d.coeffs()) worst = std::max(worst, std::abs(c));
  return worst;
}

SpectralField lie_derivative(const VectorField& xi, const SpectralField& f) {
  require_same_grid(xi.grid(), f.grid(), "lie_derivative");
  const GridField fg = to_grid(dealias(f));
  std::vector<SpectralField> flux;
  flux.reserve(xi.dim());
  for (const auto& comp : xi.dealiased_samples()) {
    flux.push_back(dealias(to_spectral(pointwise(comp, fg))));
  }
  return divergence(flux);
}

GridField lie_derivative(const VectorField& xi, const GridField& f) {
  return to_grid(lie_derivative(xi, to_spectral(f)));
}

SpectralField lie_second(const VectorField& xi, const SpectralField& f) {
  return lie_derivative(xi, lie_derivative(xi, f));
}

GridField lie_second(const VectorField& xi, const GridField& f) {
  return to_grid(lie_second(xi, to_spectral(f)));
}

SpectralField ito_correction(std::span<const VectorField> xis,
                             const SpectralField& f) {
  SpectralField acc(f.grid());
  for (const auto& xi : xis) acc += lie_second(xi, f);
  return 0.5 * std::move(acc);
}

GridField ito_correction(std::span<const VectorField> xis, const GridField& f) {
  return to_grid(ito_correction(xis, to_spectral(f)));
}

SpectralField ds_commutator(double s, const SpectralField& f,
                            const SpectralField& g) {
  return bessel_multiplier(product(f, g), s) -
         product(f, bessel_multiplier(g, s));
}

GridField ds_commutator(double s, const GridField& f, const GridField& g) {
  return to_grid(ds_commutator(s, to_spectral(f), to_spectral(g)));
}

}  // namespace salt
