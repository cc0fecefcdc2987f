#pragma once

#include <span>
#include <vector>

#include "salt/grid.hpp"

namespace salt {

/// Smooth correlation vector field ξ : T^d -> R^d.
///
/// Holds the spectral components and a cache of their 2/3-truncated grid
/// samples, which is what every pseudospectral product consumes.
class VectorField {
 public:
  explicit VectorField(std::vector<GridField> components);
  static VectorField from_spectral(std::vector<SpectralField> components);

  [[nodiscard]] const Grid& grid() const { return spectral_.front().grid(); }
  [[nodiscard]] int dim() const { return static_cast<int>(spectral_.size()); }
  [[nodiscard]] const std::vector<SpectralField>& spectral() const {
    return spectral_;
  }
  [[nodiscard]] const std::vector<GridField>& dealiased_samples() const {
    return samples_;
  }
  [[nodiscard]] std::vector<GridField> components() const;

  [[nodiscard]] SpectralField divergence() const;
  /// max_k |coeff(div ξ)(k)|.
  [[nodiscard]] double divergence_residual() const;

 private:
  explicit VectorField(std::vector<SpectralField> spectral, int);
  std::vector<SpectralField> spectral_;
  std::vector<GridField> samples_;
};

/// L_ξ f = ξ·∇f + (div ξ) f, evaluated as the divergence div(ξ f) of a
/// dealiased product. In 1D this is ∂x(ξ f); the mean mode of the result is
/// exactly zero.
SpectralField lie_derivative(const VectorField& xi, const SpectralField& f);
GridField lie_derivative(const VectorField& xi, const GridField& f);

/// L²_ξ f = L_ξ(L_ξ f), by composition.
SpectralField lie_second(const VectorField& xi, const SpectralField& f);
GridField lie_second(const VectorField& xi, const GridField& f);

/// (1/2) Σ_k L²_{ξ_k} f over the given (truncated) family.
SpectralField ito_correction(std::span<const VectorField> xis,
                             const SpectralField& f);
GridField ito_correction(std::span<const VectorField> xis, const GridField& f);

/// [D^s, f] g = D^s(f g) - f D^s g with dealiased products.
SpectralField ds_commutator(double s, const SpectralField& f,
                            const SpectralField& g);
GridField ds_commutator(double s, const GridField& f, const GridField& g);

}  // namespace salt
