#pragma once

#include <array>
#include <vector>

#include "salt/grid.hpp"

namespace salt {

// Fourier multipliers. Every operator here is diagonal in the Fourier basis,
// so any two of them commute exactly. Multipliers that are odd in k
// (first derivatives, Hilbert, Riesz) zero every Nyquist mode, where an odd
// symbol cannot be represented by a real field.

/// D^s = (1 - Δ)^{s/2}: coeff(k) *= (1 + |k|^2)^{s/2}.
SpectralField bessel_multiplier(const SpectralField& F, double s);

/// Λ^s = (-Δ)^{s/2}: coeff(k) *= |k|^s. The mean mode is zeroed for s > 0
/// and kept for s = 0. Throws DomainError for s < 0 on a field with nonzero
/// mean.
SpectralField homogeneous_multiplier(const SpectralField& F, double s);

/// Periodic Hilbert transform, symbol -i sgn(k). 1D only.
SpectralField hilbert_transform(const SpectralField& F);

/// Riesz transform R_j, symbol -i k_j / |k|, j in {0, 1}. 2D only; the mean
/// mode maps to zero.
SpectralField riesz(const SpectralField& F, int axis);

/// u = R^⊥ θ with component symbols (i k2/|k|, -i k1/|k|). 2D only; throws
/// DomainError for nonzero-mean input. With this sign, θ = cos x1 gives
/// u = (0, sin x1) and div u = 0 mode by mode.
std::array<SpectralField, 2> riesz_perp(const SpectralField& theta);

/// Smooth compact bump used by J_ε: 1 on |ξ| <= 1,
/// exp(1 - 1/(1 - (|ξ|-1)^2)) on 1 < |ξ| < 2, and 0 for |ξ| >= 2.
double mollifier_symbol(double xi);

/// J_ε: coeff(k) *= ĵ(ε|k|). Throws ParameterError unless 0 < ε < 1.
SpectralField mollify_J(const SpectralField& F, double eps);

/// J̃_ε = (1 - ε²Δ)^{-1}: coeff(k) *= 1 / (1 + ε²|k|²).
SpectralField mollify_helmholtz(const SpectralField& F, double eps);

/// ∂^order along axis (0 = x1, 1 = x2).
SpectralField derivative(const SpectralField& F, int axis, int order = 1);
std::vector<SpectralField> gradient(const SpectralField& F);
SpectralField divergence(const std::vector<SpectralField>& v);
/// ∇^⊥ψ = (-∂2 ψ, ∂1 ψ). 2D only.
std::vector<SpectralField> perp_gradient(const SpectralField& psi);
SpectralField laplacian(const SpectralField& F);

/// Zeroes every mode with |k_i| above the 2/3-rule cutoff on any axis.
SpectralField dealias(const SpectralField& F);
[[nodiscard]] bool is_dealiased(const SpectralField& F);

/// Pseudospectral product with 2/3-rule truncation of both factors and the
/// result. For truncated inputs the retained modes are alias-free.
SpectralField product(const SpectralField& a, const SpectralField& b);

}  // namespace salt
