#pragma once

#include "salt/grid.hpp"

namespace salt {

// Inner products and norms use the normalized torus measure, so that
// (f, g)_{L²} is the spatial mean of f g and Parseval reads
// (f, g)_{L²} = Σ_k coeff_f(k) conj(coeff_g(k)).

/// ‖f‖_{H^s} with ‖f‖² = Σ_k (1 + |k|²)^s |coeff(k)|².
double sobolev_norm(const SpectralField& F, double s);
/// (f, g)_{H^s} = Σ_k (1 + |k|²)^s Re(coeff_f(k) conj(coeff_g(k))).
double sobolev_inner(const SpectralField& F, const SpectralField& G, double s);
/// ‖Λ^s f‖_{L²}; the mean mode is excluded for s != 0.
double homogeneous_norm(const SpectralField& F, double s);
double homogeneous_inner(const SpectralField& F, const SpectralField& G,
                         double s);

/// Grid quadrature of the normalized L² inner product.
double l2_inner(const GridField& f, const GridField& g);
double l2_norm(const GridField& f);
double linf_norm(const GridField& f);

/// Discrete W^{1,∞} surrogate: max_j |f(x_j)| + max_j |∇f(x_j)| with a
/// spectral gradient (Euclidean magnitude in 2D).
double lipschitz_norm(const GridField& f);
/// max_j |∇f(x_j)| only.
double gradient_sup(const GridField& f);

}  // namespace salt
