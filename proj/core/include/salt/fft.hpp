#pragma once

#include "salt/grid.hpp"

namespace salt {

/// Forward transform under the library normalization (see SpectralField).
/// Throws NonFiniteError if any sample is NaN or infinite.
SpectralField to_spectral(const GridField& f);

/// Inverse transform; the imaginary residue of a non-Hermitian input is
/// discarded.
GridField to_grid(const SpectralField& F);

}  // namespace salt
