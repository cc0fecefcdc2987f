#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "salt/grid.hpp"

namespace salt {

enum class Roughness { Smooth, Critical, Bandlimited };

std::string to_string(Roughness r);

/// Seeded random trigonometric polynomial.
///
/// Each retained mode k (half-plane representative) gets the coefficient
/// amplitude * w(|k|) * (z1 + i z2) / sqrt(2) where z1, z2 are standard
/// normals computed from a counter-based hash of (seed, k). A mode's
/// coefficient therefore does not depend on the grid, and finer grids
/// extend coarser ones.
///
/// Weights w: Smooth |k|^{-(s+3)}, Critical |k|^{-(s+0.6+(d-1)/2)},
/// Bandlimited 1. Modes with max(|k1|,|k2|) > band are dropped, and band is
/// clipped to n / 4 so that products with low-mode fields stay alias-free.
struct TrigSpec {
  Roughness roughness = Roughness::Critical;
  double s = 4.0;
  int band = 1 << 20;
  std::uint64_t seed = 0;
  double amplitude = 1.0;
  /// Mean value; the k = 0 mode is set exactly to this.
  double mean = 0.0;
};

SpectralField random_trig_spectral(const Grid& grid, const TrigSpec& spec);
GridField random_trig(const Grid& grid, const TrigSpec& spec);

/// count fields with seeds spec.seed, spec.seed + 1, ...
std::vector<GridField> random_corpus(const Grid& grid, TrigSpec spec,
                                     std::size_t count);

/// Grid values of independent standard normals, projected onto the
/// dealiased band (the discrete white-noise surrogate).
GridField white_noise(const Grid& grid, std::uint64_t seed);

}  // namespace salt
