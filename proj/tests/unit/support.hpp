#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "salt/fft.hpp"
#include "salt/grid.hpp"

namespace salt::testing {

inline GridField random_field(const Grid& grid, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> z;
  std::vector<double> v(grid.size());
  for (auto& x : v) x = z(rng);
  return GridField(grid, std::move(v));
}

/// Random field with modes |k_i| <= band (default: half the 2/3 cutoff, so
/// products of two such fields are exact).
inline SpectralField random_smooth(const Grid& grid, std::uint64_t seed, int band = 0) {
  SpectralField F = to_spectral(random_field(grid, seed));
  const int cut = band > 0 ? 2 * band : grid.dealias_cutoff();
  for (std::size_t i = 0; i < F.size(); ++i) {
    const auto k = grid.wave_vector(i);
    if (std::abs(k.k1) > cut / 2 || std::abs(k.k2) > cut / 2) F[i] = 0.0;
  }
  return F;
}

inline double max_diff(const GridField& a, const GridField& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double max_diff(const SpectralField& a, const SpectralField& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double max_abs(const SpectralField& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i]));
  return m;
}

/// O(n^2) direct transform, c(k) = n^{-1} Σ f(x_j) e^{-ikx_j}.
inline std::vector<std::complex<double>> direct_dft(const GridField& f) {
  const std::size_t n = f.size();
  std::vector<std::complex<double>> c(n);
  for (std::size_t m = 0; m < n; ++m) {
    const int k = f.grid().wavenumber(m);
    std::complex<double> acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double x = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
      acc += f[j] * std::polar(1.0, -k * x);
    }
    c[m] = acc / static_cast<double>(n);
  }
  return c;
}

}  // namespace salt::testing
