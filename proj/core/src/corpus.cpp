#include "salt/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "salt/errors.hpp"
#include "salt/fft.hpp"
#include "salt/spectral.hpp"

namespace salt {

std::string to_string(Roughness r) {
  switch (r) {
    case Roughness::Smooth: return "smooth";
    case Roughness::Critical: return "critical";
    case Roughness::Bandlimited: return "bandlimited";
  }
  return "unknown";
}

namespace {

double weight(const TrigSpec& spec, double kmag, int dim) {
  switch (spec.roughness) {
    case Roughness::Smooth: return std::pow(kmag, -(spec.s + 3.0));
    case Roughness::Critical:
      return std::pow(kmag, -(spec.s + 0.6 + 0.5 * (dim - 1)));
    case Roughness::Bandlimited: return 1.0;
  }
  return 0.0;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Standard complex normal keyed by (seed, k1, k2): Box-Muller on two
// splitmix64 uniforms, identical on every platform.
std::complex<double> draw(std::uint64_t seed, int k1, int k2) {
  std::uint64_t state = seed;
  state = splitmix64(state) ^ static_cast<std::uint32_t>(k1);
  state = splitmix64(state) ^ static_cast<std::uint32_t>(k2);
  const double u1 = (static_cast<double>(splitmix64(state) >> 11) + 0.5) * 0x1.0p-53;
  const double u2 = static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phase = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(phase) / std::sqrt(2.0), r * std::sin(phase) / std::sqrt(2.0)};
}

}  // namespace

SpectralField random_trig_spectral(const Grid& grid, const TrigSpec& spec) {
  if (spec.band < 0) throw ParameterError("random_trig: band must be >= 0");
  const int band = std::min<int>(spec.band, static_cast<int>(grid.n() / 4));
  SpectralField F(grid);
  F.set_coeff(0, 0, spec.mean);
  if (grid.dim() == 1) {
    for (int k = 1; k <= band; ++k) {
      F.set_mode(k, 0, spec.amplitude * weight(spec, k, 1) * draw(spec.seed, k, 0));
    }
    return F;
  }
  for (int k1 = 0; k1 <= band; ++k1) {
    for (int k2 = -band; k2 <= band; ++k2) {
      if (k1 == 0 && k2 <= 0) continue;
      const double kmag = std::hypot(k1, k2);
      F.set_mode(k1, k2,
                 spec.amplitude * weight(spec, kmag, 2) * draw(spec.seed, k1, k2));
    }
  }
  return F;
}

GridField random_trig(const Grid& grid, const TrigSpec& spec) {
  return to_grid(random_trig_spectral(grid, spec));
}

std::vector<GridField> random_corpus(const Grid& grid, TrigSpec spec,
                                     std::size_t count) {
  std::vector<GridField> out;
  out.reserve(count);
  const auto base = spec.seed;
  for (std::size_t i = 0; i < count; ++i) {
    spec.seed = base + i;
    out.push_back(random_trig(grid, spec));
  }
  return out;
}

GridField white_noise(const Grid& grid, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  GridField f(grid);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = normal(rng);
  return to_grid(dealias(to_spectral(f)));
}

}  // namespace salt
