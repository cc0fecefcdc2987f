#include <gtest/gtest.h>

#include <cmath>

#include "salt/corpus.hpp"
#include "salt/fft.hpp"
#include "salt/norms.hpp"
#include "salt/spectral.hpp"
#include "support.hpp"

namespace salt {
namespace {

using testing::random_field;

TEST(Sobolev, ZeroAndCosineRatio) {
  const Grid g(1, 64);
  EXPECT_EQ(sobolev_norm(SpectralField(g), 3.0), 0.0);
  const auto c = to_spectral(GridField::from_function(g, [](double x) { return std::cos(x); }));
  EXPECT_NEAR(sobolev_norm(c, 1.0) / sobolev_norm(c, 0.0), std::sqrt(2.0), 1e-15);
}

TEST(Sobolev, MatchesBruteForceModeSum) {
  for (int dim : {1, 2}) {
    const Grid g(dim, dim == 1 ? 256 : 32);
    const auto f = random_field(g, 17);
    const auto F = to_spectral(f);
    for (double s : {-1.0, 0.0, 2.5}) {
      double acc = 0.0;
      for (std::size_t i = 0; i < F.size(); ++i) {
        const auto k = g.wave_vector(i);
        acc += std::pow(1.0 + k.norm2(), s) * std::norm(F[i]);
      }
      EXPECT_NEAR(sobolev_norm(F, s), std::sqrt(acc), 1e-12 * std::sqrt(acc));
    }
  }
}

TEST(Sobolev, DirectDftOracle1D) {
  const Grid g(1, 128);
  const auto f = random_field(g, 23);
  const auto c = testing::direct_dft(f);
  double acc = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double k = g.wavenumber(i);
    acc += std::pow(1.0 + k * k, 3.0) * std::norm(c[i]);
  }
  EXPECT_NEAR(sobolev_norm(to_spectral(f), 3.0), std::sqrt(acc), 1e-12 * std::sqrt(acc));
}

TEST(Sobolev, MonotoneInIndex) {
  const Grid g(1, 64);
  const auto F = to_spectral(random_field(g, 2));
  double prev = 0.0;
  for (double s = -2.0; s <= 4.0; s += 0.5) {
    const double v = sobolev_norm(F, s);
    EXPECT_GE(v, prev);
    prev = v;
  }
}

TEST(Parseval, GridAndSpectralInnerProductsAgree) {
  for (int dim : {1, 2}) {
    const Grid g(dim, dim == 1 ? 256 : 64);
    const auto f = random_field(g, 1);
    const auto h = random_field(g, 2);
    const double grid_side = l2_inner(f, h);
    const double spec_side = sobolev_inner(to_spectral(f), to_spectral(h), 0.0);
    EXPECT_NEAR(grid_side, spec_side, 1e-12 * std::abs(grid_side) + 1e-15);
    EXPECT_NEAR(l2_norm(f), sobolev_norm(to_spectral(f), 0.0), 1e-12 * l2_norm(f));
  }
}

TEST(Homogeneous, ExcludesMean) {
  const Grid g(1, 32);
  const auto F = to_spectral(GridField::from_function(g, [](double x) { return 3.0 + 2.0 * std::cos(2 * x); }));
  EXPECT_NEAR(homogeneous_norm(F, 1.0), 2.0 * std::sqrt(0.5) * 2.0, 1e-14);
  EXPECT_NEAR(homogeneous_norm(F, 0.0), std::sqrt(9.0 + 2.0), 1e-14);
}

TEST(Lipschitz, CosineAndConstants) {
  for (std::size_t n : {64, 256}) {
    const Grid g(1, n);
    EXPECT_NEAR(lipschitz_norm(GridField::from_function(g, [](double x) { return std::cos(x); })), 2.0, 1e-10);
    EXPECT_NEAR(lipschitz_norm(GridField::constant(g, -1.5)), 1.5, 1e-15);
  }
}

// Evaluates the same trigonometric polynomial on a grid 64 times finer by
// zero-padding its spectrum.
double dense_lipschitz(const SpectralField& F, std::size_t factor) {
  const Grid& g = F.grid();
  const Grid fine(1, g.n() * factor);
  SpectralField P(fine);
  for (std::size_t i = 0; i < F.size(); ++i) {
    const int k = g.wavenumber(i);
    if (std::abs(k) < static_cast<int>(g.n() / 2)) P.set_coeff(k, 0, F[i]);
  }
  return linf_norm(to_grid(P)) + linf_norm(to_grid(derivative(P, 0)));
}

TEST(Lipschitz, DenseSamplingOracle) {
  const Grid g(1, 1024);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    TrigSpec spec{Roughness::Bandlimited, 0.0, 4, seed, 1.0, 0.3};
    const auto F = random_trig_spectral(g, spec);
    const double dense = dense_lipschitz(F, 64);
    EXPECT_NEAR(lipschitz_norm(to_grid(F)), dense, 1e-3 * dense);
  }
}

}  // namespace
}  // namespace salt
