#include "salt/norms.hpp"

#include <algorithm>
#include <cmath>

#include "salt/fft.hpp"
#include "salt/spectral.hpp"
#include "modes.hpp"

namespace salt {

double sobolev_inner(const SpectralField& F, const SpectralField& G, double s) {
  require_same_grid(F.grid(), G.grid(), "sobolev_inner");
  detail::RadialTable weight(F.grid(), [s](double k2) { return std::pow(1.0 + k2, s); });
  double acc = 0.0;
  detail::for_each_mode(F.grid(), [&](std::size_t i, const WaveVector& w) {
    acc += weight(w) * (F[i] * std::conj(G[i])).real();
  });
  return acc;
}

double sobolev_norm(const SpectralField& F, double s) {
  return std::sqrt(std::max(0.0, sobolev_inner(F, F, s)));
}

double homogeneous_inner(const SpectralField& F, const SpectralField& G,
                         double s) {
  require_same_grid(F.grid(), G.grid(), "homogeneous_inner");
  detail::RadialTable weight(F.grid(), [s](double k2) {
    if (k2 > 0.0) return std::pow(k2, s);
    return s == 0.0 ? 1.0 : 0.0;
  });
  double acc = 0.0;
  detail::for_each_mode(F.grid(), [&](std::size_t i, const WaveVector& w) {
    acc += weight(w) * (F[i] * std::conj(G[i])).real();
  });
  return acc;
}

double homogeneous_norm(const SpectralField& F, double s) {
  return std::sqrt(std::max(0.0, homogeneous_inner(F, F, s)));
}

double l2_inner(const GridField& f, const GridField& g) {
  require_same_grid(f.grid(), g.grid(), "l2_inner");
  double acc = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) acc += f[i] * g[i];
  return acc / static_cast<double>(f.size());
}

double l2_norm(const GridField& f) { return std::sqrt(l2_inner(f, f)); }

double linf_norm(const GridField& f) { return f.max_abs(); }

double gradient_sup(const GridField& f) {
  const auto F = to_spectral(f);
  std::vector<GridField> grad;
  for (const auto& g : gradient(F)) grad.push_back(to_grid(g));
  double worst = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    double m2 = 0.0;
    for (const auto& g : grad) m2 += g[i] * g[i];
    worst = std::max(worst, std::sqrt(m2));
  }
  return worst;
}

double lipschitz_norm(const GridField& f) {
  return linf_norm(f) + gradient_sup(f);
}

}  // namespace salt
