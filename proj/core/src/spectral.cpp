#include "salt/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "salt/errors.hpp"
#include "salt/fft.hpp"
#include "modes.hpp"

namespace salt {

namespace {

template <typename Symbol>
SpectralField apply(const SpectralField& F, Symbol&& symbol) {
  SpectralField out(F.grid());
  detail::for_each_mode(F.grid(), [&](std::size_t i, const WaveVector& w) {
    out[i] = symbol(w) * F[i];
  });
  return out;
}

void require_zero_mean(const SpectralField& F, const char* what) {
  double scale = 1.0;
  for (const auto& c : F.coeffs()) scale = std::max(scale, std::abs(c));
  if (std::abs(F.mean()) > 1e-13 * scale) {
    throw DomainError(std::string(what) +
                      ": operator undefined on fields with nonzero mean");
  }
}

void require_dim(const SpectralField& F, int dim, const char* what) {
  if (F.grid().dim() != dim) {
    throw UnsupportedError(std::string(what) + ": requires a " +
                           std::to_string(dim) + "D grid");
  }
}

void check_eps(double eps, const char* what) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw ParameterError(std::string(what) + ": epsilon must lie in (0,1), got " +
                         std::to_string(eps));
  }
}

int component(const WaveVector& w, int axis) { return axis == 0 ? w.k1 : w.k2; }

}  // namespace

SpectralField bessel_multiplier(const SpectralField& F, double s) {
  detail::RadialTable table(F.grid(),
                           [s](double k2) { return std::pow(1.0 + k2, 0.5 * s); });
  return apply(F, [&table](const WaveVector& w) { return table(w); });
}

SpectralField homogeneous_multiplier(const SpectralField& F, double s) {
  if (s < 0.0) require_zero_mean(F, "homogeneous_multiplier");
  detail::RadialTable table(F.grid(), [s](double k2) {
    if (k2 == 0.0) return s == 0.0 ? 1.0 : 0.0;
    return std::pow(k2, 0.5 * s);
  });
  return apply(F, [&table](const WaveVector& w) { return table(w); });
}

SpectralField hilbert_transform(const SpectralField& F) {
  require_dim(F, 1, "hilbert_transform");
  return apply(F, [](const WaveVector& w) {
    if (w.nyquist || w.k1 == 0) return Complex{0.0, 0.0};
    return Complex{0.0, w.k1 > 0 ? -1.0 : 1.0};
  });
}

SpectralField riesz(const SpectralField& F, int axis) {
  require_dim(F, 2, "riesz");
  return apply(F, [axis](const WaveVector& w) {
    if (w.nyquist || w.norm2() == 0.0) return Complex{0.0, 0.0};
    return Complex{0.0, -component(w, axis) / std::sqrt(w.norm2())};
  });
}

std::array<SpectralField, 2> riesz_perp(const SpectralField& theta) {
  require_dim(theta, 2, "riesz_perp");
  require_zero_mean(theta, "riesz_perp");
  auto u1 = apply(theta, [](const WaveVector& w) {
    if (w.nyquist || w.norm2() == 0.0) return Complex{0.0, 0.0};
    return Complex{0.0, w.k2 / std::sqrt(w.norm2())};
  });
  auto u2 = apply(theta, [](const WaveVector& w) {
    if (w.nyquist || w.norm2() == 0.0) return Complex{0.0, 0.0};
    return Complex{0.0, -w.k1 / std::sqrt(w.norm2())};
  });
  return {std::move(u1), std::move(u2)};
}

double mollifier_symbol(double xi) {
  const double a = std::abs(xi);
  if (a <= 1.0) return 1.0;
  if (a >= 2.0) return 0.0;
  const double t = a - 1.0;
  return std::exp(1.0 - 1.0 / (1.0 - t * t));
}

SpectralField mollify_J(const SpectralField& F, double eps) {
  check_eps(eps, "mollify_J");
  return apply(F, [eps](const WaveVector& w) {
    return mollifier_symbol(eps * std::sqrt(w.norm2()));
  });
}

SpectralField mollify_helmholtz(const SpectralField& F, double eps) {
  check_eps(eps, "mollify_helmholtz");
  return apply(F, [eps](const WaveVector& w) {
    return 1.0 / (1.0 + eps * eps * w.norm2());
  });
}

SpectralField derivative(const SpectralField& F, int axis, int order) {
  if (axis < 0 || axis >= F.grid().dim()) {
    throw ParameterError("derivative: axis out of range");
  }
  if (order < 0) throw ParameterError("derivative: negative order");
  const bool odd = order % 2 == 1;
  return apply(F, [axis, order, odd](const WaveVector& w) {
    if (odd && w.nyquist) return Complex{0.0, 0.0};
    const Complex ik{0.0, static_cast<double>(component(w, axis))};
    Complex sym{1.0, 0.0};
    for (int i = 0; i < order; ++i) sym *= ik;
    return sym;
  });
}

std::vector<SpectralField> gradient(const SpectralField& F) {
  std::vector<SpectralField> out;
  for (int a = 0; a < F.grid().dim(); ++a) out.push_back(derivative(F, a));
  return out;
}

SpectralField divergence(const std::vector<SpectralField>& v) {
  if (v.empty()) throw ParameterError("divergence: empty vector field");
  if (static_cast<int>(v.size()) != v.front().grid().dim()) {
    throw GridMismatch("divergence: component count differs from dimension");
  }
  SpectralField out = derivative(v[0], 0);
  for (std::size_t a = 1; a < v.size(); ++a) {
    require_same_grid(v[0].grid(), v[a].grid(), "divergence");
    out += derivative(v[a], static_cast<int>(a));
  }
  return out;
}

std::vector<SpectralField> perp_gradient(const SpectralField& psi) {
  require_dim(psi, 2, "perp_gradient");
  return {-1.0 * derivative(psi, 1), derivative(psi, 0)};
}

SpectralField laplacian(const SpectralField& F) {
  return apply(F, [](const WaveVector& w) { return -w.norm2(); });
}

SpectralField dealias(const SpectralField& F) {
  const int cut = F.grid().dealias_cutoff();
  return apply(F, [cut](const WaveVector& w) {
    return (std::abs(w.k1) > cut || std::abs(w.k2) > cut) ? 0.0 : 1.0;
  });
}

bool is_dealiased(const SpectralField& F) {
  const int cut = F.grid().dealias_cutoff();
  bool clean = true;
  detail::for_each_mode(F.grid(), [&](std::size_t i, const WaveVector& w) {
    if ((std::abs(w.k1) > cut || std::abs(w.k2) > cut) && F[i] != Complex{}) {
      clean = false;
    }
  });
  return clean;
}

SpectralField product(const SpectralField& a, const SpectralField& b) {
  require_same_grid(a.grid(), b.grid(), "product");
  const GridField ga = to_grid(dealias(a));
  const GridField gb = to_grid(dealias(b));
  return dealias(to_spectral(pointwise(ga, gb)));
}

}  // namespace salt
