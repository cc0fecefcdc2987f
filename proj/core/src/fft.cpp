#include "salt/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>

#include "salt/errors.hpp"

namespace salt {

namespace {

enum class Direction { Forward, Backward };

// Real-data plans over the half spectrum (last axis n/2 + 1 long).
// FFTW's planner is not thread-safe; executing an existing plan on new
// arrays is. Plans are created once per (dim, n, direction) and kept.
class PlanCache {
 public:
  fftw_plan get(const Grid& grid, Direction dir) {
    const auto key = std::make_tuple(grid.dim(), grid.n(), dir);
    std::lock_guard lock(mutex_);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    const int n = static_cast<int>(grid.n());
    std::vector<double> real(grid.size());
    std::vector<Complex> half(half_size(grid));
    auto* c = reinterpret_cast<fftw_complex*>(half.data());
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    fftw_plan plan;
    if (dir == Direction::Forward) {
      plan = grid.dim() == 1 ? fftw_plan_dft_r2c_1d(n, real.data(), c, flags)
                             : fftw_plan_dft_r2c_2d(n, n, real.data(), c, flags);
    } else {
      plan = grid.dim() == 1 ? fftw_plan_dft_c2r_1d(n, c, real.data(), flags)
                             : fftw_plan_dft_c2r_2d(n, n, c, real.data(), flags);
    }
    plans_.emplace(key, plan);
    return plan;
  }

  static std::size_t half_size(const Grid& grid) {
    const std::size_t h = grid.n() / 2 + 1;
    return grid.dim() == 1 ? h : grid.n() * h;
  }

 private:
  std::mutex mutex_;
  std::map<std::tuple<int, std::size_t, Direction>, fftw_plan> plans_;
};

PlanCache& plan_cache() {
  static PlanCache cache;
  return cache;
}

std::size_t neg(std::size_t j, std::size_t n) { return j == 0 ? 0 : n - j; }

}  // namespace

SpectralField to_spectral(const GridField& f) {
  if (!f.all_finite()) {
    throw NonFiniteError("to_spectral: field contains non-finite samples");
  }
  const auto& grid = f.grid();
  const std::size_t n = grid.n();
  const std::size_t h = n / 2 + 1;
  std::vector<double> input(f.values().begin(), f.values().end());
  std::vector<Complex> half(PlanCache::half_size(grid));
  fftw_execute_dft_r2c(plan_cache().get(grid, Direction::Forward), input.data(),
                       reinterpret_cast<fftw_complex*>(half.data()));
  const double scale = 1.0 / static_cast<double>(grid.size());
  std::vector<Complex> full(grid.size());
  if (grid.dim() == 1) {
    for (std::size_t j = 0; j < h; ++j) full[j] = half[j] * scale;
    for (std::size_t j = h; j < n; ++j) full[j] = std::conj(full[n - j]);
  } else {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < h; ++b) full[a * n + b] = half[a * h + b] * scale;
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = h; b < n; ++b) {
        full[a * n + b] = std::conj(full[neg(a, n) * n + (n - b)]);
      }
    }
  }
  return SpectralField(grid, std::move(full));
}

GridField to_grid(const SpectralField& F) {
  const auto& grid = F.grid();
  const std::size_t n = grid.n();
  const std::size_t h = n / 2 + 1;
  // The Hermitian part (F(k) + conj F(-k)) / 2 synthesizes the real part of
  // the full inverse transform.
  std::vector<Complex> half(PlanCache::half_size(grid));
  if (grid.dim() == 1) {
    for (std::size_t j = 0; j < h; ++j) {
      half[j] = 0.5 * (F[j] + std::conj(F[neg(j, n)]));
    }
  } else {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < h; ++b) {
        half[a * h + b] =
            0.5 * (F[a * n + b] + std::conj(F[neg(a, n) * n + neg(b, n)]));
      }
    }
  }
  std::vector<double> values(grid.size());
  fftw_execute_dft_c2r(plan_cache().get(grid, Direction::Backward),
                       reinterpret_cast<fftw_complex*>(half.data()), values.data());
  return GridField(grid, std::move(values));
}

}  // namespace salt
