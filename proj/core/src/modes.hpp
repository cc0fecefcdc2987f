#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "salt/grid.hpp"

namespace salt::detail {

// Visits every stored coefficient in flat order as fn(flat, wave_vector).
template <class Fn>
void for_each_mode(const Grid& grid, Fn&& fn) {
  const std::size_t n = grid.n();
  const int half = static_cast<int>(n / 2);
  if (grid.dim() == 1) {
    for (std::size_t j = 0; j < n; ++j) {
      const int k = grid.wavenumber(j);
      fn(j, WaveVector{k, 0, k == half});
    }
    return;
  }
  std::vector<int> ks(n);
  for (std::size_t j = 0; j < n; ++j) ks[j] = grid.wavenumber(j);
  for (std::size_t a = 0; a < n; ++a) {
    const int k1 = ks[a];
    for (std::size_t b = 0; b < n; ++b) {
      fn(a * n + b, WaveVector{k1, ks[b], k1 == half || ks[b] == half});
    }
  }
}

// f(|k|^2) memoized over the integer values |k|^2 takes on the grid. In 1D
// the table is keyed by |k| so it stays O(n).
template <class F>
class RadialTable {
 public:
  RadialTable(const Grid& grid, F f)
      : f_(std::move(f)),
        radial_(grid.dim() == 1),
        values_(radial_ ? grid.n() / 2 + 1 : 2 * (grid.n() / 2) * (grid.n() / 2) + 1,
                std::numeric_limits<double>::quiet_NaN()) {}

  double operator()(const WaveVector& w) {
    const auto k2 = static_cast<std::size_t>(w.k1 * w.k1 + w.k2 * w.k2);
    double& v = values_[radial_ ? static_cast<std::size_t>(std::abs(w.k1)) : k2];
    if (std::isnan(v)) v = f_(static_cast<double>(k2));
    return v;
  }

 private:
  F f_;
  bool radial_;
  std::vector<double> values_;
};

}  // namespace salt::detail
