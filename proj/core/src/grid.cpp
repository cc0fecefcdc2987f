#include "salt/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "salt/errors.hpp"

namespace salt {

namespace {

bool is_power_of_two(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

}  // namespace

Grid::Grid(int dim, std::size_t n) : dim_(dim), n_(n), size_(0) {
  if (dim != 1 && dim != 2) {
    throw ParameterError("grid dimension must be 1 or 2, got " +
                         std::to_string(dim));
  }
  if (!is_power_of_two(n)) {
    throw ParameterError("grid size must be a power of two >= 2, got " +
                         std::to_string(n));
  }
  size_ = dim == 1 ? n : n * n;
}

double Grid::spacing() const {
  return 2.0 * std::numbers::pi / static_cast<double>(n_);
}

double Grid::node(std::size_t j) const {
  return 2.0 * std::numbers::pi * static_cast<double>(j) /
         static_cast<double>(n_);
}

int Grid::wavenumber(std::size_t j) const {
  const auto half = n_ / 2;
  return j <= half ? static_cast<int>(j)
                   : static_cast<int>(j) - static_cast<int>(n_);
}

std::size_t Grid::index_of(int k) const {
  const auto n = static_cast<long>(n_);
  long r = k % n;
  if (r < 0) r += n;
  return static_cast<std::size_t>(r);
}

WaveVector Grid::wave_vector(std::size_t flat) const {
  const int half = static_cast<int>(n_ / 2);
  WaveVector w;
  if (dim_ == 1) {
    w.k1 = wavenumber(flat);
    w.nyquist = w.k1 == half;
  } else {
    w.k1 = wavenumber(flat / n_);
    w.k2 = wavenumber(flat % n_);
    w.nyquist = w.k1 == half || w.k2 == half;
  }
  return w;
}

std::size_t Grid::flat_index(int k1, int k2) const {
  if (dim_ == 1) return index_of(k1);
  return index_of(k1) * n_ + index_of(k2);
}

void require_same_grid(const Grid& a, const Grid& b, const char* what) {
  if (!(a == b)) {
    throw GridMismatch(std::string(what) + ": grids differ (n=" +
                       std::to_string(a.n()) + ", dim=" +
                       std::to_string(a.dim()) + " vs n=" +
                       std::to_string(b.n()) + ", dim=" +
                       std::to_string(b.dim()) + ")");
  }
}

// GridField --------------------------------------------------------------

GridField::GridField(Grid grid) : grid_(grid), values_(grid.size(), 0.0) {}

GridField::GridField(Grid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw GridMismatch("GridField: expected " + std::to_string(grid_.size()) +
                       " values, got " + std::to_string(values_.size()));
  }
}

GridField GridField::from_function(const Grid& grid,
                                   const std::function<double(double)>& f) {
  if (grid.dim() != 1) throw UnsupportedError("from_function(x): 1D grid only");
  GridField out(grid);
  for (std::size_t j = 0; j < grid.n(); ++j) out[j] = f(grid.node(j));
  return out;
}

GridField GridField::from_function(
    const Grid& grid, const std::function<double(double, double)>& f) {
  GridField out(grid);
  if (grid.dim() == 1) {
    for (std::size_t j = 0; j < grid.n(); ++j) out[j] = f(grid.node(j), 0.0);
    return out;
  }
  const auto n = grid.n();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out[i * n + j] = f(grid.node(i), grid.node(j));
    }
  }
  return out;
}

GridField GridField::constant(const Grid& grid, double c) {
  return GridField(grid, std::vector<double>(grid.size(), c));
}

double GridField::mean() const {
  double s = 0.0;
  for (double v : values_) s += v;
  return s / static_cast<double>(values_.size());
}

double GridField::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

bool GridField::all_finite() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](double v) { return std::isfinite(v); });
}

GridField& GridField::operator+=(const GridField& other) {
  return axpy(1.0, other);
}

GridField& GridField::operator-=(const GridField& other) {
  return axpy(-1.0, other);
}

GridField& GridField::operator*=(double a) {
  for (double& v : values_) v *= a;
  return *this;
}

GridField& GridField::axpy(double a, const GridField& other) {
  require_same_grid(grid_, other.grid_, "GridField::axpy");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    values_[i] += a * other.values_[i];
  }
  return *this;
}

GridField operator+(GridField a, const GridField& b) { return a += b; }
GridField operator-(GridField a, const GridField& b) { return a -= b; }
GridField operator*(double a, GridField f) { return f *= a; }

GridField pointwise(const GridField& a, const GridField& b) {
  require_same_grid(a.grid(), b.grid(), "pointwise");
  GridField out(a.grid());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

// SpectralField ----------------------------------------------------------

SpectralField::SpectralField(Grid grid)
    : grid_(grid), coeffs_(grid.size(), Complex{0.0, 0.0}) {}

SpectralField::SpectralField(Grid grid, std::vector<Complex> coeffs)
    : grid_(grid), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != grid_.size()) {
    throw GridMismatch("SpectralField: expected " +
                       std::to_string(grid_.size()) + " coefficients, got " +
                       std::to_string(coeffs_.size()));
  }
}

Complex SpectralField::coeff(int k1, int k2) const {
  return coeffs_[grid_.flat_index(k1, k2)];
}

void SpectralField::set_coeff(int k1, int k2, Complex c) {
  coeffs_[grid_.flat_index(k1, k2)] = c;
}

void SpectralField::set_mode(int k1, int k2, Complex c) {
  set_coeff(k1, k2, c);
  set_coeff(-k1, -k2, std::conj(c));
}

double SpectralField::hermitian_defect() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto w = grid_.wave_vector(i);
    const auto j = grid_.flat_index(-w.k1, -w.k2);
    worst = std::max(worst, std::abs(coeffs_[j] - std::conj(coeffs_[i])));
  }
  return worst;
}

SpectralField& SpectralField::operator+=(const SpectralField& other) {
  return axpy(1.0, other);
}

SpectralField& SpectralField::operator-=(const SpectralField& other) {
  return axpy(-1.0, other);
}

SpectralField& SpectralField::operator*=(double a) {
  for (auto& c : coeffs_) c *= a;
  return *this;
}

SpectralField& SpectralField::axpy(double a, const SpectralField& other) {
  require_same_grid(grid_, other.grid_, "SpectralField::axpy");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] += a * other.coeffs_[i];
  }
  return *this;
}

SpectralField operator+(SpectralField a, const SpectralField& b) {
  return a += b;
}
SpectralField operator-(SpectralField a, const SpectralField& b) {
  return a -= b;
}
SpectralField operator*(double a, SpectralField f) { return f *= a; }

}  // namespace salt
