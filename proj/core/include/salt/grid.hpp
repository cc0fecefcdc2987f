#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace salt {

using Complex = std::complex<double>;

/// Integer wave vector on the 1D or 2D torus. For 1D grids k2 is always 0.
struct WaveVector {
  int k1 = 0;
  int k2 = 0;
  /// True when any component sits on the Nyquist frequency n/2.
  bool nyquist = false;

  [[nodiscard]] double norm2() const {
    return static_cast<double>(k1) * k1 + static_cast<double>(k2) * k2;
  }
};

/// Uniform periodic grid on (R / 2πZ)^dim with n nodes per axis.
///
/// Nodes are x_j = 2π j / n. Storage is row-major: in 2D the flat index is
/// i1 * n + i2 where i1 runs along x1.
class Grid {
 public:
  Grid(int dim, std::size_t n);

  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] std::size_t n() const { return n_; }
  [[nodiscard]] std::size_t size() const { return size_; }
  [[nodiscard]] double spacing() const;
  [[nodiscard]] double node(std::size_t j) const;

  /// Wavenumber stored at FFT index j, in {-n/2+1, ..., n/2}.
  [[nodiscard]] int wavenumber(std::size_t j) const;
  /// FFT index holding wavenumber k (k taken modulo n).
  [[nodiscard]] std::size_t index_of(int k) const;
  [[nodiscard]] WaveVector wave_vector(std::size_t flat) const;
  [[nodiscard]] std::size_t flat_index(int k1, int k2 = 0) const;

  /// Largest retained |k| per axis under the 2/3 rule.
  [[nodiscard]] int dealias_cutoff() const { return static_cast<int>(n_ / 3); }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  int dim_;
  std::size_t n_;
  std::size_t size_;
};

/// Real samples of a field on a Grid.
class GridField {
 public:
  explicit GridField(Grid grid);
  GridField(Grid grid, std::vector<double> values);

  /// Samples f at every node; f receives (x1) in 1D and (x1, x2) in 2D.
  static GridField from_function(const Grid& grid,
                                 const std::function<double(double)>& f);
  static GridField from_function(
      const Grid& grid, const std::function<double(double, double)>& f);
  static GridField constant(const Grid& grid, double c);

  [[nodiscard]] const Grid& grid() const { return grid_; }
  [[nodiscard]] std::span<const double> values() const { return values_; }
  [[nodiscard]] std::span<double> values() { return values_; }
  [[nodiscard]] std::size_t size() const { return values_.size(); }
  double& operator[](std::size_t i) { return values_[i]; }
  double operator[](std::size_t i) const { return values_[i]; }

  [[nodiscard]] double mean() const;
  [[nodiscard]] double max_abs() const;
  [[nodiscard]] bool all_finite() const;

  GridField& operator+=(const GridField& other);
  GridField& operator-=(const GridField& other);
  GridField& operator*=(double a);
  /// this += a * other
  GridField& axpy(double a, const GridField& other);

  friend bool operator==(const GridField&, const GridField&) = default;

 private:
  Grid grid_;
  std::vector<double> values_;
};

GridField operator+(GridField a, const GridField& b);
GridField operator-(GridField a, const GridField& b);
GridField operator*(double a, GridField f);
/// Pointwise product (no dealiasing; physical-space helper).
GridField pointwise(const GridField& a, const GridField& b);

/// Complex Fourier coefficients of a real field, stored in FFT order.
///
/// Normalization: the field c e^{i k.x} has coefficient c at k, i.e.
/// coeff(k) = n^{-dim} sum_j f(x_j) e^{-i k.x_j}.
class SpectralField {
 public:
  explicit SpectralField(Grid grid);
  SpectralField(Grid grid, std::vector<Complex> coeffs);

  [[nodiscard]] const Grid& grid() const { return grid_; }
  [[nodiscard]] std::span<const Complex> coeffs() const { return coeffs_; }
  [[nodiscard]] std::span<Complex> coeffs() { return coeffs_; }
  [[nodiscard]] std::size_t size() const { return coeffs_.size(); }
  Complex& operator[](std::size_t i) { return coeffs_[i]; }
  const Complex& operator[](std::size_t i) const { return coeffs_[i]; }

  [[nodiscard]] Complex coeff(int k1, int k2 = 0) const;
  void set_coeff(int k1, int k2, Complex c);
  /// Sets coeff(k) = c and coeff(-k) = conj(c), keeping the field real.
  void set_mode(int k1, int k2, Complex c);

  [[nodiscard]] Complex mean() const { return coeffs_[0]; }
  /// Largest |coeff(-k) - conj(coeff(k))| over all modes.
  [[nodiscard]] double hermitian_defect() const;

  SpectralField& operator+=(const SpectralField& other);
  SpectralField& operator-=(const SpectralField& other);
  SpectralField& operator*=(double a);
  SpectralField& axpy(double a, const SpectralField& other);

 private:
  Grid grid_;
  std::vector<Complex> coeffs_;
};

SpectralField operator+(SpectralField a, const SpectralField& b);
SpectralField operator-(SpectralField a, const SpectralField& b);
SpectralField operator*(double a, SpectralField f);

void require_same_grid(const Grid& a, const Grid& b, const char* what);

}  // namespace salt
