#pragma once

#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace npeskin {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Real samples of a 2*pi-periodic function on the uniform grid
/// s_j = -pi + 2*pi*j/n, with n a power of two.
class GridFunction {
 public:
  GridFunction() = default;
  explicit GridFunction(std::size_t n);

  template <class F>
  static GridFunction sample(std::size_t n, F&& f) {
    GridFunction g(n);
    for (std::size_t j = 0; j < n; ++j) g.values_[j] = f(g.node(j));
    return g;
  }

  std::size_t size() const { return values_.size(); }
  double node(std::size_t j) const {
    return -std::numbers::pi + two_pi * static_cast<double>(j) / static_cast<double>(values_.size());
  }
  double& operator[](std::size_t j) { return values_[j]; }
  double operator[](std::size_t j) const { return values_[j]; }
  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }
  bool finite() const;

  GridFunction& operator+=(const GridFunction& other);
  GridFunction& operator-=(const GridFunction& other);
  GridFunction& operator*=(double a);

 private:
  std::vector<double> values_;
};

GridFunction operator+(GridFunction a, const GridFunction& b);
GridFunction operator-(GridFunction a, const GridFunction& b);
GridFunction operator*(double a, GridFunction f);

/// Complex Fourier coefficients for the convention f(s) = sum_n c(n) e^{ins},
/// modes n in [-n_points/2, n_points/2). Storage is FFT order (nonnegative
/// modes first); access is by signed mode index.
class SpectralCoeffs {
 public:
  SpectralCoeffs() = default;
  explicit SpectralCoeffs(std::size_t n);

  std::size_t size() const { return c_.size(); }
  long min_mode() const { return -static_cast<long>(c_.size()) / 2; }
  long max_mode() const { return static_cast<long>(c_.size()) / 2 - 1; }
  std::complex<double>& mode(long n) { return c_[index(n)]; }
  const std::complex<double>& mode(long n) const { return c_[index(n)]; }
  std::span<std::complex<double>> raw() { return c_; }
  std::span<const std::complex<double>> raw() const { return c_; }

  /// Largest |c(n) - conj(c(-n))| over paired modes (0 for real signals).
  double hermitian_defect() const;

 private:
  std::size_t index(long n) const {
    const long sz = static_cast<long>(c_.size());
    return static_cast<std::size_t>(((n % sz) + sz) % sz);
  }
  std::vector<std::complex<double>> c_;
};

SpectralCoeffs dft(const GridFunction& f);
GridFunction idft(const SpectralCoeffs& c);

/// Spectral derivative with multiplier (in)^order; the unpaired Nyquist mode is
/// zeroed for odd orders. Warns (does not fail) when the top third of the
/// spectrum carries more than 1e-8 of the energy.
GridFunction derivative(const GridFunction& f, unsigned order);

/// Periodic Hilbert transform, multiplier -i*sgn(n); the mean and the unpaired
/// Nyquist mode map to zero.
GridFunction hilbert(const GridFunction& f);

/// Lambda^s with multiplier |n|^s. s >= 0 maps the mean to zero; s < 0 requires
/// zero-mean input and throws otherwise.
GridFunction lambda_pow(const GridFunction& f, double s);

/// Inhomogeneous Sobolev norm: sqrt(2*pi*(|c(0)|^2 + sum_{n!=0} |n|^{2s}|c(n)|^2)).
double sobolev_norm(const GridFunction& f, double s);
/// Homogeneous seminorm: sqrt(2*pi*sum_{n!=0} |n|^{2s}|c(n)|^2).
double sobolev_seminorm(const GridFunction& f, double s);

/// Zero-padded spectral interpolation onto a grid factor times finer; exact on
/// band-limited input (the Nyquist coefficient is split symmetrically).
GridFunction refine(const GridFunction& f, std::size_t factor);

/// Trapezoid-rule L2 inner product (spectrally accurate on the periodic grid).
double l2_inner(const GridFunction& f, const GridFunction& g);
double l2_norm(const GridFunction& f);
double mean(const GridFunction& f);
/// max_j |f(s_j)| on the native grid (no refinement).
double sup_norm(const GridFunction& f);

/// Fraction of spectral energy held by modes with |n| >= size/3 (band guard).
double top_band_energy_fraction(const GridFunction& f);
/// Number of band-resolution warnings emitted so far in this process.
std::size_t band_warning_count();

}  // namespace npeskin
