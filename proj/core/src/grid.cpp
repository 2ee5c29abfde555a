#include "npeskin/grid.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "npeskin/fft.hpp"

namespace npeskin {

namespace {

std::atomic<std::size_t> g_band_warnings{0};

void warn_band_resolution(double fraction) {
  const std::size_t prior = g_band_warnings.fetch_add(1);
  if (prior == 0) {
    std::fprintf(stderr, "npeskin: warning: top-band spectral energy fraction %.3e exceeds 1e-8; "
                         "the grid may under-resolve this field\n", fraction);
  }
}

}  // namespace

GridFunction::GridFunction(std::size_t n) : values_(n, 0.0) {
  if (!is_power_of_two(n)) throw std::invalid_argument("GridFunction: n_points must be a power of two");
}

bool GridFunction::finite() const {
  for (double v : values_)
    if (!std::isfinite(v)) return false;
  return true;
}

GridFunction& GridFunction::operator+=(const GridFunction& other) {
  if (other.size() != size()) throw std::invalid_argument("GridFunction: size mismatch");
  for (std::size_t j = 0; j < values_.size(); ++j) values_[j] += other.values_[j];
  return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& other) {
  if (other.size() != size()) throw std::invalid_argument("GridFunction: size mismatch");
  for (std::size_t j = 0; j < values_.size(); ++j) values_[j] -= other.values_[j];
  return *this;
}

GridFunction& GridFunction::operator*=(double a) {
  for (double& v : values_) v *= a;
  return *this;
}

GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
GridFunction operator-(GridFunction a, const GridFunction& b) { return a -= b; }
GridFunction operator*(double a, GridFunction f) { return f *= a; }

SpectralCoeffs::SpectralCoeffs(std::size_t n) : c_(n) {
  if (!is_power_of_two(n)) throw std::invalid_argument("SpectralCoeffs: n_points must be a power of two");
}

double SpectralCoeffs::hermitian_defect() const {
  double worst = 0.0;
  const long half = static_cast<long>(c_.size()) / 2;
  for (long n = 1; n < half; ++n)
    worst = std::max(worst, std::abs(mode(n) - std::conj(mode(-n))));
  worst = std::max(worst, std::abs(mode(0).imag()));
  if (!c_.empty()) worst = std::max(worst, std::abs(mode(-half).imag()));
  return worst;
}

SpectralCoeffs dft(const GridFunction& f) {
  const std::size_t n = f.size();
  SpectralCoeffs out(n);
  auto buf = out.raw();
  for (std::size_t j = 0; j < n; ++j) buf[j] = f[j];
  fft_radix2(buf, -1);
  // grid offset s_j = -pi + 2*pi*j/n contributes the phase (-1)^k per mode
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) buf[k] *= (k % 2 == 0 ? inv_n : -inv_n);
  return out;
}

GridFunction idft(const SpectralCoeffs& c) {
  const std::size_t n = c.size();
  std::vector<std::complex<double>> buf(c.raw().begin(), c.raw().end());
  for (std::size_t k = 0; k < n; ++k)
    if (k % 2 == 1) buf[k] = -buf[k];
  fft_radix2(buf, +1);
  GridFunction out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = buf[j].real();
  return out;
}

double top_band_energy_fraction(const GridFunction& f) {
  const SpectralCoeffs c = dft(f);
  const long half = static_cast<long>(f.size()) / 2;
  const long cutoff = static_cast<long>(f.size()) / 3;
  double total = 0.0, top = 0.0;
  for (long n = -half; n < half; ++n) {
    const double e = std::norm(c.mode(n));
    total += e;
    if (std::labs(n) >= cutoff) top += e;
  }
  return total > 0.0 ? top / total : 0.0;
}

std::size_t band_warning_count() { return g_band_warnings.load(); }

GridFunction derivative(const GridFunction& f, unsigned order) {
  SpectralCoeffs c = dft(f);
  const long half = static_cast<long>(f.size()) / 2;
  {
    // band guard, computed from the coefficients already at hand
    double total = 0.0, top = 0.0;
    for (long n = -half; n < half; ++n) {
      const double e = std::norm(c.mode(n));
      total += e;
      if (std::labs(n) >= static_cast<long>(f.size()) / 3) top += e;
    }
    if (total > 0.0 && top / total > 1e-8) warn_band_resolution(top / total);
  }
  for (long n = -half; n < half; ++n) {
    std::complex<double> m = std::pow(std::complex<double>(0.0, static_cast<double>(n)), static_cast<double>(order));
    c.mode(n) *= m;
  }
  if (order % 2 == 1) c.mode(-half) = 0.0;
  return idft(c);
}

GridFunction hilbert(const GridFunction& f) {
  SpectralCoeffs c = dft(f);
  const long half = static_cast<long>(f.size()) / 2;
  c.mode(0) = 0.0;
  c.mode(-half) = 0.0;
  for (long n = 1; n < half; ++n) {
    c.mode(n) *= std::complex<double>(0.0, -1.0);
    c.mode(-n) *= std::complex<double>(0.0, 1.0);
  }
  return idft(c);
}

GridFunction lambda_pow(const GridFunction& f, double s) {
  SpectralCoeffs c = dft(f);
  const long half = static_cast<long>(f.size()) / 2;
  if (s < 0.0) {
    const double scale = l2_norm(f);
    if (std::abs(c.mode(0).real()) > 1e-13 * std::max(1.0, scale))
      throw std::invalid_argument("lambda_pow: negative power requires zero-mean input");
  }
  c.mode(0) = 0.0;
  for (long n = -half; n < half; ++n) {
    if (n == 0) continue;
    c.mode(n) *= std::pow(std::abs(static_cast<double>(n)), s);
  }
  return idft(c);
}

namespace {
double sobolev_sum(const GridFunction& f, double s, bool include_mean) {
  const SpectralCoeffs c = dft(f);
  const long half = static_cast<long>(f.size()) / 2;
  double acc = include_mean ? std::norm(c.mode(0)) : 0.0;
  for (long n = -half; n < half; ++n) {
    if (n == 0) continue;
    acc += std::pow(std::abs(static_cast<double>(n)), 2.0 * s) * std::norm(c.mode(n));
  }
  return std::sqrt(two_pi * acc);
}
}  // namespace

double sobolev_norm(const GridFunction& f, double s) { return sobolev_sum(f, s, true); }
double sobolev_seminorm(const GridFunction& f, double s) { return sobolev_sum(f, s, false); }

GridFunction refine(const GridFunction& f, std::size_t factor) {
  if (factor == 0) throw std::invalid_argument("refine: factor must be >= 1");
  if (factor == 1) return f;
  if (!is_power_of_two(factor)) throw std::invalid_argument("refine: factor must be a power of two");
  const std::size_t n = f.size();
  const long half = static_cast<long>(n) / 2;
  const SpectralCoeffs c = dft(f);
  SpectralCoeffs big(n * factor);
  for (long m = -half + 1; m < half; ++m) big.mode(m) = c.mode(m);
  big.mode(-half) = 0.5 * c.mode(-half);
  big.mode(half) = 0.5 * std::conj(c.mode(-half));
  return idft(big);
}

double l2_inner(const GridFunction& f, const GridFunction& g) {
  if (f.size() != g.size()) throw std::invalid_argument("l2_inner: size mismatch");
  double acc = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) acc += f[j] * g[j];
  return acc * two_pi / static_cast<double>(f.size());
}

double l2_norm(const GridFunction& f) { return std::sqrt(l2_inner(f, f)); }

double mean(const GridFunction& f) {
  double acc = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) acc += f[j];
  return acc / static_cast<double>(f.size());
}

double sup_norm(const GridFunction& f) {
  double m = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) m = std::max(m, std::abs(f[j]));
  return m;
}

}  // namespace npeskin
