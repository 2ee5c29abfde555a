#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "npeskin/grid.hpp"
#include "npeskin/random_fields.hpp"
#include "test_util.hpp"

using namespace npeskin;
using npeskin::testing::sup_diff;

namespace {

GridFunction random_raw(std::uint64_t seed, std::size_t n) {
  std::mt19937_64 rng(seed);
  GridFunction f(n);
  for (std::size_t j = 0; j < n; ++j)
    f[j] = static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
  return f;
}

// direct O(n^2) summation of the transform pair, the reference for the FFT path
SpectralCoeffs dft_direct(const GridFunction& f) {
  const auto n = static_cast<long>(f.size());
  SpectralCoeffs c(f.size());
  for (long m = -n / 2; m < n / 2; ++m) {
    std::complex<double> acc = 0.0;
    for (long j = 0; j < n; ++j) {
      const double s = f.node(static_cast<std::size_t>(j));
      acc += f[static_cast<std::size_t>(j)] *
             std::exp(std::complex<double>(0.0, -static_cast<double>(m) * s));
    }
    c.mode(m) = acc / static_cast<double>(n);
  }
  return c;
}

}  // namespace

TEST_CASE("transform of a constant is concentrated in the mean mode") {
  const auto f = GridFunction::sample(32, [](double) { return 1.0; });
  const SpectralCoeffs c = dft(f);
  CHECK(std::abs(c.mode(0) - 1.0) < 1e-14);
  for (long m = c.min_mode(); m <= c.max_mode(); ++m)
    if (m != 0) CHECK(std::abs(c.mode(m)) < 1e-14);
}

TEST_CASE("transform of cos(3s) puts 1/2 in modes +-3") {
  const auto f = GridFunction::sample(64, [](double s) { return std::cos(3.0 * s); });
  const SpectralCoeffs c = dft(f);
  CHECK(std::abs(c.mode(3) - 0.5) < 1e-14);
  CHECK(std::abs(c.mode(-3) - 0.5) < 1e-14);
  for (long m = c.min_mode(); m <= c.max_mode(); ++m)
    if (m != 3 && m != -3) CHECK(std::abs(c.mode(m)) < 1e-13);
}

TEST_CASE("fft path agrees with direct summation and round-trips") {
  const GridFunction f = random_raw(11, 16);
  const SpectralCoeffs fast = dft(f);
  const SpectralCoeffs slow = dft_direct(f);
  for (long m = fast.min_mode(); m <= fast.max_mode(); ++m)
    CHECK(std::abs(fast.mode(m) - slow.mode(m)) < 1e-14);
  CHECK(fast.hermitian_defect() < 1e-14);
  CHECK(sup_diff(idft(fast), f) < 1e-13);

  const GridFunction g = random_raw(7, 256);
  CHECK(sup_diff(idft(dft(g)), g) < 1e-13);
}

TEST_CASE("grid sizes must be powers of two") {
  CHECK_THROWS_AS(GridFunction(24), std::invalid_argument);
  CHECK_THROWS_AS(GridFunction(0), std::invalid_argument);
  CHECK_NOTHROW(GridFunction(64));
}

TEST_CASE("spectral derivative on single modes and constants") {
  for (int n : {1, 4, 9}) {
    const auto f = GridFunction::sample(64, [n](double s) { return std::cos(n * s); });
    const GridFunction d = derivative(f, 1);
    CHECK(sup_diff(d, [n](double s) { return -n * std::sin(n * s); }) < 1e-12);
  }
  const auto c = GridFunction::sample(32, [](double) { return 2.5; });
  CHECK(sup_norm(derivative(c, 1)) < 1e-14);
  CHECK(sup_norm(derivative(c, 3)) < 1e-14);
}

TEST_CASE("second derivative of exp(cos s) is grid-converged") {
  const auto f64 = GridFunction::sample(64, [](double s) { return std::exp(std::cos(s)); });
  const auto f128 = GridFunction::sample(128, [](double s) { return std::exp(std::cos(s)); });
  const GridFunction d64 = derivative(f64, 2);
  const GridFunction d128 = derivative(f128, 2);
  double worst = 0.0;
  for (std::size_t j = 0; j < 64; ++j) worst = std::max(worst, std::abs(d64[j] - d128[2 * j]));
  CHECK(worst < 1e-10);
}

TEST_CASE("hilbert transform matches the cotangent-kernel quadrature") {
  // reference: H f(s) = (1/2pi) p.v. int cot(a/2) f(s-a) da by a 2048-node
  // midpoint rule on analytic samples
  const std::size_t m = 2048;
  auto oracle = [&](auto&& f, double s) {
    double acc = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      const double a = -std::numbers::pi + (j + 0.5) * two_pi / m;
      acc += f(s - a) / std::tan(0.5 * a);
    }
    return acc / static_cast<double>(m);
  };
  for (int n : {1, 2, 5}) {
    auto cosn = [n](double s) { return std::cos(n * s); };
    auto sinn = [n](double s) { return std::sin(n * s); };
    for (double s : {-2.0, 0.3, 1.7}) {
      CHECK(std::abs(oracle(cosn, s) - std::sin(n * s)) < 1e-8);
      CHECK(std::abs(oracle(sinn, s) + std::cos(n * s)) < 1e-8);
    }
    const auto f = GridFunction::sample(64, cosn);
    CHECK(sup_diff(hilbert(f), sinn) < 1e-12);
    const auto g = GridFunction::sample(64, sinn);
    CHECK(sup_diff(hilbert(g), [n](double s) { return -std::cos(n * s); }) < 1e-12);
  }
  const auto c = GridFunction::sample(32, [](double) { return 4.0; });
  CHECK(sup_norm(hilbert(c)) < 1e-14);
}

TEST_CASE("hilbert squared is minus the mean-free projection") {
  const GridFunction f = random_smooth_field(3, 128, 1.0);
  const double mu = mean(f);
  const GridFunction hh = hilbert(hilbert(f));
  CHECK(sup_diff(hh, [&](double) { return 0.0; }) > 0.0);  // nontrivial input
  GridFunction expected = f;
  for (std::size_t j = 0; j < f.size(); ++j) expected[j] = -(f[j] - mu);
  CHECK(sup_diff(hh, expected) < 1e-12);
}

TEST_CASE("lambda multiplier on single modes, semigroup and operator identity") {
  for (int n : {1, 3, 7}) {
    const auto f = GridFunction::sample(64, [n](double s) { return std::cos(n * s); });
    CHECK(sup_diff(lambda_pow(f, 1.0), [n](double s) { return n * std::cos(n * s); }) < 1e-12);
  }
  GridFunction f = random_smooth_field(5, 128, 1.0);
  // zero the mean so fractional powers compose cleanly
  const double mu = mean(f);
  for (std::size_t j = 0; j < f.size(); ++j) f[j] -= mu;
  CHECK(sup_diff(lambda_pow(lambda_pow(f, 0.5), 0.5), lambda_pow(f, 1.0)) < 1e-12);
  CHECK(sup_diff(lambda_pow(f, 1.0), hilbert(derivative(f, 1))) < 1e-12);
  // negative powers invert on mean-free input
  CHECK(sup_diff(lambda_pow(lambda_pow(f, 1.0), -1.0), f) < 1e-11);
}

TEST_CASE("negative lambda power rejects non-zero-mean input") {
  const auto f = GridFunction::sample(64, [](double s) { return 1.0 + std::cos(s); });
  CHECK_THROWS_AS(lambda_pow(f, -0.5), std::invalid_argument);
}

TEST_CASE("sobolev norms on single modes and the derivative identity") {
  for (int n : {1, 2, 6}) {
    for (double s : {0.5, 1.0, 1.5}) {
      const auto f = GridFunction::sample(128, [n](double x) { return std::cos(n * x); });
      const double want = std::sqrt(std::numbers::pi * std::pow(n, 2.0 * s));
      CHECK(sobolev_seminorm(f, s) == doctest::Approx(want).epsilon(1e-12));
    }
  }
  const auto c = GridFunction::sample(32, [](double) { return 3.0; });
  CHECK(sobolev_seminorm(c, 1.0) < 1e-13);
  CHECK(sobolev_norm(c, 1.0) == doctest::Approx(3.0 * std::sqrt(two_pi)).epsilon(1e-12));

  const GridFunction f = random_smooth_field(9, 128, 1.0);
  CHECK(sobolev_seminorm(f, 1.0) == doctest::Approx(l2_norm(derivative(f, 1))).epsilon(1e-12));
}

TEST_CASE("parseval ties the trapezoid inner product to the coefficients") {
  const GridFunction f = random_raw(21, 128);
  const SpectralCoeffs c = dft(f);
  double sum = 0.0;
  for (long m = c.min_mode(); m <= c.max_mode(); ++m) sum += std::norm(c.mode(m));
  CHECK(l2_inner(f, f) == doctest::Approx(two_pi * sum).epsilon(1e-12));
}

TEST_CASE("refinement interpolates band-limited data exactly") {
  const auto f = GridFunction::sample(16, [](double s) { return std::cos(2.0 * s); });
  const GridFunction g = refine(f, 4);
  REQUIRE(g.size() == 64);
  CHECK(sup_diff(g, [](double s) { return std::cos(2.0 * s); }) < 1e-13);

  const auto c = GridFunction::sample(16, [](double) { return -1.25; });
  CHECK(sup_diff(refine(c, 8), [](double) { return -1.25; }) < 1e-13);
}

TEST_CASE("refinement can only raise the observed maximum") {
  const auto f = GridFunction::sample(16, [](double s) { return std::exp(std::sin(s)); });
  double coarse_max = f[0], fine_max;
  for (std::size_t j = 0; j < f.size(); ++j) coarse_max = std::max(coarse_max, f[j]);
  const GridFunction g = refine(f, 8);
  fine_max = g[0];
  for (std::size_t j = 0; j < g.size(); ++j) fine_max = std::max(fine_max, g[j]);
  CHECK(fine_max >= coarse_max - 1e-14);
}

TEST_CASE("refinement preserves the existing coefficients") {
  const GridFunction f = random_smooth_field(13, 64, 1.0);  // band-limited well below Nyquist
  const SpectralCoeffs before = dft(f);
  const SpectralCoeffs after = dft(refine(f, 4));
  for (long m = before.min_mode() + 1; m <= before.max_mode(); ++m)
    CHECK(std::abs(before.mode(m) - after.mode(m)) < 1e-13);
}
