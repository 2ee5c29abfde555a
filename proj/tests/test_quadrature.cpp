#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "npeskin/grid.hpp"
#include "npeskin/quadrature.hpp"

using namespace npeskin;

namespace {
std::vector<double> sample_rule(const QuadratureRule& rule, double (*f)(double)) {
  std::vector<double> v(rule.size());
  for (std::size_t j = 0; j < rule.size(); ++j) v[j] = f(rule.node(j));
  return v;
}
}  // namespace

TEST_CASE("midpoint nodes avoid the singular points and sum to 2pi") {
  const QuadratureRule rule(64);
  double wsum = 0.0;
  for (std::size_t j = 0; j < rule.size(); ++j) {
    CHECK(std::abs(rule.node(j)) > 1e-12);
    CHECK(std::abs(std::abs(rule.node(j)) - std::numbers::pi) > 1e-12);
    wsum += rule.weight();
  }
  CHECK(wsum == doctest::Approx(two_pi).epsilon(1e-13));
  // nodes come in +- pairs
  for (std::size_t j = 0; j < rule.size(); ++j)
    CHECK(rule.node(j) == doctest::Approx(-rule.node(rule.size() - 1 - j)).epsilon(1e-14));
}

TEST_CASE("midpoint rule integrates the easy references") {
  const QuadratureRule rule(128);
  CHECK(std::abs(rule.integrate(sample_rule(rule, [](double a) { return std::cos(a); }))) < 1e-12);
  CHECK(std::abs(rule.integrate(sample_rule(rule, [](double a) { return 1.0 / std::tan(0.5 * a); }))) <
        1e-12);
  const double v = rule.integrate(sample_rule(rule, [](double a) {
    const double sh = std::sin(0.5 * a);
    return sh * sh;
  }));
  CHECK(v == doctest::Approx(std::numbers::pi).epsilon(1e-13));
}

TEST_CASE("midpoint rule is exact on trigonometric polynomials below Nyquist") {
  const std::size_t n = 64;
  const QuadratureRule rule(n);
  std::mt19937_64 rng(17);
  auto u = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0; };
  std::vector<double> a(n / 2), b(n / 2);
  for (auto& x : a) x = u();
  for (auto& x : b) x = u();
  const double a0 = u();
  std::vector<double> samples(n);
  for (std::size_t j = 0; j < n; ++j) {
    double v = a0;
    for (std::size_t k = 1; k < n / 2; ++k)
      v += a[k] * std::cos(k * rule.node(j)) + b[k] * std::sin(k * rule.node(j));
    samples[j] = v;
  }
  CHECK(rule.integrate(samples) == doctest::Approx(two_pi * a0).epsilon(1e-12));
}

TEST_CASE("series rule reproduces the cosine moments of the log kernel") {
  const std::size_t n = 256;
  const QuadratureRule rule(n);
  CHECK(std::abs(rule.log_split_integral(sample_rule(rule, [](double) { return 1.0; }))) < 1e-12);
  CHECK(rule.log_split_integral(sample_rule(rule, [](double a) { return std::cos(a); })) ==
        doctest::Approx(-std::numbers::pi).epsilon(1e-12));
  for (std::size_t k = 1; k <= n / 4; k *= 2) {
    std::vector<double> g(n);
    for (std::size_t j = 0; j < n; ++j) g[j] = std::cos(static_cast<double>(k) * rule.node(j));
    CHECK(rule.log_split_integral(g) ==
          doctest::Approx(-std::numbers::pi / static_cast<double>(k)).epsilon(1e-10));
  }
}

TEST_CASE("naive log path converges to the series rule under node doubling") {
  auto discrepancy = [](std::size_t n) {
    const QuadratureRule rule(n);
    std::vector<double> g(n);
    for (std::size_t j = 0; j < n; ++j) g[j] = std::exp(std::cos(rule.node(j)));
    return std::abs(rule.log_integral_naive(g) - rule.log_split_integral(g));
  };
  const double d64 = discrepancy(64);
  const double d128 = discrepancy(128);
  const double d256 = discrepancy(256);
  CHECK(d64 > d128);
  CHECK(d128 > d256);
  // the naive path converges like log(n)/n
  CHECK(d256 < 10.0 * std::log(256.0) / 256.0);
}

TEST_CASE("sample-count mismatches are rejected") {
  const QuadratureRule rule(32);
  std::vector<double> wrong(16, 1.0);
  CHECK_THROWS_AS(rule.integrate(wrong), std::invalid_argument);
  CHECK_THROWS_AS(rule.log_split_integral(wrong), std::invalid_argument);
}
