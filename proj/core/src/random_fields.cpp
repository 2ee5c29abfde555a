#include "npeskin/random_fields.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "npeskin/diagnostics.hpp"

namespace npeskin {

namespace {
// uniform in [-1, 1), identical across platforms for a given seed
double uniform_pm1(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
}

GridFunction from_modes(std::size_t n, const std::vector<double>& a, const std::vector<double>& b) {
  return GridFunction::sample(n, [&](double s) {
    double v = 0.0;
    for (std::size_t m = 1; m < a.size(); ++m)
      v += a[m] * std::cos(static_cast<double>(m) * s) + b[m] * std::sin(static_cast<double>(m) * s);
    return v;
  });
}
}  // namespace

GridFunction random_smooth_field(std::uint64_t seed, std::size_t n, double w1inf_bound, int max_mode) {
  std::mt19937_64 rng(seed);
  std::vector<double> a(static_cast<std::size_t>(max_mode) + 1, 0.0), b(a.size(), 0.0);
  for (int m = 1; m <= max_mode; ++m) {
    const double damp = 1.0 / (1.0 + static_cast<double>(m) * static_cast<double>(m));
    a[static_cast<std::size_t>(m)] = uniform_pm1(rng) * damp;
    b[static_cast<std::size_t>(m)] = uniform_pm1(rng) * damp;
  }
  GridFunction h = from_modes(n, a, b);
  const double norm = w1inf_norm(h);
  if (norm > 0.0) h *= 0.995 * w1inf_bound / norm;
  return h;
}

GridFunction random_nonnegative_weight(std::uint64_t seed, std::size_t n, int max_mode) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::vector<double> a(static_cast<std::size_t>(max_mode) + 1, 0.0), b(a.size(), 0.0);
  for (int m = 1; m <= max_mode; ++m) {
    const double damp = 1.0 / (1.0 + static_cast<double>(m));
    a[static_cast<std::size_t>(m)] = uniform_pm1(rng) * damp;
    b[static_cast<std::size_t>(m)] = uniform_pm1(rng) * damp;
  }
  GridFunction g = from_modes(n, a, b);
  const double s = sup_norm(refine(g, 4));
  if (s > 0.0) g *= 1.0 / s;
  GridFunction out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = 1.0 + 0.6 * g[j];
  return out;
}

}  // namespace npeskin
