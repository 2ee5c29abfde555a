#include "npeskin/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace npeskin {

QuadratureRule::QuadratureRule(std::size_t n_nodes) {
  if (n_nodes < 2) throw std::invalid_argument("QuadratureRule: need at least two nodes");
  const double h = 2.0 * std::numbers::pi / static_cast<double>(n_nodes);
  weight_ = h;
  nodes_.resize(n_nodes);
  sin_a_.resize(n_nodes);
  cos_a_.resize(n_nodes);
  cos_2a_.resize(n_nodes);
  sin_half_sq_.resize(n_nodes);
  log_kernel_.resize(n_nodes);
  for (std::size_t j = 0; j < n_nodes; ++j) {
    const double a = -std::numbers::pi + (static_cast<double>(j) + 0.5) * h;
    nodes_[j] = a;
    sin_a_[j] = std::sin(a);
    cos_a_[j] = std::cos(a);
    cos_2a_[j] = std::cos(2.0 * a);
    const double sh = std::sin(0.5 * a);
    sin_half_sq_[j] = sh * sh;
    log_kernel_[j] = std::log(2.0 * std::abs(sh));
  }
  // w_j = -(2*pi/n) * sum_{k=1}^{n/2} cos(k alpha_j)/k : the series applied to
  // the discrete coefficients collapses to one fixed weight vector
  log_w_.assign(n_nodes, 0.0);
  const std::size_t kmax = n_nodes / 2;
  for (std::size_t j = 0; j < n_nodes; ++j) {
    double acc = 0.0;
    for (std::size_t k = 1; k <= kmax; ++k)
      acc += std::cos(static_cast<double>(k) * nodes_[j]) / static_cast<double>(k);
    log_w_[j] = -h * acc;
  }
}

double QuadratureRule::integrate(std::span<const double> samples) const {
  if (samples.size() != nodes_.size()) throw std::invalid_argument("integrate: sample count mismatch");
  double acc = 0.0;
  for (std::size_t j = 0; j < samples.size(); ++j) acc += samples[j];
  return acc * weight_;
}

double QuadratureRule::log_split_integral(std::span<const double> g) const {
  if (g.size() != nodes_.size()) throw std::invalid_argument("log_split_integral: sample count mismatch");
  double acc = 0.0;
  for (std::size_t j = 0; j < g.size(); ++j) acc += log_w_[j] * g[j];
  return acc;
}

double QuadratureRule::log_integral_naive(std::span<const double> g) const {
  if (g.size() != nodes_.size()) throw std::invalid_argument("log_integral_naive: sample count mismatch");
  double acc = 0.0;
  for (std::size_t j = 0; j < g.size(); ++j) acc += log_kernel_[j] * g[j];
  return acc * weight_;
}

}  // namespace npeskin
