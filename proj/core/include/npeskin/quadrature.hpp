#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace npeskin {

/// Uniform midpoint-offset rule on the circle: nodes alpha_j = -pi + (j+1/2)*2*pi/n,
/// uniform weights 2*pi/n. The offset keeps alpha = 0 and alpha = +-pi off the node
/// set, the nodes come in +- pairs, so integrands with an odd principal-value pole
/// at alpha = 0 are integrated by symmetry with no special casing.
class QuadratureRule {
 public:
  explicit QuadratureRule(std::size_t n_nodes);

  std::size_t size() const { return nodes_.size(); }
  double node(std::size_t j) const { return nodes_[j]; }
  double weight() const { return weight_; }
  std::span<const double> nodes() const { return nodes_; }

  // trig tables at the nodes, shared by the kernel evaluations
  std::span<const double> sin_alpha() const { return sin_a_; }
  std::span<const double> cos_alpha() const { return cos_a_; }
  std::span<const double> cos_2alpha() const { return cos_2a_; }
  std::span<const double> sin_half_sq() const { return sin_half_sq_; }

  /// Midpoint sum; realizes the principal value for integrands odd about 0.
  double integrate(std::span<const double> samples) const;

  /// integral of log(2|sin(alpha/2)|) * g(alpha) via the cosine series
  /// log(2|sin(alpha/2)|) = -sum_{k>=1} cos(k alpha)/k applied to the discrete
  /// coefficients of g, truncated at n_nodes/2. Avoids the singularity entirely.
  double log_split_integral(std::span<const double> g) const;

  /// Same integral by the plain midpoint sum of log(2|sin(alpha/2)|)*g — the
  /// slowly convergent cross-check path.
  double log_integral_naive(std::span<const double> g) const;

  std::span<const double> log_weights() const { return log_w_; }

 private:
  std::vector<double> nodes_, sin_a_, cos_a_, cos_2a_, sin_half_sq_, log_w_, log_kernel_;
  double weight_ = 0.0;
};

}  // namespace npeskin
