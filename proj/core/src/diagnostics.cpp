#include "npeskin/diagnostics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace npeskin {

namespace {

constexpr std::size_t kRefine = 4;

struct Extrema {
  double max_value, min_value, argmax, argmin;
  std::size_t argmax_index, argmin_index;
};

Extrema extrema_refined(const GridFunction& f, std::size_t factor) {
  const GridFunction g = refine(f, factor);
  Extrema e{g[0], g[0], g.node(0), g.node(0), 0, 0};
  for (std::size_t j = 1; j < g.size(); ++j) {
    if (g[j] > e.max_value) {
      e.max_value = g[j];
      e.argmax = g.node(j);
      e.argmax_index = j;
    }
    if (g[j] < e.min_value) {
      e.min_value = g[j];
      e.argmin = g.node(j);
      e.argmin_index = j;
    }
  }
  return e;
}

std::size_t shifted_index(std::size_t m, std::size_t i, std::size_t j) {
  // position of t_i - alpha_j on the 2m grid, for an m-point grid and m-node rule
  return (2 * m + m + 2 * i - 2 * j - 1) % (2 * m);
}

}  // namespace

bool DiagnosticsRecord::finite() const {
  for (double v : {t, sup_h, sup_hprime, argmax_s0, argmin_s0, argmax_s1, argmin_s1, l2_hprime_sq,
                   hhalf_hprime_sq, h32_norm, drift[0], drift[1], mean_h})
    if (!std::isfinite(v)) return false;
  return true;
}

DiagnosticsRecord measure(const RadialState& state) {
  DiagnosticsRecord rec;
  rec.t = state.t;
  rec.drift = state.drift;
  rec.mean_h = mean(state.h);

  const GridFunction hp = derivative(state.h, 1);
  const Extrema e0 = extrema_refined(state.h, kRefine);
  const Extrema e1 = extrema_refined(hp, kRefine);
  rec.sup_h = std::max(std::abs(e0.max_value), std::abs(e0.min_value));
  rec.sup_hprime = std::max(std::abs(e1.max_value), std::abs(e1.min_value));
  rec.argmax_s0 = e0.argmax;
  rec.argmin_s0 = e0.argmin;
  rec.argmax_s1 = e1.argmax;
  rec.argmin_s1 = e1.argmin;

  const double l2hp = l2_norm(hp);
  rec.l2_hprime_sq = l2hp * l2hp;
  const double half = sobolev_seminorm(hp, 0.5);
  rec.hhalf_hprime_sq = half * half;
  rec.h32_norm = sobolev_norm(state.h, 1.5);
  return rec;
}

double w1inf_norm(const GridFunction& h) {
  const GridFunction h4 = refine(h, kRefine);
  const GridFunction hp4 = refine(derivative(h, 1), kRefine);
  return sup_norm(h4) + sup_norm(hp4);
}

double fit_decay_rate(std::span<const double> t, std::span<const double> values) {
  if (t.size() != values.size() || t.size() < 2)
    throw std::invalid_argument("fit_decay_rate: need >= 2 samples");
  double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
  const double n = static_cast<double>(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (!(values[k] > 0.0)) throw std::invalid_argument("fit_decay_rate: values must be positive");
    const double y = std::log(values[k]);
    st += t[k];
    sy += y;
    stt += t[k] * t[k];
    sty += t[k] * y;
  }
  const double denom = n * stt - st * st;
  if (denom == 0.0) throw std::invalid_argument("fit_decay_rate: degenerate time samples");
  return -(n * sty - st * sy) / denom;
}

double energy_identity_spectral(const GridFunction& f) {
  const GridFunction fp = derivative(f, 1);
  const GridFunction fpp = derivative(f, 2);
  const GridFunction lf = lambda_pow(f, 1.0);
  double acc = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) acc += fpp[j] * fp[j] * lf[j];
  return -acc * two_pi / static_cast<double>(f.size());
}

namespace {
double double_sum_kernel(const GridFunction& f, const QuadratureRule& rule, bool with_sum_factor) {
  if (rule.size() != f.size()) throw std::invalid_argument("double sum: rule size mismatch");
  const std::size_t n = f.size();
  const GridFunction fp = derivative(f, 1);
  const GridFunction fp2 = refine(fp, 2);
  const auto s2 = rule.sin_half_sq();
  const double w_s = two_pi / static_cast<double>(n);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double inner = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double fm = fp2[shifted_index(n, i, j)];
      const double diff = fp[i] - fm;
      const double base = diff * diff / (2.0 * s2[j]);
      inner += with_sum_factor ? (fp[i] + fm) * base : base;
    }
    acc += inner * rule.weight() * w_s;
  }
  const double c = 1.0 / (2.0 * std::numbers::pi);
  return with_sum_factor ? 0.25 * c * acc : c * acc;
}
}  // namespace

double energy_identity_double_sum(const GridFunction& f, const QuadratureRule& rule) {
  return double_sum_kernel(f, rule, true);
}

double slope_half_seminorm_sq_double_sum(const GridFunction& f, const QuadratureRule& rule) {
  return double_sum_kernel(f, rule, false);
}

namespace {
// shared core of the weighted comparison operators; kernel(j) supplies
// b(alpha_j) x (the lemma kernel at alpha_j)
template <class Kernel>
double weighted_operator_at(const GridFunction& f, std::size_t refinement, std::size_t refined_index,
                            Kernel&& kernel, const QuadratureRule& rule) {
  const std::size_t m = f.size() * refinement;
  if (refined_index >= m) throw std::invalid_argument("weighted operator: index out of range");
  const GridFunction fp_m = refine(derivative(f, 1), refinement);
  const GridFunction fp_2m = refine(fp_m, 2);
  double acc = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    const double diff = fp_m[refined_index] - fp_2m[shifted_index(m, refined_index, j)];
    acc += kernel(j) * diff;
  }
  return acc * rule.weight() / two_pi;
}

// b given on the base grid as a function of the offset; values at the
// refinement-rule nodes are the odd nodes of refine(b, 2 x refinement)
std::vector<double> weight_at_rule_nodes(const GridFunction& b, std::size_t refinement) {
  const GridFunction b2 = refine(b, 2 * refinement);
  const std::size_t m = b.size() * refinement;
  std::vector<double> out(m);
  for (std::size_t j = 0; j < m; ++j) out[j] = b2[(2 * j + 1) % (2 * m)];
  return out;
}
}  // namespace

double weighted_lambda_at(const GridFunction& f, const GridFunction& b, std::size_t refinement,
                          std::size_t refined_index) {
  const QuadratureRule rule(f.size() * refinement);
  const auto bw = weight_at_rule_nodes(b, refinement);
  const auto s2 = rule.sin_half_sq();
  return weighted_operator_at(
      f, refinement, refined_index, [&](std::size_t j) { return bw[j] / (2.0 * s2[j]); }, rule);
}

double weighted_hilbert_at(const GridFunction& f, const GridFunction& b, std::size_t refinement,
                           std::size_t refined_index) {
  const QuadratureRule rule(f.size() * refinement);
  const auto bw = weight_at_rule_nodes(b, refinement);
  const auto nodes = rule.nodes();
  return weighted_operator_at(
      f, refinement, refined_index, [&](std::size_t j) { return -bw[j] / std::tan(0.5 * nodes[j]); },
      rule);
}

GridFunction lambda_slope_by_parts(const GridFunction& f, const QuadratureRule& rule) {
  if (rule.size() != f.size()) throw std::invalid_argument("lambda_slope_by_parts: rule size mismatch");
  const std::size_t n = f.size();
  const GridFunction fp = derivative(f, 1);
  const GridFunction f2 = refine(f, 2);
  const auto nodes = rule.nodes();
  std::vector<double> k3(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double sh = std::sin(0.5 * nodes[j]);
    k3[j] = std::cos(0.5 * nodes[j]) / (2.0 * sh * sh * sh);
  }
  GridFunction out(n);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double theta = f[i] - f2[shifted_index(n, i, j)];
      acc += (fp[i] * nodes[j] - theta) * k3[j];
    }
    out[i] = 0.5 * fp[i] + acc * rule.weight() / two_pi;
  }
  return out;
}

LemmaReport lemma_checks(const GridFunction& f, const GridFunction& b) {
  if (b.size() != f.size()) throw std::invalid_argument("lemma_checks: weight size mismatch");
  for (std::size_t j = 0; j < b.size(); ++j)
    if (b[j] < 0.0) throw std::invalid_argument("lemma_checks: weight must be nonnegative");

  LemmaReport rep;
  const GridFunction fp = derivative(f, 1);
  const Extrema e1 = extrema_refined(fp, kRefine);

  const GridFunction lam_fp = refine(lambda_pow(fp, 1.0), kRefine);
  const GridFunction lam_f = refine(lambda_pow(f, 1.0), kRefine);
  rep.monotone_margin_at_max = lam_fp[e1.argmax_index] - lam_f[e1.argmax_index];
  rep.monotone_margin_at_min = -(lam_fp[e1.argmin_index] - lam_f[e1.argmin_index]);

  rep.weighted_margin_at_max = weighted_lambda_at(f, b, kRefine, e1.argmax_index) -
                               weighted_hilbert_at(f, b, kRefine, e1.argmax_index);
  rep.weighted_margin_at_min = -(weighted_lambda_at(f, b, kRefine, e1.argmin_index) -
                                 weighted_hilbert_at(f, b, kRefine, e1.argmin_index));

  const Extrema e0 = extrema_refined(f, kRefine);
  rep.lambda_at_argmax = lam_f[e0.argmax_index];

  const QuadratureRule rule(f.size());
  const GridFunction alt = lambda_slope_by_parts(f, rule);
  const GridFunction spectral = lambda_pow(fp, 1.0);
  rep.by_parts_identity_error = sup_norm(alt - spectral);
  return rep;
}

}  // namespace npeskin
