#include "npeskin/model.hpp"

#include <cmath>
#include <numbers>

namespace npeskin {

namespace {

constexpr double kDenominatorFloor = 1e-14;

// h, h', h'' interpolated onto the half-shifted grid. With targets s_i and
// offsets alpha_j = -pi + (j+1/2)*2*pi/N, the point s_i - alpha_j is node
// (N + 2i - 2j - 1) mod 2N of the refine(.,2) grid.
struct ShiftedSamples {
  GridFunction h2, hp2, hpp2;
  std::size_t n = 0;

  explicit ShiftedSamples(const GridFunction& h, bool need_second = true)
      : h2(refine(h, 2)), hp2(refine(derivative(h, 1), 2)), n(h.size()) {
    if (need_second) hpp2 = refine(derivative(h, 2), 2);
  }
  std::size_t index(std::size_t i, std::size_t j) const {
    const std::size_t m = 2 * n;
    return (m + n + 2 * i - 2 * j - 1) % m;
  }
};

void check_rule(const GridFunction& h, const QuadratureRule& rule) {
  if (rule.size() != h.size())
    throw std::invalid_argument("quadrature rule must have one node per grid point");
}

void check_graph(const GridFunction& h) {
  if (!h.finite()) throw GeometryError("non-finite perturbation");
  if (!graph_condition(h)) throw GeometryError("graph condition lost: 1 + min(h) <= 0");
}

}  // namespace

bool graph_condition(const GridFunction& h) {
  double mn = h.size() ? h[0] : 0.0;
  for (std::size_t j = 0; j < h.size(); ++j) mn = std::min(mn, h[j]);
  return 1.0 + mn > 0.0;
}

AuxFields aux_fields(const GridFunction& h, const QuadratureRule& rule, std::size_t target) {
  check_rule(h, rule);
  const std::size_t n = h.size();
  if (target >= n) throw std::invalid_argument("aux_fields: target out of range");
  const ShiftedSamples sh(h, false);
  AuxFields out;
  out.r = 1.0 + h[target];
  out.theta.resize(n);
  out.eta.resize(n);
  out.theta_alpha.resize(n);
  const auto ca = rule.cos_alpha();
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t k = sh.index(target, j);
    const double hm = sh.h2[k];
    out.theta[j] = h[target] - hm;
    out.eta[j] = h[target] - hm * ca[j];
    out.theta_alpha[j] = sh.hp2[k];
  }
  return out;
}

ContourTerms contour_terms(const GridFunction& h, const QuadratureRule& rule, KernelForm form) {
  check_rule(h, rule);
  check_graph(h);
  const std::size_t n = h.size();
  const ShiftedSamples sh(h);

  ContourTerms out{GridFunction(n), GridFunction(n), GridFunction(n)};
  const auto sa = rule.sin_alpha();
  const auto ca = rule.cos_alpha();
  const auto s2 = rule.sin_half_sq();
  const double w = rule.weight();
  const double inv8pi = 1.0 / (8.0 * std::numbers::pi);
  const double inv4pi = 1.0 / (4.0 * std::numbers::pi);
  const double inv2pi = 1.0 / (2.0 * std::numbers::pi);

  std::vector<double> f_log(n);  // integrand multiplying the log kernel

  for (std::size_t i = 0; i < n; ++i) {
    const double r = 1.0 + h[i];
    double acc_rad = 0.0, acc_tan = 0.0, acc_smooth = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t k = sh.index(i, j);
      const double rm = 1.0 + sh.h2[k];     // r - theta = 1 + h(s-a)
      const double hp = sh.hp2[k];          // h'(s-a)
      const double hpp = sh.hpp2[k];        // h''(s-a)
      const double th = r - rm;             // theta
      const double den = 4.0 * r * rm * s2[j] + th * th;
      if (den < kDenominatorFloor) throw GeometryError("kernel denominator underflow (self-intersection)");

      const double f1 = ca[j] * (hpp - rm) + 2.0 * sa[j] * hp;  // d2/da2 [ (r-theta) cos a ]
      f_log[j] = f1;

      if (form == KernelForm::split_log) {
        // log(den) = log(4 sin^2(a/2)) + log(r*rm + theta^2/(4 sin^2(a/2)))
        const double smooth = r * rm + th * th / (4.0 * s2[j]);
        acc_smooth += std::log(smooth) * f1;
        acc_rad += (2.0 * r * s2[j] + th * ca[j]) * (2.0 * r * s2[j] - th) / den * (rm - hpp);
        acc_tan += (2.0 * r * s2[j] + th * ca[j]) * sa[j] / den * hp;
      } else {
        // literal squared-distance form; the two bracket arrangements agree
        // through a double sign flip: [r cos a - rm] = -[2 r sin^2(a/2) - th]
        // and (hpp - rm) = -(rm - hpp)
        acc_smooth += std::log(den) * f1;
        acc_rad += (r - rm * ca[j]) * (r * ca[j] - rm) / den * (hpp - rm);
        acc_tan += (r - rm * ca[j]) * sa[j] / den * hp;
      }
    }
    if (form == KernelForm::split_log) {
      const double log_part = 2.0 * rule.log_split_integral(f_log);
      out.log_term[i] = -inv8pi * (log_part + w * acc_smooth);
    } else {
      out.log_term[i] = -inv8pi * w * acc_smooth;
    }
    out.radial_term[i] = inv4pi * w * acc_rad;
    out.tangent_term[i] = inv2pi * r * w * acc_tan;
  }
  return out;
}

std::array<double, 2> drift_velocity(const GridFunction& h) {
  const std::size_t n = h.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double s = h.node(j);
    mx += h[j] * std::cos(s);
    my += h[j] * std::sin(s);
  }
  const double scale = 0.25 / static_cast<double>(n);
  return {scale * mx, scale * my};
}

std::array<double, 2> drift_velocity_spectral(const GridFunction& h) {
  const SpectralCoeffs c = dft(h);
  return {0.25 * c.mode(1).real(), -0.25 * c.mode(1).imag()};
}

GridFunction drift_projection(const GridFunction& h) {
  const auto md = drift_velocity(h);
  GridFunction out(h.size());
  for (std::size_t j = 0; j < h.size(); ++j) {
    const double s = out.node(j);
    out[j] = md[0] * std::cos(s) + md[1] * std::sin(s);
  }
  return out;
}

GridFunction rhs(const GridFunction& h, const QuadratureRule& rule) {
  return contour_terms(h, rule).sum() - drift_projection(h);
}

GridFunction linearized_rhs(const GridFunction& h, bool absorb_drift) {
  SpectralCoeffs c = dft(h);
  const long half = static_cast<long>(h.size()) / 2;
  for (long n = -half; n < half; ++n) {
    double m = -0.25 * std::abs(static_cast<double>(n));
    if (!absorb_drift && (n == 1 || n == -1)) m += 0.125;  // cosine convolution, modes +-1 only
    c.mode(n) *= m;
  }
  return idft(c);
}

GridFunction nonlinearity(const GridFunction& h, const QuadratureRule& rule) {
  return rhs(h, rule) + 0.25 * lambda_pow(h, 1.0);
}

std::array<GridFunction, 7> slope_terms(const GridFunction& h, const QuadratureRule& rule) {
  check_rule(h, rule);
  check_graph(h);
  const std::size_t n = h.size();
  const ShiftedSamples sh(h);
  const GridFunction hprime = derivative(h, 1);

  std::array<GridFunction, 7> out{GridFunction(n), GridFunction(n), GridFunction(n), GridFunction(n),
                                  GridFunction(n), GridFunction(n), GridFunction(n)};
  const auto sa = rule.sin_alpha();
  const auto ca = rule.cos_alpha();
  const auto c2a = rule.cos_2alpha();
  const auto s2 = rule.sin_half_sq();
  const double w = rule.weight();
  const double inv4pi = 1.0 / (4.0 * std::numbers::pi);
  const double inv2pi = 1.0 / (2.0 * std::numbers::pi);

  for (std::size_t i = 0; i < n; ++i) {
    const double r = 1.0 + h[i];
    const double rp = hprime[i];
    double acc[7] = {0, 0, 0, 0, 0, 0, 0};
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t k = sh.index(i, j);
      const double rm = 1.0 + sh.h2[k];   // r - theta
      const double hp = sh.hp2[k];        // (r - theta)' = h'(s-a)
      const double hpp = sh.hpp2[k];      // (r - theta)'' = h''(s-a)
      const double th = r - rm;
      const double den = 4.0 * r * rm * s2[j] + th * th;
      if (den < kDenominatorFloor) throw GeometryError("kernel denominator underflow (self-intersection)");
      const double den2 = den * den;

      // d/da [ sin(a) (r-theta) ] and d/da [ cos(a) (r-theta)' ];
      // note d/da (r-theta) = -h'(s-a) and d/da (r-theta)' = -h''(s-a)
      const double br1 = ca[j] * rm - sa[j] * hp;
      const double br2 = -sa[j] * hp - ca[j] * hpp;

      acc[0] += (r * rp + rm * hp - (rp * rm + r * hp) * ca[j]) / den * br1;
      acc[1] += (-r * rp + rp * rm * ca[j] - r * rm * sa[j]) / den * br2;
      acc[2] += ((rp + rm * sa[j]) * (r * ca[j] - rm) + (r - rm * ca[j]) * (rp * ca[j] - r * sa[j])) / den *
                (hpp - rm);
      acc[3] += (r - rm * ca[j]) * (r * ca[j] - rm) / den2 *
                (r * rp - rm * rp * ca[j] + r * rm * sa[j]) * (hpp - rm);
      acc[4] += (rp * (r - rm * ca[j]) * sa[j] + r * rp * sa[j]) / den * hp;
      acc[5] += (r * r * ca[j] - r * rm * c2a[j]) / den * hp;
      acc[6] += r * (r - rm * ca[j]) * sa[j] / den2 *
                (2.0 * r * rp + 2.0 * rm * (r * sa[j] - rp * ca[j])) * hp;
    }
    out[0][i] = 0.5 * inv2pi * w * acc[0];
    out[1][i] = -0.5 * inv2pi * w * acc[1];
    out[2][i] = inv4pi * w * acc[2];
    out[3][i] = -inv2pi * w * acc[3];
    out[4][i] = inv2pi * w * acc[4];
    out[5][i] = inv2pi * w * acc[5];
    out[6][i] = -inv2pi * w * acc[6];
  }
  return out;
}

}  // namespace npeskin
