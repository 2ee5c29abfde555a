#include "npeskin/stokeslet.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "npeskin/model.hpp"

namespace npeskin {

namespace {
constexpr double kChordArcFloor = 1e-6;

struct ShiftedCurve {
  GridFunction x1, x2, x1pp, x2pp;
  std::size_t n = 0;

  explicit ShiftedCurve(const VectorCurveState& c)
      : x1(refine(c.x1, 2)),
        x2(refine(c.x2, 2)),
        x1pp(refine(derivative(c.x1, 2), 2)),
        x2pp(refine(derivative(c.x2, 2), 2)),
        n(c.x1.size()) {}
  std::size_t index(std::size_t i, std::size_t j) const {
    const std::size_t m = 2 * n;
    return (m + n + 2 * i - 2 * j - 1) % m;
  }
};
}  // namespace

Mat2 stokeslet(double z1, double z2) {
  const double r2 = z1 * z1 + z2 * z2;
  if (r2 == 0.0) throw std::domain_error("stokeslet: z = 0");
  const double c = 1.0 / (4.0 * std::numbers::pi);
  const double lg = -c * 0.5 * std::log(r2);
  return {lg + c * z1 * z1 / r2, c * z1 * z2 / r2, c * z1 * z2 / r2, lg + c * z2 * z2 / r2};
}

double chord_arc_ratio(const VectorCurveState& curve) {
  const std::size_t n = curve.x1.size();
  if (curve.x2.size() != n) throw std::invalid_argument("chord_arc_ratio: component size mismatch");
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d1 = curve.x1[i] - curve.x1[j];
      const double d2 = curve.x2[i] - curve.x2[j];
      const double gap = 2.0 * std::abs(std::sin(0.5 * (curve.x1.node(i) - curve.x1.node(j))));
      worst = std::min(worst, std::sqrt(d1 * d1 + d2 * d2) / gap);
    }
  }
  return worst;
}

CurveVelocity curve_velocity(const VectorCurveState& curve, const QuadratureRule& rule) {
  const std::size_t n = curve.x1.size();
  if (curve.x2.size() != n) throw std::invalid_argument("curve_velocity: component size mismatch");
  if (rule.size() != n) throw std::invalid_argument("curve_velocity: rule must have one node per grid point");
  if (chord_arc_ratio(curve) < kChordArcFloor) throw GeometryError("chord-arc condition violated");

  const ShiftedCurve sc(curve);
  CurveVelocity out{GridFunction(n), GridFunction(n)};
  const auto nodes = rule.nodes();
  const double w = rule.weight();
  const double c = 1.0 / (4.0 * std::numbers::pi);

  std::vector<double> f1(n), f2(n);
  for (std::size_t i = 0; i < n; ++i) {
    double g1 = 0.0, g2 = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t k = sc.index(i, j);
      const double z1 = curve.x1[i] - sc.x1[k];
      const double z2 = curve.x2[i] - sc.x2[k];
      const double r2 = z1 * z1 + z2 * z2;
      if (r2 == 0.0) throw GeometryError("curve_velocity: coincident points");
      const double p1 = sc.x1pp[k];
      const double p2 = sc.x2pp[k];
      // bounded log remainder: log(|z| / (2|sin(a/2)|))
      const double gap = 2.0 * std::abs(std::sin(0.5 * nodes[j]));
      const double logsmooth = 0.5 * std::log(r2 / (gap * gap));
      g1 += logsmooth * p1;
      g2 += logsmooth * p2;
      f1[j] = p1;
      f2[j] = p2;
      const double dot = (z1 * p1 + z2 * p2) / r2;
      out.u1[i] += z1 * dot;
      out.u2[i] += z2 * dot;
    }
    out.u1[i] = c * (w * out.u1[i] - w * g1 - rule.log_split_integral(f1));
    out.u2[i] = c * (w * out.u2[i] - w * g2 - rule.log_split_integral(f2));
  }
  return out;
}

CurveVelocity linearized_curve_velocity(const GridFunction& y1, const GridFunction& y2) {
  if (y1.size() != y2.size()) throw std::invalid_argument("linearized_curve_velocity: size mismatch");
  const GridFunction l1 = lambda_pow(y1, 1.0);
  const GridFunction l2 = lambda_pow(y2, 1.0);
  const GridFunction h1 = hilbert(y1);
  const GridFunction h2 = hilbert(y2);
  CurveVelocity out{GridFunction(y1.size()), GridFunction(y1.size())};
  for (std::size_t j = 0; j < y1.size(); ++j) {
    out.u1[j] = -0.25 * l1[j] - 0.25 * h2[j];
    out.u2[j] = -0.25 * l2[j] + 0.25 * h1[j];
  }
  return out;
}

std::array<std::complex<double>, 2> linear_mode_eigenvalues(int n, std::size_t grid_n) {
  if (n == 0) throw std::invalid_argument("linear_mode_eigenvalues: mean mode is decoupled");
  if (4 * static_cast<std::size_t>(std::abs(n)) > grid_n)
    throw std::invalid_argument("linear_mode_eigenvalues: grid too coarse for this mode");

  const auto cosn = GridFunction::sample(grid_n, [n](double s) { return std::cos(n * s); });
  const auto sinn = GridFunction::sample(grid_n, [n](double s) { return std::sin(n * s); });
  const GridFunction zero(grid_n);

  // columns of the 2x2 complex matrix acting on mode n: feed e^{ins} into each
  // component via its real and imaginary parts and read back mode n
  auto column = [&](bool second_component) {
    const CurveVelocity re = second_component ? linearized_curve_velocity(zero, cosn)
                                              : linearized_curve_velocity(cosn, zero);
    const CurveVelocity im = second_component ? linearized_curve_velocity(zero, sinn)
                                              : linearized_curve_velocity(sinn, zero);
    const std::complex<double> i_unit(0.0, 1.0);
    const std::complex<double> a = dft(re.u1).mode(n) + i_unit * dft(im.u1).mode(n);
    const std::complex<double> b = dft(re.u2).mode(n) + i_unit * dft(im.u2).mode(n);
    return std::array<std::complex<double>, 2>{a, b};
  };
  const auto col1 = column(false);
  const auto col2 = column(true);
  const std::complex<double> a = col1[0], c = col1[1], b = col2[0], d = col2[1];

  const std::complex<double> tr = a + d;
  const std::complex<double> disc = std::sqrt(tr * tr - 4.0 * (a * d - b * c));
  return {0.5 * (tr + disc), 0.5 * (tr - disc)};
}

VectorCurveState radial_curve(const GridFunction& h) {
  VectorCurveState c{GridFunction(h.size()), GridFunction(h.size()), 0.0};
  for (std::size_t j = 0; j < h.size(); ++j) {
    const double s = h.node(j);
    c.x1[j] = (1.0 + h[j]) * std::cos(s);
    c.x2[j] = (1.0 + h[j]) * std::sin(s);
  }
  return c;
}

GridFunction radial_projection(const CurveVelocity& u) {
  GridFunction out(u.u1.size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    const double s = out.node(j);
    out[j] = u.u1[j] * std::cos(s) + u.u2[j] * std::sin(s);
  }
  return out;
}

}  // namespace npeskin
