#pragma once

#include <array>
#include <complex>

#include "npeskin/grid.hpp"
#include "npeskin/quadrature.hpp"

namespace npeskin {

struct Mat2 {
  double a11 = 0.0, a12 = 0.0, a21 = 0.0, a22 = 0.0;
};

/// 2D Stokeslet G(z) = -(1/4pi) log|z| I + (1/4pi) z (x) z / |z|^2. z = 0 rejected.
Mat2 stokeslet(double z1, double z2);

/// A simple closed curve sampled on the periodic grid.
struct VectorCurveState {
  GridFunction x1, x2;
  double t = 0.0;
};

struct CurveVelocity {
  GridFunction u1, u2;
};

/// min over distinct grid nodes of |X(s)-X(sigma)| / |2 sin((s-sigma)/2)|.
double chord_arc_ratio(const VectorCurveState& curve);

/// Boundary-integral velocity of the full vector contour dynamics:
/// u(s) = p.v. \int G(X(s)-X(sigma)) X''(sigma) dsigma, with X'' spectral and
/// the log kernel split as log(|z|/(2|sin(a/2)|)) + log(2|sin(a/2)|).
/// This path shares no kernel code with the scalar model.
CurveVelocity curve_velocity(const VectorCurveState& curve, const QuadratureRule& rule);

/// Linearized vector dynamics around the unit circle:
/// d/dt Y = -(1/4) Lambda Y + (1/4) [[0,-H],[H,0]] Y, componentwise spectral.
CurveVelocity linearized_curve_velocity(const GridFunction& y1, const GridFunction& y2);

/// The two eigenvalues of the linearized system restricted to Fourier mode n,
/// extracted numerically from linearized_curve_velocity on a grid of grid_n
/// points. n = 0 (decoupled mean) is rejected.
std::array<std::complex<double>, 2> linear_mode_eigenvalues(int n, std::size_t grid_n = 256);

/// (1+h(s)) (cos s, sin s) as a curve state.
VectorCurveState radial_curve(const GridFunction& h);

/// gamma(s) . u(s), the radial component of a curve velocity.
GridFunction radial_projection(const CurveVelocity& u);

}  // namespace npeskin
