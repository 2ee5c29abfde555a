#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "npeskin/grid.hpp"
#include "npeskin/quadrature.hpp"

namespace npeskin {

/// Thrown when the perturbed curve degenerates (graph condition lost or the
/// kernel denominator underflows). Degenerate geometry aborts; it is never
/// regularized away.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Full state of the radial model: perturbation h over the unit circle, drift
/// point, and time.
struct RadialState {
  GridFunction h;
  std::array<double, 2> drift{0.0, 0.0};
  double t = 0.0;
};

/// True when 1 + min(h) > 0, i.e. the curve is still a graph over the circle.
bool graph_condition(const GridFunction& h);

/// Auxiliary fields at one target point s_i for all quadrature offsets:
/// r = 1+h(s), theta = h(s)-h(s-a), eta = h(s)-h(s-a)cos(a),
/// theta_alpha = d/da theta = h'(s-a).
struct AuxFields {
  double r = 0.0;
  std::vector<double> theta, eta, theta_alpha;
};

AuxFields aux_fields(const GridFunction& h, const QuadratureRule& rule, std::size_t target);

/// The three integral contributions to the contour velocity, split by kernel:
/// the log kernel, and the rank-one kernel against the radial and tangential
/// pieces of the force density.
struct ContourTerms {
  GridFunction log_term, radial_term, tangent_term;
  GridFunction sum() const { return log_term + radial_term + tangent_term; }
};

/// split_log: log kernel handled by the series rule plus a smooth remainder
/// (production path). raw: the literal squared-distance expressions with the
/// plain midpoint log sum (independent cross-check path).
enum class KernelForm { split_log, raw };

/// Requires rule.size() == h.size(): offsets (j+1/2)*2*pi/N land the shifted
/// arguments s_i - alpha_j on the half-shifted grid, so all off-grid samples
/// come from one refine(.,2) per field.
ContourTerms contour_terms(const GridFunction& h, const QuadratureRule& rule,
                           KernelForm form = KernelForm::split_log);

/// Velocity of the drift point: (1/4)(1/2pi) \int h(s) (cos s, sin s) ds.
std::array<double, 2> drift_velocity(const GridFunction& h);
/// Same quantity read off the first Fourier mode: (1/4)(Re c(1), -Im c(1)).
std::array<double, 2> drift_velocity_spectral(const GridFunction& h);

/// gamma(s) . d/dt M  as a grid function; equals (1/4) x the projection of h
/// onto span{cos, sin}.
GridFunction drift_projection(const GridFunction& h);

/// Full model right-hand side: d/dt h = (contour terms sum) - gamma . dM/dt.
GridFunction rhs(const GridFunction& h, const QuadratureRule& rule);

/// Linearization about the circle. absorb_drift = true: -(1/4) Lambda h (the
/// drift term cancels the cosine convolution exactly); false: keeps the
/// +(1/4)(1/2pi) \int h(s-a) cos(a) da forcing term.
GridFunction linearized_rhs(const GridFunction& h, bool absorb_drift);

/// N(h) = rhs(h) + (1/4) Lambda h, the deviation of the full right-hand side
/// from its linear principal part.
GridFunction nonlinearity(const GridFunction& h, const QuadratureRule& rule);

/// The seven integral terms of the slope evolution:
/// d/dt h' + gamma' . dM/dt = sum of the seven. Their sum equals the spectral
/// s-derivative of the contour-terms sum up to quadrature error.
std::array<GridFunction, 7> slope_terms(const GridFunction& h, const QuadratureRule& rule);

}  // namespace npeskin
