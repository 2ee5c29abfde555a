#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "npeskin/grid.hpp"
#include "npeskin/model.hpp"
#include "npeskin/quadrature.hpp"

namespace npeskin {

/// Per-snapshot norm/extremum/energy data. Extremum locations come from a 4x
/// spectrally refined grid.
struct DiagnosticsRecord {
  double t = 0.0;
  double sup_h = 0.0, sup_hprime = 0.0;
  double argmax_s0 = 0.0, argmin_s0 = 0.0;  // locations of max/min of h
  double argmax_s1 = 0.0, argmin_s1 = 0.0;  // locations of max/min of h'
  double l2_hprime_sq = 0.0;                // |h'|_{L2}^2
  double hhalf_hprime_sq = 0.0;             // |Lambda^{1/2} h'|_{L2}^2
  double h32_norm = 0.0;                    // inhomogeneous H^{3/2} norm of h
  std::array<double, 2> drift{0.0, 0.0};
  double mean_h = 0.0;

  bool finite() const;
};

DiagnosticsRecord measure(const RadialState& state);

/// sup|h| + sup|h'|, both on the 4x refined grid (the monitored Lipschitz size).
double w1inf_norm(const GridFunction& h);

/// Least-squares slope of -log(values) against t; values must be positive.
double fit_decay_rate(std::span<const double> t, std::span<const double> values);

/// -\int f'' f' Lambda f ds via the spectral operators and the trapezoid rule.
double energy_identity_spectral(const GridFunction& f);
/// The same quantity as the symmetrized double integral
/// (1/4)(1/2pi) \iint (f'(s)+f'(s-a)) (f'(s)-f'(s-a))^2 / (2 sin^2(a/2)) da ds.
double energy_identity_double_sum(const GridFunction& f, const QuadratureRule& rule);
/// |f'|_{H^{1/2}}^2 in the double-integral convention:
/// (1/2pi) \iint (f'(s)-f'(s-a))^2/(2 sin^2(a/2)) da ds == 2 \int f' Lambda f'.
double slope_half_seminorm_sq_double_sum(const GridFunction& f, const QuadratureRule& rule);

/// Weighted comparison operators of the pointwise lemmas, evaluated at one
/// node of the refinement x refined grid; the weight b >= 0 is sampled on the
/// base grid as a function of the offset.
double weighted_lambda_at(const GridFunction& f, const GridFunction& b, std::size_t refinement,
                          std::size_t refined_index);
double weighted_hilbert_at(const GridFunction& f, const GridFunction& b, std::size_t refinement,
                           std::size_t refined_index);

/// Lambda f' by the integrated-by-parts route:
/// f'(s)/2 + (1/2pi) \int [f'(s) a - (f(s)-f(s-a))] cos(a/2)/(2 sin^3(a/2)) da.
/// The local f'(s)/2 is the alpha = +-pi boundary contribution of the
/// non-periodic factor f'(s) a; without it the route does not reproduce Lambda f'.
GridFunction lambda_slope_by_parts(const GridFunction& f, const QuadratureRule& rule);

/// Results of the pointwise-lemma checks for one (f, b) pair. Margins are the
/// quantities required to be >= 0; sign violations show up as negative values.
struct LemmaReport {
  double monotone_margin_at_max = 0.0;  //  Lambda f'(argmax f') - Lambda f(argmax f')
  double monotone_margin_at_min = 0.0;  // -(Lambda f'(argmin f') - Lambda f(argmin f'))
  double weighted_margin_at_max = 0.0;  //  (Lambda_b - H_b) f at argmax f'
  double weighted_margin_at_min = 0.0;  // -(Lambda_b - H_b) f at argmin f'
  double lambda_at_argmax = 0.0;        //  Lambda f at argmax f (positive for zero-mean f)
  double by_parts_identity_error = 0.0; //  sup |by-parts route - spectral Lambda f'|

  bool signs_pass(double tol = 1e-10) const {
    return monotone_margin_at_max >= -tol && monotone_margin_at_min >= -tol &&
           weighted_margin_at_max >= -tol && weighted_margin_at_min >= -tol;
  }
};

LemmaReport lemma_checks(const GridFunction& f, const GridFunction& b);

}  // namespace npeskin
