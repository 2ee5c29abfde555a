#pragma once

#include <cstdint>

#include "npeskin/grid.hpp"

namespace npeskin {

/// Deterministic band-limited random field: modes 1..max_mode with uniform
/// coefficients damped by 1/(1+m^2), rescaled so that sup|h| + sup|h'| equals
/// 0.995 * w1inf_bound. The realization depends only on (seed, max_mode), not
/// on the grid size, so the same field can be sampled at several resolutions.
GridFunction random_smooth_field(std::uint64_t seed, std::size_t n, double w1inf_bound,
                                 int max_mode = 8);

/// Deterministic weight bounded away from zero: 1 + 0.6 * (smooth field with
/// sup <= 1), so b >= 0.4 on the grid and after band-limited refinement.
GridFunction random_nonnegative_weight(std::uint64_t seed, std::size_t n, int max_mode = 6);

}  // namespace npeskin
