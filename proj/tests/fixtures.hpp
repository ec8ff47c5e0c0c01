// Test-side helpers that build library inputs (not oracles).
#pragma once

#include <algorithm>
#include <cmath>
#include <span>

#include "templeflow/core.hpp"

namespace fixtures {

/// Tightest H1/H2 constants for `states`, widened by `margin`.
inline templeflow::Hypotheses fit_hypotheses(std::span<const templeflow::PrimitiveState> states,
                                             const templeflow::Params& params,
                                             double margin = 1e-9) {
  const double s = params.s;
  double c1 = 1e300, c2 = -1e300, c3 = 1e300, c4 = -1e300, c5 = 1e300, tv = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto& p = states[i];
    c1 = std::min(c1, p.u - s * p.v);
    c2 = std::max(c2, p.u - s * p.v);
    c3 = std::min(c3, p.u + s * p.v);
    c4 = std::max(c4, p.u + s * p.v);
    c5 = std::min(c5, p.v + 1.0 / p.rho);
    if (i > 0) {
      const auto& q = states[i - 1];
      tv = std::max({tv, 0.0});
      tv += std::abs((p.u - s * p.v) - (q.u - s * q.v)) + std::abs((p.u + s * p.v) - (q.u + s * q.v));
    }
  }
  return {c1 - margin, c2 + margin, c3 - margin, c4 + margin, c5 - margin, tv + 1.0, params};
}

/// True when fitted constants would satisfy c5 > (c4 - c1) / (2s) with room to spare.
inline bool h1_feasible(std::span<const templeflow::PrimitiveState> states,
                        const templeflow::Params& params, double room = 1e-3) {
  const double s = params.s;
  double c1 = 1e300, c4 = -1e300, c5 = 1e300;
  for (const auto& p : states) {
    c1 = std::min(c1, p.u - s * p.v);
    c4 = std::max(c4, p.u + s * p.v);
    c5 = std::min(c5, p.v + 1.0 / p.rho);
  }
  return c5 - (c4 - c1) / (2.0 * s) > room;
}

}  // namespace fixtures
