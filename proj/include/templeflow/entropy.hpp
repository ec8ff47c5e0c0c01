#pragma once

#include <functional>
#include <string>
#include <vector>

#include "templeflow/core.hpp"
#include "templeflow/quadrature.hpp"
#include "templeflow/riemann.hpp"

namespace templeflow {

using ScalarFunction = std::function<double(double)>;

/// Generator functions (F, G, H) of an entropy pair
///   eta = rho (F(u + s v) + G(u - s v) + H(v + 1/rho)),
///   q   = (rho u + s) F(u + s v) + (rho u - s) G(u - s v) + rho u H(v + 1/rho).
/// Derivatives are optional and not used by the pair formulas.
struct EntropyPair {
  ScalarFunction F;
  ScalarFunction G;
  ScalarFunction H;
  ScalarFunction dF;
  ScalarFunction dG;
  ScalarFunction dH;

  static EntropyPair zero();
};

/// a (x - b)^2, convex for a >= 0.
struct QuadraticGenerator {
  double a = 0.0;
  double b = 0.0;

  double operator()(double x) const { return a * (x - b) * (x - b); }
  double derivative(double x) const { return 2.0 * a * (x - b); }
};

EntropyPair quadratic_pair(const QuadraticGenerator& f, const QuadraticGenerator& g,
                           const QuadraticGenerator& h);

double entropy_value(const PrimitiveState& p, const Params& params, const EntropyPair& pair);
double entropy_flux(const PrimitiveState& p, const Params& params, const EntropyPair& pair);

struct LagrangianPairValue {
  double eta;
  double flux;
};

/// eta~ = F(nu + s kappa) + G(nu - s kappa) + H(omega + kappa),
/// q~   = s F(nu + s kappa) - s G(nu - s kappa).
LagrangianPairValue lagrangian_pair(const LagrangianState& state, const Params& params,
                                    const EntropyPair& pair);

using SolutionSampler = std::function<PrimitiveState(double t, double x)>;

/// Weak entropy residual  integral (eta phi_t + q phi_x) dx dt  over `box`, with phi
/// the smooth bump filling the box, by the tensor midpoint rule with `mesh`
/// points per axis. The solution is sampled at cell midpoints.
double entropy_weak_residual(const SolutionSampler& solution, const Params& params,
                             const EntropyPair& pair, const SpaceTimeBox& box, int mesh);

/// Front-fitted variant for an exact classical fan. Each row t is split at the
/// contacts x = sigma_k t (clipped to the box) and every wedge gets its own
/// uniform midpoint sub-mesh, sized once for the whole box in proportion to the
/// wedge's widest extent (at least 2 points). Jumps never fall inside a cell, so
/// the error is a smooth O(mesh^-2) instead of the erratic aliasing of the plain
/// midpoint rule across discontinuities.
double entropy_weak_residual(const WaveFan& fan, const Params& params, const EntropyPair& pair,
                             const SpaceTimeBox& box, int mesh);

/// Three convex quadratic pairs used as defaults by the validators.
std::vector<EntropyPair> builtin_pairs();

}  // namespace templeflow
