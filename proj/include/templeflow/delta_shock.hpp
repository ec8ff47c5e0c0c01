#pragma once

#include <array>
#include <utility>

#include "templeflow/core.hpp"
#include "templeflow/quadrature.hpp"

namespace templeflow {

/// Delta shock travelling along x(t) = u_delta t and carrying the weight
/// w(t) = w_slope t on the density, with constant transported value g.
struct DeltaShockWave {
  double u_delta;
  double w_slope;
  double g;

  double position(double t) const { return u_delta * t; }
  double weight(double t) const { return w_slope * t; }
};

/// Jumps [q] = q_l - q_r of the conserved densities and fluxes.
struct Jumps {
  double rho;            // [rho]
  double rho_u;          // [rho u]
  double rho_v;          // [rho v]
  double momentum_flux;  // [rho u^2 + s^2 v]
  double pressure_flux;  // [rho u v + u]
  double u;              // [u]
  double v;              // [v]
};

Jumps jumps(const PrimitiveState& left, const PrimitiveState& right, const Params& params);

/// Discriminant of the speed quadratic, computed two ways:
/// from_jumps = [rho u]^2 - [rho][rho u^2 + s^2 v],
/// factored   = rho_l rho_r [u]^2 - s^2 [rho][v].
struct Discriminant {
  double from_jumps;
  double factored;
};

Discriminant discriminant(const PrimitiveState& left, const PrimitiveState& right,
                          const Params& params);

/// 1/2 (lambda1(Ul) - lambda3(Ur))^2 >= max{-(s^2/rho_r) dR2, (s^2/rho_l) dR2},
/// dR2 = R2(Ur) - R2(Ul).
bool delta_condition_check(const PrimitiveState& left, const PrimitiveState& right,
                           const Params& params);

/// Roots of [rho] u^2 - 2 [rho u] u + [rho u^2 + s^2 v] = 0, sorted ascending.
/// Requires [rho] != 0.
std::pair<double, double> quadratic_roots(const PrimitiveState& left,
                                          const PrimitiveState& right, const Params& params);

/// lambda3(Ur) <= u_delta <= lambda1(Ul).
bool entropy_check(const DeltaShockWave& wave, const PrimitiveState& left,
                   const PrimitiveState& right, const Params& params);

/// Admissible delta shock for lambda1(Ul) >= lambda3(Ur) satisfying the delta condition.
/// g is obtained from the integrated third relation w(t) g = -[rho v] x(t) + [rho u v + u] t.
DeltaShockWave solve_delta(const PrimitiveState& left, const PrimitiveState& right,
                           const Params& params);

/// Residuals of the generalized Rankine-Hugoniot system in differential form:
/// dx/dt - u_delta, dw/dt - (-[rho] u_delta + [rho u]),
/// d(w u_delta)/dt - (-[rho u] u_delta + [rho u^2 + s^2 v]),
/// d(w g)/dt - (-[rho v] u_delta + [rho u v + u]). Derivatives are exact.
std::array<double, 4> grh_residual(const DeltaShockWave& wave, const PrimitiveState& left,
                                   const PrimitiveState& right, const Params& params, double t);

/// Same relations integrated from x(0) = w(0) = 0; each component is linear in t.
std::array<double, 4> grh_integrated_residual(const DeltaShockWave& wave,
                                              const PrimitiveState& left,
                                              const PrimitiveState& right, const Params& params,
                                              double t);

/// Weak-form integrals I1, I2, I3 of the measure-solution definition for the
/// delta-shock solution against phi. Quadrature: composite Gauss-Legendre with
/// `panels` panels per axis, the x integration split along the shock path.
std::array<double, 3> measure_solution_residual(const DeltaShockWave& wave,
                                                const PrimitiveState& left,
                                                const PrimitiveState& right,
                                                const Params& params, const TestFunction& phi,
                                                int panels = 64);

}  // namespace templeflow
