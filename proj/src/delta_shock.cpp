#include "templeflow/delta_shock.hpp"

#include <algorithm>
#include <cmath>

#include "templeflow/errors.hpp"

namespace templeflow {

Jumps jumps(const PrimitiveState& left, const PrimitiveState& right, const Params& params) {
  const double s2 = params.s * params.s;
  auto momentum_flux = [s2](const PrimitiveState& p) { return p.rho * p.u * p.u + s2 * p.v; };
  auto pressure_flux = [](const PrimitiveState& p) { return p.rho * p.u * p.v + p.u; };
  return {left.rho - right.rho,
          left.rho * left.u - right.rho * right.u,
          left.rho * left.v - right.rho * right.v,
          momentum_flux(left) - momentum_flux(right),
          pressure_flux(left) - pressure_flux(right),
          left.u - right.u,
          left.v - right.v};
}

Discriminant discriminant(const PrimitiveState& left, const PrimitiveState& right,
                          const Params& params) {
  const Jumps j = jumps(left, right, params);
  const double s2 = params.s * params.s;
  return {j.rho_u * j.rho_u - j.rho * j.momentum_flux,
          left.rho * right.rho * j.u * j.u - s2 * j.rho * j.v};
}

bool delta_condition_check(const PrimitiveState& left, const PrimitiveState& right,
                           const Params& params) {
  const double s2 = params.s * params.s;
  const double gap = lambda1(left, params) - lambda3(right, params);
  const double dR2 = riemann_invariants(right, params).R2 - riemann_invariants(left, params).R2;
  return 0.5 * gap * gap >= std::max(-s2 / right.rho * dR2, s2 / left.rho * dR2);
}

std::pair<double, double> quadratic_roots(const PrimitiveState& left,
                                          const PrimitiveState& right, const Params& params) {
  const Jumps j = jumps(left, right, params);
  if (j.rho == 0.0) {
    throw ArgumentError("speed quadratic is degenerate when [rho] = 0");
  }
  const double d = j.rho_u * j.rho_u - j.rho * j.momentum_flux;
  if (d < 0.0) {
    throw InconsistencyError("negative discriminant in the delta-shock speed quadratic");
  }
  // Pair the cancellation-free root with its Vieta partner.
  const double q = j.rho_u + std::copysign(std::sqrt(d), j.rho_u);
  double a, b;
  if (q == 0.0) {
    a = b = 0.0;
  } else {
    a = q / j.rho;
    b = j.momentum_flux / q;
  }
  return {std::min(a, b), std::max(a, b)};
}

bool entropy_check(const DeltaShockWave& wave, const PrimitiveState& left,
                   const PrimitiveState& right, const Params& params) {
  return lambda3(right, params) <= wave.u_delta && wave.u_delta <= lambda1(left, params);
}

DeltaShockWave solve_delta(const PrimitiveState& left, const PrimitiveState& right,
                           const Params& params) {
  const double l1 = lambda1(left, params);
  const double l3 = lambda3(right, params);
  if (!(l1 >= l3)) {
    throw ClassificationError("delta shock needs lambda1(Ul) >= lambda3(Ur)");
  }
  if (!delta_condition_check(left, right, params)) {
    throw ClassificationError("delta-shock condition fails for these states");
  }
  const Jumps j = jumps(left, right, params);
  double u_delta = 0.0;
  double w_slope = 0.0;
  if (j.rho == 0.0) {
    if (j.u == 0.0) {
      throw ClassificationError("[rho] = [u] = 0: no concentration possible");
    }
    u_delta = 0.5 * (left.u + right.u) + params.s * params.s * j.v / (2.0 * left.rho * j.u);
    w_slope = left.rho * j.u;
  } else {
    const double d = j.rho_u * j.rho_u - j.rho * j.momentum_flux;
    if (!(d > 0.0)) {
      throw InconsistencyError("delta-shock discriminant is not positive");
    }
    const double root = std::sqrt(d);
    // ([rho u] - sqrt(D)) / [rho], rationalized when the difference would cancel.
    u_delta = j.rho_u > 0.0 ? j.momentum_flux / (j.rho_u + root) : (j.rho_u - root) / j.rho;
    w_slope = root;
  }
  if (!(w_slope > 0.0)) {
    throw InconsistencyError("delta-shock weight does not grow");
  }

  // Round-off can push a speed sitting on the admissibility boundary just outside it.
  const double slack = 1e-13 * std::max({std::abs(l1), std::abs(l3), 1.0});
  if (u_delta > l1 && u_delta <= l1 + slack) u_delta = l1;
  if (u_delta < l3 && u_delta >= l3 - slack) u_delta = l3;

  const double g = (-j.rho_v * u_delta + j.pressure_flux) / w_slope;
  DeltaShockWave wave{u_delta, w_slope, g};
  if (!entropy_check(wave, left, right, params)) {
    throw ClassificationError("no admissible delta shock: selected speed violates the entropy "
                              "condition");
  }
  return wave;
}

std::array<double, 4> grh_residual(const DeltaShockWave& wave, const PrimitiveState& left,
                                   const PrimitiveState& right, const Params& params, double t) {
  if (!(t > 0.0)) {
    throw ArgumentError("generalized Rankine-Hugoniot residual needs t > 0");
  }
  const Jumps j = jumps(left, right, params);
  const double ud = wave.u_delta;
  // d/dt of x = u_delta t, w = w_slope t, w u_delta, w g.
  const double dx = wave.u_delta;
  const double dw = wave.w_slope;
  const double dwu = wave.w_slope * ud;
  const double dwg = wave.w_slope * wave.g;
  return {dx - ud, dw - (-j.rho * ud + j.rho_u), dwu - (-j.rho_u * ud + j.momentum_flux),
          dwg - (-j.rho_v * ud + j.pressure_flux)};
}

std::array<double, 4> grh_integrated_residual(const DeltaShockWave& wave,
                                              const PrimitiveState& left,
                                              const PrimitiveState& right, const Params& params,
                                              double t) {
  if (!(t > 0.0)) {
    throw ArgumentError("generalized Rankine-Hugoniot residual needs t > 0");
  }
  const Jumps j = jumps(left, right, params);
  const double x = wave.position(t);
  const double w = wave.weight(t);
  return {x - wave.u_delta * t, w - (-j.rho * x + j.rho_u * t),
          w * wave.u_delta - (-j.rho_u * x + j.momentum_flux * t),
          w * wave.g - (-j.rho_v * x + j.pressure_flux * t)};
}

std::array<double, 3> measure_solution_residual(const DeltaShockWave& wave,
                                                const PrimitiveState& left,
                                                const PrimitiveState& right,
                                                const Params& params, const TestFunction& phi,
                                                int panels) {
  const auto& box = phi.support;
  const double t_lo = std::max(box.t_min, 0.0);

  // Integrals of phi_t and phi_x over the part of the support left / right of the path.
  auto region = [&](const std::function<double(double, double)>& f, bool left_side) {
    return gauss_integrate(
        [&](double t) {
          const double path = wave.position(t);
          const double lo = left_side ? box.x_min : std::max(box.x_min, path);
          const double hi = left_side ? std::min(box.x_max, path) : box.x_max;
          return gauss_integrate([&](double x) { return f(t, x); }, lo, hi, panels);
        },
        t_lo, box.t_max, panels);
  };
  const double lt = region(phi.dt, true), lx = region(phi.dx, true);
  const double rt = region(phi.dt, false), rx = region(phi.dx, false);

  // Concentrated part: w(t) (phi_t + u_delta phi_x) along the path.
  const double along = gauss_integrate(
      [&](double t) {
        const double x = wave.position(t);
        return wave.weight(t) * (phi.dt(t, x) + wave.u_delta * phi.dx(t, x));
      },
      t_lo, box.t_max, panels);

  const double s2 = params.s * params.s;
  auto side = [&](const PrimitiveState& p, double it, double ix) {
    // Contributions of a constant state to I1, I2, I3.
    return std::array<double, 3>{
        p.rho * (it + p.u * ix),
        p.rho * p.u * (it + p.u * ix) + s2 * p.v * ix,
        p.rho * p.v * (it + p.u * ix) + p.u * ix,
    };
  };
  const auto a = side(left, lt, lx);
  const auto b = side(right, rt, rx);
  return {a[0] + b[0] + along, a[1] + b[1] + wave.u_delta * along,
          a[2] + b[2] + wave.g * along};
}

}  // namespace templeflow
