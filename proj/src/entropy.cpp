#include "templeflow/entropy.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "templeflow/errors.hpp"

namespace templeflow {

EntropyPair EntropyPair::zero() {
  auto z = [](double) { return 0.0; };
  return {z, z, z, z, z, z};
}

EntropyPair quadratic_pair(const QuadraticGenerator& f, const QuadraticGenerator& g,
                           const QuadraticGenerator& h) {
  return {f,
          g,
          h,
          [f](double x) { return f.derivative(x); },
          [g](double x) { return g.derivative(x); },
          [h](double x) { return h.derivative(x); }};
}

double entropy_value(const PrimitiveState& p, const Params& params, const EntropyPair& pair) {
  const double s = params.s;
  return p.rho * (pair.F(p.u + s * p.v) + pair.G(p.u - s * p.v) + pair.H(p.v + 1.0 / p.rho));
}

double entropy_flux(const PrimitiveState& p, const Params& params, const EntropyPair& pair) {
  const double s = params.s;
  const double m = p.rho * p.u;
  return (m + s) * pair.F(p.u + s * p.v) + (m - s) * pair.G(p.u - s * p.v) +
         m * pair.H(p.v + 1.0 / p.rho);
}

LagrangianPairValue lagrangian_pair(const LagrangianState& state, const Params& params,
                                    const EntropyPair& pair) {
  if (!(state.omega > 0.0)) {
    throw DomainError("Lagrangian specific volume must be positive");
  }
  const double s = params.s;
  const double fp = pair.F(state.nu + s * state.kappa);
  const double gm = pair.G(state.nu - s * state.kappa);
  return {fp + gm + pair.H(state.omega + state.kappa), s * fp - s * gm};
}

double entropy_weak_residual(const SolutionSampler& solution, const Params& params,
                             const EntropyPair& pair, const SpaceTimeBox& box, int mesh) {
  if (mesh < 1) {
    throw ArgumentError("entropy residual needs a positive mesh size");
  }
  const TestFunction phi = make_bump(box);
  const double ht = (box.t_max - box.t_min) / mesh;
  const double hx = (box.x_max - box.x_min) / mesh;
  double sum = 0.0;
  for (int i = 0; i < mesh; ++i) {
    const double t = box.t_min + (i + 0.5) * ht;
    double row = 0.0;
    for (int k = 0; k < mesh; ++k) {
      const double x = box.x_min + (k + 0.5) * hx;
      const double pt = phi.dt(t, x);
      const double px = phi.dx(t, x);
      if (pt == 0.0 && px == 0.0) continue;
      const PrimitiveState p = solution(t, x);
      row += entropy_value(p, params, pair) * pt + entropy_flux(p, params, pair) * px;
    }
    sum += row;
  }
  return sum * ht * hx;
}

double entropy_weak_residual(const WaveFan& fan, const Params& params, const EntropyPair& pair,
                             const SpaceTimeBox& box, int mesh) {
  if (mesh < 1) {
    throw ArgumentError("entropy residual needs a positive mesh size");
  }
  if (box.t_min <= 0.0) {
    throw ArgumentError("fan residual box must start at t > 0");
  }
  const TestFunction phi = make_bump(box);
  const double width = box.x_max - box.x_min;
  const double ht = (box.t_max - box.t_min) / mesh;
  // Edge k of wedge k is edge(k), wedge k spans [edge(k), edge(k + 1)].
  const auto edge = [&](int k, double t) {
    if (k == 0) return box.x_min;
    if (k == 4) return box.x_max;
    return std::clamp(fan.speeds[static_cast<std::size_t>(k - 1)] * t, box.x_min, box.x_max);
  };
  const std::array<const PrimitiveState*, 4> states{&fan.left, &fan.star, &fan.star2, &fan.right};
  std::array<int, 4> points{};
  std::array<double, 4> eta{}, flux{};
  for (int k = 0; k < 4; ++k) {
    const double widest = std::max(edge(k + 1, box.t_min) - edge(k, box.t_min),
                                   edge(k + 1, box.t_max) - edge(k, box.t_max));
    const auto ku = static_cast<std::size_t>(k);
    points[ku] = std::max(2, static_cast<int>(std::ceil(mesh * widest / width)));
    eta[ku] = entropy_value(*states[ku], params, pair);
    flux[ku] = entropy_flux(*states[ku], params, pair);
  }

  double sum = 0.0;
  for (int j = 0; j < mesh; ++j) {
    const double t = box.t_min + (j + 0.5) * ht;
    double row = 0.0;
    for (int k = 0; k < 4; ++k) {
      const double a = edge(k, t);
      const double b = edge(k + 1, t);
      if (b <= a) continue;
      const auto ku = static_cast<std::size_t>(k);
      const double hx = (b - a) / points[ku];
      double wedge = 0.0;
      for (int i = 0; i < points[ku]; ++i) {
        const double x = a + (i + 0.5) * hx;
        wedge += eta[ku] * phi.dt(t, x) + flux[ku] * phi.dx(t, x);
      }
      row += wedge * hx;
    }
    sum += row;
  }
  return sum * ht;
}

std::vector<EntropyPair> builtin_pairs() {
  return {quadratic_pair({1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}),
          quadratic_pair({1.0, 0.2}, {0.5, -0.3}, {2.0, 0.5}),
          quadratic_pair({0.3, 1.0}, {2.0, -1.0}, {0.1, 0.0})};
}

}  // namespace templeflow
