#include "templeflow/riemann.hpp"

#include <algorithm>
#include <cmath>

#include "templeflow/delta_shock.hpp"

namespace templeflow {

std::string_view to_string(RiemannKind kind) {
  switch (kind) {
    case RiemannKind::Classical:
      return "Classical";
    case RiemannKind::DeltaShock:
      return "DeltaShock";
    case RiemannKind::DegenerateNoSolution:
      return "DegenerateNoSolution";
  }
  return "Unknown";
}

WrongRegimeError::WrongRegimeError(RiemannKind actual, const std::string& what)
    : ClassificationError(what + " (classified as " + std::string(to_string(actual)) + ")"),
      actual_(actual) {}

PrimitiveState contact_curve(int family, const PrimitiveState& base, double rho,
                             const Params& params) {
  const double s = params.s;
  switch (family) {
    case 1:
      return {rho, base.u - s / base.rho + s / rho, base.v + 1.0 / base.rho - 1.0 / rho};
    case 2:
      return {rho, base.u, base.v};
    case 3:
      return {rho, base.u + s / base.rho - s / rho, base.v + 1.0 / base.rho - 1.0 / rho};
    default:
      throw ArgumentError("wave family must be 1, 2 or 3");
  }
}

StarStates intermediate_states(const PrimitiveState& left, const PrimitiveState& right,
                               const Params& params) {
  const double s = params.s;
  const double l1 = lambda1(left, params);
  const double l3 = lambda3(right, params);
  if (!(l1 < l3)) {
    throw ClassificationError("intermediate states need lambda1(Ul) < lambda3(Ur)");
  }
  const double dR2 = riemann_invariants(right, params).R2 - riemann_invariants(left, params).R2;
  const double spread = (l3 - l1) / (2.0 * s);
  const double inv_star = spread - 0.5 * dR2;
  const double inv_star2 = spread + 0.5 * dR2;
  if (!(inv_star > 0.0) || !(inv_star2 > 0.0)) {
    throw ClassificationError("inconsistent input: intermediate density is not positive");
  }
  const double w_left = left.u + s * left.v;    // carried by the 1-contact
  const double w_right = right.u - s * right.v;  // carried by the 3-contact
  const double u_mid = 0.5 * (w_left + w_right);
  const double v_mid = (w_left - w_right) / (2.0 * s);
  return {PrimitiveState{1.0 / inv_star, u_mid, v_mid},
          PrimitiveState{1.0 / inv_star2, u_mid, v_mid}};
}

bool gap_lemma_check(const PrimitiveState& left, const PrimitiveState& right,
                     const Params& params) {
  const double dR2 = riemann_invariants(right, params).R2 - riemann_invariants(left, params).R2;
  return std::abs(dR2) < (lambda3(right, params) - lambda1(left, params)) / params.s;
}

namespace {

bool nearly_equal(double a, double b, double scale) {
  return std::abs(a - b) <= 1e-12 * std::max({std::abs(a), std::abs(b), scale});
}

}  // namespace

bool is_parallel_degenerate(const PrimitiveState& left, const PrimitiveState& right,
                            const Params& params) {
  const double l1 = lambda1(left, params);
  const double l3 = lambda3(right, params);
  const double speed_scale = params.s / std::min(left.rho, right.rho);
  const auto cl = to_conserved(left);
  const auto cr = to_conserved(right);
  return nearly_equal(l1, l3, speed_scale) && nearly_equal(left.rho, right.rho, 0.0) &&
         nearly_equal(cl.n, cr.n, std::min(left.rho, right.rho));
}

RiemannKind classify(const PrimitiveState& left, const PrimitiveState& right,
                     const Params& params) {
  if (is_parallel_degenerate(left, right, params)) {
    return RiemannKind::DegenerateNoSolution;
  }
  if (lambda1(left, params) < lambda3(right, params)) {
    // Without the gap the intermediate densities would be non-positive.
    return gap_lemma_check(left, right, params) ? RiemannKind::Classical
                                                : RiemannKind::DegenerateNoSolution;
  }
  if (left.rho == right.rho && left.u == right.u) {
    return RiemannKind::DegenerateNoSolution;
  }
  return delta_condition_check(left, right, params) ? RiemannKind::DeltaShock
                                                    : RiemannKind::DegenerateNoSolution;
}

WaveFan solve_classical(const PrimitiveState& left, const PrimitiveState& right,
                        const Params& params) {
  const RiemannKind kind = classify(left, right, params);
  if (kind != RiemannKind::Classical) {
    throw WrongRegimeError(kind, "classical solver called on non-classical data");
  }
  const auto [star, star2] = intermediate_states(left, right, params);
  return WaveFan{left, star, star2, right,
                 {lambda1(left, params), star.u, lambda3(right, params)}};
}

PrimitiveState sample_fan(const WaveFan& fan, double t, double x) {
  if (!(t > 0.0)) {
    throw ArgumentError("fan sampling needs t > 0");
  }
  const double xi = x / t;
  if (xi < fan.speeds[0]) return fan.left;
  if (xi < fan.speeds[1]) return fan.star;
  if (xi < fan.speeds[2]) return fan.star2;
  return fan.right;
}

Vec3 rh_residual(const PrimitiveState& left, const PrimitiveState& right, double sigma,
                 const Params& params) {
  const double s2 = params.s * params.s;
  auto mass = [](const PrimitiveState& p) { return p.rho; };
  auto momentum = [](const PrimitiveState& p) { return p.rho * p.u; };
  auto momentum_flux = [s2](const PrimitiveState& p) { return p.rho * p.u * p.u + s2 * p.v; };
  auto pressure_density = [](const PrimitiveState& p) { return p.rho * p.v; };
  auto pressure_flux = [](const PrimitiveState& p) { return p.rho * p.u * p.v + p.u; };
  auto jump = [&](auto q) { return q(left) - q(right); };
  return {-sigma * jump(mass) + jump(momentum), -sigma * jump(momentum) + jump(momentum_flux),
          -sigma * jump(pressure_density) + jump(pressure_flux)};
}

}  // namespace templeflow
