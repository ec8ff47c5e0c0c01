#pragma once

#include <functional>
#include <span>
#include <vector>

#include "templeflow/core.hpp"
#include "templeflow/entropy.hpp"
#include "templeflow/quadrature.hpp"

namespace templeflow {

/// Constant state on [x_begin, x_end).
struct Segment {
  double x_begin;
  double x_end;
  PrimitiveState state;
};

/// Initial data on a finite window, extended by its boundary values outside.
/// Either contiguous piecewise-constant segments (right-limit at the breaks) or
/// uniform samples on [x_min, x_max] interpolated linearly.
class InitialData {
 public:
  static InitialData piecewise_constant(std::vector<Segment> segments);
  static InitialData sampled(double x_min, double x_max, std::vector<PrimitiveState> samples);
  /// Two states separated at x = 0 on the window [-half_width, half_width].
  static InitialData riemann(const PrimitiveState& left, const PrimitiveState& right,
                             double half_width = 1.0);

  PrimitiveState at(double x) const;

  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  bool is_piecewise_constant() const { return !segments_.empty(); }
  const std::vector<Segment>& segments() const { return segments_; }
  const std::vector<PrimitiveState>& samples() const { return samples_; }

  /// Segment boundaries or sample positions, ascending.
  std::vector<double> nodes() const;
  /// The states the data is built from, ordered by position.
  std::vector<PrimitiveState> states() const;

 private:
  InitialData() = default;

  double x_min_ = 0.0;
  double x_max_ = 0.0;
  std::vector<Segment> segments_;
  std::vector<PrimitiveState> samples_;
};

/// Tabulated Euler-Lagrange map Y0(x) = int_0^x rho0 and its inverse X0, together
/// with the cumulative integrals of rho0 u0 and rho0 v0 used by the position formula.
/// Piecewise linear between table nodes, extended linearly outside the window.
class LagrangianMap {
 public:
  LagrangianMap(const InitialData& data, int resolution);

  double lagrangian_coordinate(double x) const;  // Y0(x)
  double eulerian_coordinate(double y) const;    // X0(y)
  /// int_0^y u0(X0(xi)) dxi
  double velocity_integral(double y) const;
  /// int_0^y v0(X0(xi)) dxi
  double pressure_integral(double y) const;

  /// Uniform spacing of the resolution grid.
  double spacing() const { return spacing_; }
  std::span<const double> x_nodes() const { return x_; }
  std::span<const double> y_nodes() const { return y_; }

 private:
  // Linear interpolation of `values` at Eulerian position x, with constant-slope extension.
  double at_x(const std::vector<double>& values, double x, double slope_left,
              double slope_right) const;

  std::vector<double> x_;
  std::vector<double> y_;
  std::vector<double> rho_u_;  // int_0^x rho0 u0
  std::vector<double> rho_v_;  // int_0^x rho0 v0
  PrimitiveState left_, right_;
  double spacing_ = 0.0;
};

LagrangianMap build_lagrangian_map(const InitialData& data, int resolution);

using LagrangianData = std::function<LagrangianState(double y)>;

/// Explicit solution of the linear Lagrangian system at (t, y).
LagrangianState lagrangian_solution(const LagrangianData& initial, const Params& params,
                                    double t, double y);

/// Position X(t, y) of the particle with Lagrangian label y.
double eulerian_position(const LagrangianMap& map, const Params& params, double t, double y);

/// Global Cauchy solver built on the Euler-Lagrange transformation. Construction
/// checks H1, H2 and the gap condition on the data and throws PreconditionError
/// naming the failed conditions.
class CauchySolver {
 public:
  CauchySolver(InitialData data, const Params& params, const Hypotheses& hypotheses,
               int resolution = 4096);

  const InitialData& data() const { return data_; }
  const LagrangianMap& map() const { return map_; }
  const Params& params() const { return params_; }

  LagrangianState lagrangian_initial(double y) const;
  LagrangianState lagrangian(double t, double y) const;
  double eulerian_position(double t, double y) const;
  /// y = Y(t, x) by bisection on the monotone map y -> X(t, y).
  double lagrangian_coordinate(double t, double x) const;
  PrimitiveState solve(double t, double x) const;

 private:
  InitialData data_;
  Params params_;
  LagrangianMap map_;
};

PrimitiveState solve_cauchy(const InitialData& data, const Params& params,
                            const Hypotheses& hypotheses, double t, double x,
                            int resolution = 4096);

/// Weak entropy residual of the Cauchy solution over `box` (see entropy_weak_residual).
double entropy_residual_on_solution(const CauchySolver& solver, const EntropyPair& pair,
                                    const SpaceTimeBox& box, int mesh);

}  // namespace templeflow
