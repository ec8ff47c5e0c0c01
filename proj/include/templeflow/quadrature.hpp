#pragma once

#include <functional>

namespace templeflow {

/// Composite 10-point Gauss-Legendre rule on [a, b] with `panels` equal panels.
double gauss_integrate(const std::function<double(double)>& f, double a, double b, int panels);

/// Axis-aligned space-time box [t_min, t_max] x [x_min, x_max].
struct SpaceTimeBox {
  double t_min;
  double t_max;
  double x_min;
  double x_max;
};

/// Smooth test function phi(t, x) with compact support inside `support`,
/// together with its partial derivatives.
struct TestFunction {
  std::function<double(double, double)> value;
  std::function<double(double, double)> dt;
  std::function<double(double, double)> dx;
  SpaceTimeBox support;
};

/// Tensor product of C-infinity bumps exp(-1/(1-z^2)) filling `box`.
TestFunction make_bump(const SpaceTimeBox& box);

}  // namespace templeflow
