#include "templeflow/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>

#include "templeflow/errors.hpp"

namespace templeflow {

double gauss_integrate(const std::function<double(double)>& f, double a, double b, int panels) {
  if (panels < 1) {
    throw ArgumentError("quadrature needs at least one panel");
  }
  if (!(b > a)) {
    return 0.0;
  }
  const double h = (b - a) / panels;
  double sum = 0.0;
  for (int k = 0; k < panels; ++k) {
    const double lo = a + k * h;
    const double hi = (k + 1 == panels) ? b : lo + h;
    sum += boost::math::quadrature::gauss<double, 10>::integrate(f, lo, hi);
  }
  return sum;
}

namespace {

double bump(double z) {
  if (std::abs(z) >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - z * z));
}

double bump_derivative(double z) {
  if (std::abs(z) >= 1.0) return 0.0;
  const double q = 1.0 - z * z;
  return std::exp(-1.0 / q) * (-2.0 * z / (q * q));
}

}  // namespace

TestFunction make_bump(const SpaceTimeBox& box) {
  if (!(box.t_max > box.t_min) || !(box.x_max > box.x_min)) {
    throw ArgumentError("test-function box must have positive extent");
  }
  const double tc = 0.5 * (box.t_min + box.t_max);
  const double ht = 0.5 * (box.t_max - box.t_min);
  const double xc = 0.5 * (box.x_min + box.x_max);
  const double hx = 0.5 * (box.x_max - box.x_min);
  TestFunction phi;
  phi.support = box;
  phi.value = [=](double t, double x) { return bump((t - tc) / ht) * bump((x - xc) / hx); };
  phi.dt = [=](double t, double x) {
    return bump_derivative((t - tc) / ht) / ht * bump((x - xc) / hx);
  };
  phi.dx = [=](double t, double x) {
    return bump((t - tc) / ht) * bump_derivative((x - xc) / hx) / hx;
  };
  return phi;
}

}  // namespace templeflow
