#include "templeflow/core.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

#include "templeflow/errors.hpp"

namespace templeflow {

Params::Params(double s_value) : s(s_value) {
  if (!(s_value > 0.0) || !std::isfinite(s_value)) {
    throw ArgumentError("stress constant s must be positive and finite");
  }
}

PrimitiveState::PrimitiveState(double rho_value, double u_value, double v_value)
    : rho(rho_value), u(u_value), v(v_value) {
  if (!(rho_value > 0.0)) {
    throw DomainError("non-positive density (vacuum is not supported)");
  }
}

ConservedState::ConservedState(double rho_value, double m_value, double n_value)
    : rho(rho_value), m(m_value), n(n_value) {
  if (!(rho_value > 0.0)) {
    throw DomainError("non-positive density (vacuum is not supported)");
  }
}

ConservedState to_conserved(const PrimitiveState& p) { return {p.rho, p.rho * p.u, p.rho * p.v}; }

PrimitiveState to_primitive(const ConservedState& c) { return {c.rho, c.m / c.rho, c.n / c.rho}; }

Eigenvalues eigenvalues(const PrimitiveState& p, const Params& params) {
  const double c = params.s / p.rho;
  return {p.u - c, p.u, p.u + c};
}

Eigenvalues eigenvalues(const ConservedState& c, const Params& params) {
  return {(c.m - params.s) / c.rho, c.m / c.rho, (c.m + params.s) / c.rho};
}

RiemannInvariants riemann_invariants(const PrimitiveState& p, const Params& params) {
  const double s = params.s;
  const double s2v = s * s * p.v;
  RiemannInvariants r{s2v - s * p.u, p.v + 1.0 / p.rho, s2v + s * p.u};
  assert(std::abs((r.R3 - r.R1) - 2.0 * s * p.u) <=
         1e-12 * std::max({1.0, std::abs(s2v), std::abs(s * p.u)}));
  return r;
}

Eigenvalues eigenvalues_from_invariants(const RiemannInvariants& r, const Params& params) {
  const double s = params.s;
  return {r.R3 / s - s * r.R2, (r.R3 - r.R1) / (2.0 * s), s * r.R2 - r.R1 / s};
}

namespace {

Vec3 normalized(const Vec3& d) {
  const double len = std::hypot(d[0], d[1], d[2]);
  if (!(len > 0.0)) {
    throw DomainError("zero-length eigenvector direction");
  }
  return {d[0] / len, d[1] / len, d[2] / len};
}

double total_variation(std::span<const PrimitiveState> samples, double sign, double s) {
  double tv = 0.0;
  for (std::size_t i = 1; i < samples.size(); ++i) {
    const double a = samples[i - 1].u + sign * s * samples[i - 1].v;
    const double b = samples[i].u + sign * s * samples[i].v;
    tv += std::abs(b - a);
  }
  return tv;
}

}  // namespace

std::array<Vec3, 3> right_eigenvectors(const ConservedState& c, const Params& params) {
  const double s = params.s;
  return {normalized({c.rho, c.m - s, c.n + 1.0}), normalized({c.rho, c.m, c.n}),
          normalized({c.rho, c.m + s, c.n + 1.0})};
}

Hypotheses::Hypotheses(double c1, double c2, double c3, double c4, double c5, double tv_bound,
                       const Params& params)
    : c1_(c1), c2_(c2), c3_(c3), c4_(c4), c5_(c5), tv_bound_(tv_bound) {
  if (!(c1 <= c2)) throw ArgumentError("hypotheses require c1 <= c2");
  if (!(c3 <= c4)) throw ArgumentError("hypotheses require c3 <= c4");
  if (!(c5 - (c4 - c1) / (2.0 * params.s) > 0.0)) {
    throw ArgumentError("hypotheses require c5 - (c4 - c1)/(2s) > 0");
  }
  if (!(tv_bound > 0.0)) throw ArgumentError("total variation bound must be positive");
}

std::string HypothesisReport::failures() const {
  std::string out;
  auto add = [&out](const char* name) {
    if (!out.empty()) out += ", ";
    out += name;
  };
  if (!h1_ok) add("H1");
  if (!h2_ok) add("H2");
  if (!gap_ok) add("gap");
  return out;
}

HypothesisReport check_hypotheses(std::span<const PrimitiveState> samples, const Hypotheses& h,
                                  const Params& params) {
  if (samples.empty()) {
    throw ArgumentError("hypothesis check needs at least one sample");
  }
  const double s = params.s;
  HypothesisReport report;

  report.h1_ok = std::all_of(samples.begin(), samples.end(), [&](const PrimitiveState& p) {
    const double minus = p.u - s * p.v;
    const double plus = p.u + s * p.v;
    return h.c1() <= minus && minus <= h.c2() && h.c3() <= plus && plus <= h.c4() &&
           p.v + 1.0 / p.rho > h.c5();
  });

  report.h2_ok = total_variation(samples, -1.0, s) <= h.tv_bound() &&
                 total_variation(samples, +1.0, s) <= h.tv_bound();

  double min_fast = std::numeric_limits<double>::infinity();
  double max_slow = -std::numeric_limits<double>::infinity();
  for (const auto& p : samples) {
    min_fast = std::min(min_fast, lambda3(p, params));
    max_slow = std::max(max_slow, lambda1(p, params));
  }
  report.gap_ok = min_fast > max_slow;
  return report;
}

}  // namespace templeflow
