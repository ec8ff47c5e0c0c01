#pragma once

#include <array>
#include <span>
#include <string>

namespace templeflow {

using Vec3 = std::array<double, 3>;

/// Stress constant s of the model; must be strictly positive.
struct Params {
  double s;

  explicit Params(double s_value);
};

/// Working state (rho, u, v): layer depth, velocity and relaxed pressure / s^2.
/// Construction rejects rho <= 0 (and NaN): vacuum is not supported.
struct PrimitiveState {
  double rho;
  double u;
  double v;

  PrimitiveState(double rho_value, double u_value, double v_value);

  bool operator==(const PrimitiveState&) const = default;
};

/// Conservative variables (rho, m, n) = (rho, rho u, rho v).
struct ConservedState {
  double rho;
  double m;
  double n;

  ConservedState(double rho_value, double m_value, double n_value);

  bool operator==(const ConservedState&) const = default;
};

/// State in Lagrangian coordinates: omega = 1/rho, nu = u, kappa = v.
struct LagrangianState {
  double omega;
  double nu;
  double kappa;
};

/// (lambda1, lambda2, lambda3) = (u - s/rho, u, u + s/rho), strictly increasing.
using Eigenvalues = std::array<double, 3>;

struct RiemannInvariants {
  double R1;  // s^2 v - s u
  double R2;  // v + 1/rho
  double R3;  // s^2 v + s u
};

ConservedState to_conserved(const PrimitiveState& p);
PrimitiveState to_primitive(const ConservedState& c);

Eigenvalues eigenvalues(const PrimitiveState& p, const Params& params);
Eigenvalues eigenvalues(const ConservedState& c, const Params& params);

inline double lambda1(const PrimitiveState& p, const Params& params) { return p.u - params.s / p.rho; }
inline double lambda3(const PrimitiveState& p, const Params& params) { return p.u + params.s / p.rho; }

RiemannInvariants riemann_invariants(const PrimitiveState& p, const Params& params);

/// Eigenvalues written in terms of the Riemann invariants:
/// (R3/s - s R2, (R3 - R1)/(2s), s R2 - R1/s).
Eigenvalues eigenvalues_from_invariants(const RiemannInvariants& r, const Params& params);

/// Unit right eigenvectors of the flux Jacobian in conserved variables,
/// indexed by family: r1 ~ (rho, m-s, n+1), r2 ~ (rho, m, n), r3 ~ (rho, m+s, n+1).
std::array<Vec3, 3> right_eigenvectors(const ConservedState& c, const Params& params);

/// Bounds on the initial data: c1 <= u - s v <= c2, c3 <= u + s v <= c4,
/// v + 1/rho > c5, and a total-variation budget for u -+ s v.
class Hypotheses {
 public:
  Hypotheses(double c1, double c2, double c3, double c4, double c5, double tv_bound,
             const Params& params);

  double c1() const { return c1_; }
  double c2() const { return c2_; }
  double c3() const { return c3_; }
  double c4() const { return c4_; }
  double c5() const { return c5_; }
  double tv_bound() const { return tv_bound_; }

 private:
  double c1_, c2_, c3_, c4_, c5_, tv_bound_;
};

struct HypothesisReport {
  bool h1_ok = false;
  bool h2_ok = false;
  bool gap_ok = false;

  bool all() const { return h1_ok && h2_ok && gap_ok; }
  /// Comma separated names of the failed conditions ("H1", "H2", "gap").
  std::string failures() const;
};

/// Checks H1, H2 and the gap condition min(u + s/rho) > max(u - s/rho) on
/// samples of the initial data, ordered by position. Total variation is the
/// sum of absolute successive differences.
HypothesisReport check_hypotheses(std::span<const PrimitiveState> samples, const Hypotheses& h,
                                  const Params& params);

}  // namespace templeflow
