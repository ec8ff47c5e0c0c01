#pragma once

#include <string>
#include <string_view>

#include "templeflow/core.hpp"
#include "templeflow/errors.hpp"

namespace templeflow {

enum class RiemannKind { Classical, DeltaShock, DegenerateNoSolution };

std::string_view to_string(RiemannKind kind);

/// Classical Riemann solution: four constant states separated by three
/// contact discontinuities travelling at speeds[0] <= speeds[1] <= speeds[2].
struct WaveFan {
  PrimitiveState left;
  PrimitiveState star;
  PrimitiveState star2;
  PrimitiveState right;
  Vec3 speeds;
};

struct StarStates {
  PrimitiveState star;
  PrimitiveState star2;
};

/// State reached from `base` along the i-contact curve (i = 1, 2, 3) at density rho.
PrimitiveState contact_curve(int family, const PrimitiveState& base, double rho,
                             const Params& params);

/// Intermediate states U*, U** of the classical solution.
/// Requires lambda1(Ul) < lambda3(Ur); throws ClassificationError otherwise or
/// when either intermediate density would be non-positive.
StarStates intermediate_states(const PrimitiveState& left, const PrimitiveState& right,
                               const Params& params);

/// |R2(Ur) - R2(Ul)| < (lambda3(Ur) - lambda1(Ul)) / s.
bool gap_lemma_check(const PrimitiveState& left, const PrimitiveState& right,
                     const Params& params);

/// True for the parallel-curve configuration lambda1(Ul) = lambda3(Ur) with
/// rho_l = rho_r and n_l = n_r (relative tolerance 1e-12).
bool is_parallel_degenerate(const PrimitiveState& left, const PrimitiveState& right,
                            const Params& params);

RiemannKind classify(const PrimitiveState& left, const PrimitiveState& right,
                     const Params& params);

/// Thrown by solve_classical when the data is not in the classical regime.
class WrongRegimeError : public ClassificationError {
 public:
  WrongRegimeError(RiemannKind actual, const std::string& what);
  RiemannKind actual() const { return actual_; }

 private:
  RiemannKind actual_;
};

WaveFan solve_classical(const PrimitiveState& left, const PrimitiveState& right,
                        const Params& params);

/// Self-similar sampling with half-open intervals:
/// left for x/t < s1, star for s1 <= x/t < s2, star2 for s2 <= x/t < s3, right otherwise.
PrimitiveState sample_fan(const WaveFan& fan, double t, double x);

/// Rankine-Hugoniot residual (-sigma[rho] + [rho u], -sigma[rho u] + [rho u^2 + s^2 v],
/// -sigma[rho v] + [rho u v + u]) with [q] = q_left - q_right.
Vec3 rh_residual(const PrimitiveState& left, const PrimitiveState& right, double sigma,
                 const Params& params);

}  // namespace templeflow
