#pragma once

#include <functional>
#include <vector>

#include "templeflow/cauchy.hpp"
#include "templeflow/core.hpp"

namespace templeflow {

/// Uniform grid of cell averages on [x_min, x_max].
class Grid {
 public:
  Grid(double x_min, double x_max, std::vector<ConservedState> cells);

  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  int n_cells() const { return static_cast<int>(cells_.size()); }
  double dx() const { return (x_max_ - x_min_) / n_cells(); }
  double center(int i) const { return x_min_ + (i + 0.5) * dx(); }

  const std::vector<ConservedState>& cells() const { return cells_; }
  const ConservedState& operator[](int i) const { return cells_[static_cast<std::size_t>(i)]; }

  /// Sum of cell averages times dx, per component.
  Vec3 totals() const;

 private:
  double x_min_;
  double x_max_;
  std::vector<ConservedState> cells_;
};

/// Physical flux (m, m^2/rho + s^2 n/rho, m n/rho + m/rho).
Vec3 flux(const ConservedState& c, const Params& params);

/// max over cells of |u| + s/rho.
double max_wave_speed(const Grid& grid, const Params& params);

/// Cell averages of the initial data (exact for piecewise-constant data, midpoint otherwise).
Grid project(const InitialData& data, int n_cells);

/// One global Lax-Friedrichs (Rusanov with alpha = max |lambda| over the grid) step with
/// outflow boundaries. Throws ArgumentError if dt exceeds cfl_limit dx / max|lambda|,
/// BreakdownError if a density becomes non-positive.
Grid lax_friedrichs_step(const Grid& grid, double dt, const Params& params,
                         double cfl_limit = 0.5);

/// Relative defect of discrete conservation over one step: the change of the
/// totals minus the net boundary flux, divided by the size of the totals.
double conservation_defect(const Grid& before, const Grid& after, double dt,
                           const Params& params);

struct SimulationResult {
  Grid grid;
  int steps = 0;
  double max_conservation_defect = 0.0;
};

SimulationResult simulate(const InitialData& data, double t_end, int n_cells, double cfl,
                          const Params& params);

using ExactSampler = std::function<PrimitiveState(double x)>;

/// L1 distance of all three conserved components against cell-midpoint samples.
double l1_error(const Grid& grid, const ExactSampler& exact);

/// L1 distance between two grids on the same window; the finer grid is averaged
/// onto the coarser one (cell counts must divide).
double l1_error(const Grid& a, const Grid& b);

/// Integral of (rho - background(x)) dx over cells whose centers lie in [lo, hi].
double windowed_excess_mass(const Grid& grid, const std::function<double(double)>& background,
                            double lo, double hi);

}  // namespace templeflow
