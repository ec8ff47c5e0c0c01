#include "templeflow/fv_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "templeflow/errors.hpp"

namespace templeflow {

Grid::Grid(double x_min, double x_max, std::vector<ConservedState> cells)
    : x_min_(x_min), x_max_(x_max), cells_(std::move(cells)) {
  if (!(x_max > x_min)) throw ArgumentError("grid window must be nonempty");
  if (cells_.size() < 4) throw ArgumentError("grid needs at least 4 cells");
}

Vec3 Grid::totals() const {
  Vec3 sum{0.0, 0.0, 0.0};
  for (const auto& c : cells_) {
    sum[0] += c.rho;
    sum[1] += c.m;
    sum[2] += c.n;
  }
  const double h = dx();
  return {sum[0] * h, sum[1] * h, sum[2] * h};
}

Vec3 flux(const ConservedState& c, const Params& params) {
  const double u = c.m / c.rho;
  const double s2 = params.s * params.s;
  return {c.m, c.m * u + s2 * c.n / c.rho, u * c.n + u};
}

double max_wave_speed(const Grid& grid, const Params& params) {
  double a = 0.0;
  for (const auto& c : grid.cells()) {
    a = std::max(a, std::abs(c.m / c.rho) + params.s / c.rho);
  }
  return a;
}

Grid project(const InitialData& data, int n_cells) {
  if (n_cells < 4) throw ArgumentError("grid needs at least 4 cells");
  const double a = data.x_min();
  const double b = data.x_max();
  const double h = (b - a) / n_cells;
  std::vector<ConservedState> cells;
  cells.reserve(static_cast<std::size_t>(n_cells));
  for (int i = 0; i < n_cells; ++i) {
    const double lo = a + i * h;
    const double hi = lo + h;
    if (!data.is_piecewise_constant()) {
      cells.push_back(to_conserved(data.at(0.5 * (lo + hi))));
      continue;
    }
    Vec3 sum{0.0, 0.0, 0.0};
    for (const auto& seg : data.segments()) {
      const double overlap = std::min(hi, seg.x_end) - std::max(lo, seg.x_begin);
      if (overlap <= 0.0) continue;
      const auto c = to_conserved(seg.state);
      sum[0] += c.rho * overlap;
      sum[1] += c.m * overlap;
      sum[2] += c.n * overlap;
    }
    cells.emplace_back(sum[0] / h, sum[1] / h, sum[2] / h);
  }
  return Grid(a, b, std::move(cells));
}

Grid lax_friedrichs_step(const Grid& grid, double dt, const Params& params, double cfl_limit) {
  if (!(dt > 0.0)) throw ArgumentError("time step must be positive");
  if (!(cfl_limit > 0.0 && cfl_limit <= 0.5)) {
    throw ArgumentError("CFL limit must lie in (0, 0.5]");
  }
  const int n = grid.n_cells();
  const double h = grid.dx();
  const double alpha = max_wave_speed(grid, params);
  if (dt * alpha > cfl_limit * h * (1.0 + 1e-12)) {
    throw ArgumentError("time step violates the CFL condition");
  }

  // Interface fluxes; ghost cells copy the edge cells.
  std::vector<Vec3> interface(static_cast<std::size_t>(n + 1));
  auto cell = [&](int i) -> const ConservedState& { return grid[std::clamp(i, 0, n - 1)]; };
  for (int i = 0; i <= n; ++i) {
    const ConservedState& l = cell(i - 1);
    const ConservedState& r = cell(i);
    const Vec3 fl = flux(l, params);
    const Vec3 fr = flux(r, params);
    interface[static_cast<std::size_t>(i)] = {
        0.5 * (fl[0] + fr[0]) - 0.5 * alpha * (r.rho - l.rho),
        0.5 * (fl[1] + fr[1]) - 0.5 * alpha * (r.m - l.m),
        0.5 * (fl[2] + fr[2]) - 0.5 * alpha * (r.n - l.n)};
  }

  const double ratio = dt / h;
  std::vector<ConservedState> next;
  next.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Vec3& fl = interface[static_cast<std::size_t>(i)];
    const Vec3& fr = interface[static_cast<std::size_t>(i + 1)];
    const ConservedState& c = grid[i];
    const double rho = c.rho - ratio * (fr[0] - fl[0]);
    if (!(rho > 0.0)) {
      throw BreakdownError("non-positive density in cell " + std::to_string(i));
    }
    next.emplace_back(rho, c.m - ratio * (fr[1] - fl[1]), c.n - ratio * (fr[2] - fl[2]));
  }
  return Grid(grid.x_min(), grid.x_max(), std::move(next));
}

double conservation_defect(const Grid& before, const Grid& after, double dt,
                           const Params& params) {
  const Vec3 t0 = before.totals();
  const Vec3 t1 = after.totals();
  // With outflow ghosts the boundary interface flux equals the edge-cell flux.
  const Vec3 f_left = flux(before[0], params);
  const Vec3 f_right = flux(before[before.n_cells() - 1], params);
  double worst = 0.0;
  for (std::size_t k = 0; k < 3; ++k) {
    double scale = 0.0;
    for (const auto& c : before.cells()) {
      const double q = k == 0 ? c.rho : (k == 1 ? c.m : c.n);
      scale += std::abs(q);
    }
    scale *= before.dx();
    const double expected = t0[k] - dt * (f_right[k] - f_left[k]);
    if (scale > 0.0) worst = std::max(worst, std::abs(t1[k] - expected) / scale);
  }
  return worst;
}

SimulationResult simulate(const InitialData& data, double t_end, int n_cells, double cfl,
                          const Params& params) {
  if (!(t_end >= 0.0)) throw ArgumentError("end time must be nonnegative");
  if (!(cfl > 0.0 && cfl <= 0.5)) throw ArgumentError("CFL number must lie in (0, 0.5]");
  SimulationResult result{project(data, n_cells), 0, 0.0};
  double t = 0.0;
  while (t < t_end) {
    const double alpha = max_wave_speed(result.grid, params);
    double dt = cfl * result.grid.dx() / alpha;
    if (t + dt >= t_end) dt = t_end - t;
    Grid next = lax_friedrichs_step(result.grid, dt, params, 0.5);
    result.max_conservation_defect = std::max(result.max_conservation_defect,
                                              conservation_defect(result.grid, next, dt, params));
    result.grid = std::move(next);
    ++result.steps;
    t = (dt == t_end - t) ? t_end : t + dt;
  }
  return result;
}

double l1_error(const Grid& grid, const ExactSampler& exact) {
  double sum = 0.0;
  for (int i = 0; i < grid.n_cells(); ++i) {
    const ConservedState e = to_conserved(exact(grid.center(i)));
    const ConservedState& c = grid[i];
    sum += std::abs(c.rho - e.rho) + std::abs(c.m - e.m) + std::abs(c.n - e.n);
  }
  return sum * grid.dx();
}

double l1_error(const Grid& a, const Grid& b) {
  const double tol = 1e-12 * std::max({1.0, std::abs(a.x_min()), std::abs(a.x_max())});
  if (std::abs(a.x_min() - b.x_min()) > tol || std::abs(a.x_max() - b.x_max()) > tol) {
    throw ArgumentError("grids cover different windows");
  }
  const Grid& coarse = a.n_cells() <= b.n_cells() ? a : b;
  const Grid& fine = a.n_cells() <= b.n_cells() ? b : a;
  if (fine.n_cells() % coarse.n_cells() != 0) {
    throw ArgumentError("grid resolutions must be nested");
  }
  const int ratio = fine.n_cells() / coarse.n_cells();
  double sum = 0.0;
  for (int i = 0; i < coarse.n_cells(); ++i) {
    Vec3 avg{0.0, 0.0, 0.0};
    for (int k = 0; k < ratio; ++k) {
      const auto& f = fine[i * ratio + k];
      avg[0] += f.rho / ratio;
      avg[1] += f.m / ratio;
      avg[2] += f.n / ratio;
    }
    const auto& c = coarse[i];
    sum += std::abs(c.rho - avg[0]) + std::abs(c.m - avg[1]) + std::abs(c.n - avg[2]);
  }
  return sum * coarse.dx();
}

double windowed_excess_mass(const Grid& grid, const std::function<double(double)>& background,
                            double lo, double hi) {
  double sum = 0.0;
  for (int i = 0; i < grid.n_cells(); ++i) {
    const double x = grid.center(i);
    if (x < lo || x > hi) continue;
    sum += grid[i].rho - background(x);
  }
  return sum * grid.dx();
}

}  // namespace templeflow
