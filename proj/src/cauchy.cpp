#include "templeflow/cauchy.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "templeflow/errors.hpp"

namespace templeflow {

// ---------------------------------------------------------------------------
// InitialData

InitialData InitialData::piecewise_constant(std::vector<Segment> segments) {
  if (segments.empty()) {
    throw ArgumentError("piecewise-constant data needs at least one segment");
  }
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (!(segments[i].x_end > segments[i].x_begin)) {
      throw ArgumentError("segments must have positive length");
    }
    if (i > 0 && segments[i].x_begin != segments[i - 1].x_end) {
      throw ArgumentError("segments must be contiguous and ordered");
    }
  }
  InitialData data;
  data.x_min_ = segments.front().x_begin;
  data.x_max_ = segments.back().x_end;
  data.segments_ = std::move(segments);
  return data;
}

InitialData InitialData::sampled(double x_min, double x_max,
                                 std::vector<PrimitiveState> samples) {
  if (!(x_max > x_min)) {
    throw ArgumentError("sample window must be nonempty");
  }
  if (samples.size() < 2) {
    throw ArgumentError("sampled data needs at least two samples");
  }
  InitialData data;
  data.x_min_ = x_min;
  data.x_max_ = x_max;
  data.samples_ = std::move(samples);
  return data;
}

InitialData InitialData::riemann(const PrimitiveState& left, const PrimitiveState& right,
                                 double half_width) {
  if (!(half_width > 0.0)) {
    throw ArgumentError("Riemann window half width must be positive");
  }
  return piecewise_constant({{-half_width, 0.0, left}, {0.0, half_width, right}});
}

PrimitiveState InitialData::at(double x) const {
  if (is_piecewise_constant()) {
    // First segment whose end lies beyond x; breaks take the right limit.
    auto it = std::upper_bound(segments_.begin(), segments_.end(), x,
                               [](double value, const Segment& seg) { return value < seg.x_end; });
    if (it == segments_.end()) return segments_.back().state;
    return it->state;
  }
  if (x <= x_min_) return samples_.front();
  if (x >= x_max_) return samples_.back();
  const double h = (x_max_ - x_min_) / static_cast<double>(samples_.size() - 1);
  const double pos = (x - x_min_) / h;
  const auto k = std::min(static_cast<std::size_t>(pos), samples_.size() - 2);
  const double a = pos - static_cast<double>(k);
  const auto& p = samples_[k];
  const auto& q = samples_[k + 1];
  return {p.rho + a * (q.rho - p.rho), p.u + a * (q.u - p.u), p.v + a * (q.v - p.v)};
}

std::vector<double> InitialData::nodes() const {
  std::vector<double> out;
  if (is_piecewise_constant()) {
    out.push_back(segments_.front().x_begin);
    for (const auto& seg : segments_) out.push_back(seg.x_end);
    return out;
  }
  const double h = (x_max_ - x_min_) / static_cast<double>(samples_.size() - 1);
  for (std::size_t k = 0; k < samples_.size(); ++k) {
    out.push_back(k + 1 == samples_.size() ? x_max_ : x_min_ + static_cast<double>(k) * h);
  }
  return out;
}

std::vector<PrimitiveState> InitialData::states() const {
  if (!is_piecewise_constant()) return samples_;
  std::vector<PrimitiveState> out;
  out.reserve(segments_.size());
  for (const auto& seg : segments_) out.push_back(seg.state);
  return out;
}

// ---------------------------------------------------------------------------
// LagrangianMap

LagrangianMap::LagrangianMap(const InitialData& data, int resolution)
    : left_(data.at(data.x_min() - 1.0)), right_(data.at(data.x_max())) {
  if (resolution < 2) {
    throw ArgumentError("Lagrangian map resolution must be at least 2");
  }
  const double a = data.x_min();
  const double b = data.x_max();
  spacing_ = (b - a) / (resolution - 1);

  std::vector<double> nodes = data.nodes();
  for (int k = 0; k < resolution; ++k) {
    nodes.push_back(k + 1 == resolution ? b : a + k * spacing_);
  }
  std::sort(nodes.begin(), nodes.end());
  const double merge_tol = 1e-13 * std::max({1.0, std::abs(a), std::abs(b)});
  nodes.erase(std::unique(nodes.begin(), nodes.end(),
                          [merge_tol](double p, double q) { return q - p <= merge_tol; }),
              nodes.end());
  x_ = std::move(nodes);

  y_.assign(x_.size(), 0.0);
  rho_u_.assign(x_.size(), 0.0);
  rho_v_.assign(x_.size(), 0.0);
  for (std::size_t k = 1; k < x_.size(); ++k) {
    const double h = x_[k] - x_[k - 1];
    double mass, mom, pres;
    if (data.is_piecewise_constant()) {
      // Nodes contain every break, so the data is constant on (x_{k-1}, x_k).
      const PrimitiveState p = data.at(0.5 * (x_[k - 1] + x_[k]));
      mass = p.rho * h;
      mom = p.rho * p.u * h;
      pres = p.rho * p.v * h;
    } else {
      const PrimitiveState p = data.at(x_[k - 1]);
      const PrimitiveState q = data.at(x_[k]);
      mass = 0.5 * (p.rho + q.rho) * h;
      mom = 0.5 * (p.rho * p.u + q.rho * q.u) * h;
      pres = 0.5 * (p.rho * p.v + q.rho * q.v) * h;
    }
    if (!(mass > 0.0)) {
      throw DomainError("initial density must be positive");
    }
    y_[k] = y_[k - 1] + mass;
    rho_u_[k] = rho_u_[k - 1] + mom;
    rho_v_[k] = rho_v_[k - 1] + pres;
  }

  // Shift so that all cumulative integrals start at x = 0.
  const double y0 = at_x(y_, 0.0, left_.rho, right_.rho);
  const double mu0 = at_x(rho_u_, 0.0, left_.rho * left_.u, right_.rho * right_.u);
  const double mv0 = at_x(rho_v_, 0.0, left_.rho * left_.v, right_.rho * right_.v);
  for (std::size_t k = 0; k < x_.size(); ++k) {
    y_[k] -= y0;
    rho_u_[k] -= mu0;
    rho_v_[k] -= mv0;
  }
}

double LagrangianMap::at_x(const std::vector<double>& values, double x, double slope_left,
                           double slope_right) const {
  if (x <= x_.front()) return values.front() + slope_left * (x - x_.front());
  if (x >= x_.back()) return values.back() + slope_right * (x - x_.back());
  const auto k = static_cast<std::size_t>(std::upper_bound(x_.begin(), x_.end(), x) - x_.begin());
  const double a = (x - x_[k - 1]) / (x_[k] - x_[k - 1]);
  return values[k - 1] + a * (values[k] - values[k - 1]);
}

double LagrangianMap::lagrangian_coordinate(double x) const {
  return at_x(y_, x, left_.rho, right_.rho);
}

double LagrangianMap::eulerian_coordinate(double y) const {
  if (y <= y_.front()) return x_.front() + (y - y_.front()) / left_.rho;
  if (y >= y_.back()) return x_.back() + (y - y_.back()) / right_.rho;
  // Bisection on the monotone table, then one linear interpolation.
  const auto k = static_cast<std::size_t>(std::upper_bound(y_.begin(), y_.end(), y) - y_.begin());
  const double a = (y - y_[k - 1]) / (y_[k] - y_[k - 1]);
  return x_[k - 1] + a * (x_[k] - x_[k - 1]);
}

double LagrangianMap::velocity_integral(double y) const {
  return at_x(rho_u_, eulerian_coordinate(y), left_.rho * left_.u, right_.rho * right_.u);
}

double LagrangianMap::pressure_integral(double y) const {
  return at_x(rho_v_, eulerian_coordinate(y), left_.rho * left_.v, right_.rho * right_.v);
}

LagrangianMap build_lagrangian_map(const InitialData& data, int resolution) {
  return LagrangianMap(data, resolution);
}

// ---------------------------------------------------------------------------
// Explicit solution

LagrangianState lagrangian_solution(const LagrangianData& initial, const Params& params,
                                    double t, double y) {
  if (t < 0.0) {
    throw ArgumentError("Lagrangian solution needs t >= 0");
  }
  const double s = params.s;
  const LagrangianState here = initial(y);
  if (t == 0.0) return here;
  const LagrangianState ahead = initial(y + s * t);
  const LagrangianState behind = initial(y - s * t);
  const double kappa =
      0.5 * (ahead.kappa + behind.kappa) - (ahead.nu - behind.nu) / (2.0 * s);
  const double nu = 0.5 * (ahead.nu + behind.nu) - 0.5 * s * (ahead.kappa - behind.kappa);
  return {here.omega + here.kappa - kappa, nu, kappa};
}

double eulerian_position(const LagrangianMap& map, const Params& params, double t, double y) {
  if (t < 0.0) {
    throw ArgumentError("Eulerian position needs t >= 0");
  }
  const double s = params.s;
  const double ahead = y + s * t;
  const double behind = y - s * t;
  // int_0^y (v0 + 1/rho0)(X0) = V(y) + X0(y), since int_0^y 1/rho0(X0) = X0(y).
  return (map.velocity_integral(ahead) - map.velocity_integral(behind)) / (2.0 * s) +
         map.eulerian_coordinate(y) + map.pressure_integral(y) -
         0.5 * (map.pressure_integral(ahead) + map.pressure_integral(behind));
}

// ---------------------------------------------------------------------------
// CauchySolver

CauchySolver::CauchySolver(InitialData data, const Params& params, const Hypotheses& hypotheses,
                           int resolution)
    : data_(std::move(data)), params_(params), map_(data_, resolution) {
  const auto states = data_.states();
  const HypothesisReport report = check_hypotheses(states, hypotheses, params_);
  if (!report.all()) {
    throw PreconditionError("initial data violates: " + report.failures());
  }
}

LagrangianState CauchySolver::lagrangian_initial(double y) const {
  const PrimitiveState p = data_.at(map_.eulerian_coordinate(y));
  return {1.0 / p.rho, p.u, p.v};
}

LagrangianState CauchySolver::lagrangian(double t, double y) const {
  return lagrangian_solution([this](double eta) { return lagrangian_initial(eta); }, params_, t,
                             y);
}

double CauchySolver::eulerian_position(double t, double y) const {
  return templeflow::eulerian_position(map_, params_, t, y);
}

double CauchySolver::lagrangian_coordinate(double t, double x) const {
  const double guess = map_.lagrangian_coordinate(x);
  if (t == 0.0) return guess;
  auto position = [&](double y) { return eulerian_position(t, y); };

  double lo = guess;
  double hi = guess;
  for (double step = 1.0; position(lo) > x; step *= 2.0) lo -= step;
  for (double step = 1.0; position(hi) < x; step *= 2.0) hi += step;

  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double xm = position(mid);
    if (xm == x) return mid;
    (xm < x ? lo : hi) = mid;
  }
  const double x_lo = position(lo);
  const double x_hi = position(hi);
  if (!(x_hi > x_lo)) return lo;
  return lo + (x - x_lo) / (x_hi - x_lo) * (hi - lo);
}

PrimitiveState CauchySolver::solve(double t, double x) const {
  if (t < 0.0) {
    throw ArgumentError("Cauchy solution needs t >= 0");
  }
  const double s = params_.s;
  const double y = lagrangian_coordinate(t, x);
  const PrimitiveState origin = data_.at(map_.eulerian_coordinate(y));
  const PrimitiveState ahead = data_.at(map_.eulerian_coordinate(y + s * t));
  const PrimitiveState behind = data_.at(map_.eulerian_coordinate(y - s * t));

  const double gamma_plus = 0.5 * (ahead.u + behind.u);
  const double gamma_minus = 0.5 * (ahead.u - behind.u);
  const double upsilon_plus = 0.5 * (ahead.v + behind.v);
  const double upsilon_minus = 0.5 * (ahead.v - behind.v);

  const double u = gamma_plus - s * upsilon_minus;
  const double v = upsilon_plus - gamma_minus / s;
  const double denominator = 1.0 + origin.rho * (origin.v - v);
  if (!(denominator > 0.0)) {
    throw InconsistencyError("density denominator is not positive");
  }
  return {origin.rho / denominator, u, v};
}

PrimitiveState solve_cauchy(const InitialData& data, const Params& params,
                            const Hypotheses& hypotheses, double t, double x, int resolution) {
  return CauchySolver(data, params, hypotheses, resolution).solve(t, x);
}

double entropy_residual_on_solution(const CauchySolver& solver, const EntropyPair& pair,
                                    const SpaceTimeBox& box, int mesh) {
  return entropy_weak_residual([&solver](double t, double x) { return solver.solve(t, x); },
                               solver.params(), pair, box, mesh);
}

}  // namespace templeflow
