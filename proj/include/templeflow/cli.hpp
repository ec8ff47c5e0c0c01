#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "templeflow/config.hpp"
#include "templeflow/delta_shock.hpp"
#include "templeflow/fv_oracle.hpp"
#include "templeflow/riemann.hpp"

namespace templeflow::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int classical = 0;
inline constexpr int input_error = 1;
inline constexpr int delta_shock = 2;
inline constexpr int degenerate = 3;
inline constexpr int validation_failed = 4;
}  // namespace exit_code

enum class OutputFormat { Csv, Json };

struct CommandOptions {
  std::optional<std::filesystem::path> out_dir;
  OutputFormat format = OutputFormat::Csv;
};

/// One line of a validation table. Passing means value <= tolerance, or
/// value >= tolerance when `at_least` is set.
struct ValidationRow {
  std::string name;
  double value;
  double tolerance;
  bool at_least = false;

  bool pass() const;
};

/// Sets the spdlog level from TEMPLEFLOW_LOG (trace, debug, info, warn, error, off).
void init_logging();

/// Profile sample: x strictly increasing, header `x,rho,u,v`.
struct ProfileRow {
  double x;
  PrimitiveState state;
};

std::string format_number(double value);
void write_profile_csv(std::ostream& out, const std::vector<ProfileRow>& rows);
nlohmann::json profile_json(double t, const std::vector<ProfileRow>& rows);
nlohmann::json delta_json(const DeltaShockWave& wave);

/// Oracle grids as CSV with header `x_center,rho,m,n`.
void write_grid_csv(std::ostream& out, const Grid& grid);

// Each validator optionally hands back the finest finite-volume grid it computed.
std::vector<ValidationRow> validate_classical(const WaveFan& fan, const ProblemConfig& config,
                                              std::optional<Grid>* oracle_grid = nullptr);
std::vector<ValidationRow> validate_delta(const PrimitiveState& left, const PrimitiveState& right,
                                          const ProblemConfig& config,
                                          std::optional<Grid>* oracle_grid = nullptr);
std::vector<ValidationRow> validate_cauchy(const CauchySolver& solver, const ProblemConfig& config,
                                           std::optional<Grid>* oracle_grid = nullptr);

int cmd_classify(const ProblemConfig& config, const CommandOptions& options, std::ostream& out);
int cmd_solve(const ProblemConfig& config, const CommandOptions& options, std::ostream& out);
int cmd_validate(const ProblemConfig& config, const CommandOptions& options, std::ostream& out);

/// Parses argv and dispatches; returns the process exit code.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace templeflow::cli
