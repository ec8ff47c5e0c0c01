#pragma once

#include <stdexcept>

#include "json.hpp"
#include <optional>
#include <string>
#include <vector>

#include "templeflow/cauchy.hpp"
#include "templeflow/core.hpp"
#include "templeflow/entropy.hpp"

namespace templeflow {

enum class ProblemKind { Riemann, Cauchy };

struct HypothesisConstants {
  double c1, c2, c3, c4, c5, tv_bound;
};

struct OutputSettings {
  std::vector<double> times{1.0};
  double x_min = -1.0;
  double x_max = 1.0;
  int n_samples = 201;
};

struct OracleSettings {
  int n_cells = 800;
  double cfl = 0.45;
  double t_end = 0.2;
};

/// One built-in generator slot: {"family": "quadratic", "a": ..., "b": ...}.
struct GeneratorSpec {
  std::string family = "quadratic";
  double a = 0.0;
  double b = 0.0;
};

struct PairSpec {
  GeneratorSpec F, G, H;

  EntropyPair build() const;
};

/// Problem description read from a JSON config file.
struct ProblemConfig {
  double s = 1.0;
  ProblemKind kind = ProblemKind::Riemann;
  std::optional<PrimitiveState> left;
  std::optional<PrimitiveState> right;
  std::optional<InitialData> initial_data;
  std::optional<HypothesisConstants> hypotheses;
  OutputSettings output;
  OracleSettings oracle;
  std::vector<PairSpec> entropy_pairs;
  int map_resolution = 4096;

  Params params() const { return Params(s); }
  std::optional<Hypotheses> build_hypotheses() const;
  /// Riemann data as InitialData on [-half_width, half_width]; Cauchy data as given.
  InitialData data(double half_width = 1.0) const;
};

/// Thrown for schema violations; the message names the offending field.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ProblemConfig parse_config(const nlohmann::json& j);
ProblemConfig load_config(const std::string& path);
nlohmann::json to_json(const ProblemConfig& config);

}  // namespace templeflow
