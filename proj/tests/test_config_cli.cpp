#include <gtest/gtest.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "templeflow/cli.hpp"
#include "templeflow/config.hpp"

using namespace templeflow;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

json riemann_json(json left, json right, double s) {
  return {{"s", s}, {"problem", "riemann"}, {"left", left}, {"right", right}};
}

json state(double rho, double u, double v) { return {{"rho", rho}, {"u", u}, {"v", v}}; }

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("templeflow_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write_config(const json& j, const std::string& name = "config.json") {
    const auto path = dir_ / name;
    std::ofstream(path) << j.dump(2);
    return path.string();
  }

  int run(std::vector<std::string> args) {
    args.insert(args.begin(), "templeflow");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    out_.str("");
    err_.str("");
    return cli::run(static_cast<int>(argv.size()), argv.data(), out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

}  // namespace

TEST(Config, ParsesRiemannConfig) {
  const auto c = parse_config(riemann_json(state(1, 1, 0), state(1, -1, 0), 3));
  EXPECT_EQ(c.kind, ProblemKind::Riemann);
  EXPECT_EQ(c.s, 3.0);
  EXPECT_EQ(c.left->u, 1.0);
  EXPECT_EQ(c.oracle.n_cells, 800);
  EXPECT_FALSE(c.build_hypotheses().has_value());
}

TEST(Config, ErrorsNameTheField) {
  auto missing_s = riemann_json(state(1, 1, 0), state(1, -1, 0), 3);
  missing_s.erase("s");
  try {
    parse_config(missing_s);
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("'s'"), std::string::npos);
  }
  try {
    parse_config(riemann_json(state(1, 1, 0), state(-1, -1, 0), 3));
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("right.rho"), std::string::npos);
  }
  auto bad_kind = riemann_json(state(1, 1, 0), state(1, -1, 0), 3);
  bad_kind["problem"] = "euler";
  EXPECT_THROW(parse_config(bad_kind), ConfigError);
  auto bad_cfl = riemann_json(state(1, 1, 0), state(1, -1, 0), 3);
  bad_cfl["oracle"] = {{"cfl", 0.9}};
  EXPECT_THROW(parse_config(bad_cfl), ConfigError);
  EXPECT_THROW(parse_config(json{{"s", 1}, {"problem", "cauchy"}}), ConfigError);
}

TEST(Config, RoundTripIsIdempotent) {
  json j = riemann_json(state(1.25, 0.1, -0.3), state(0.7, 2, 1e-17), 1.0 / 3.0);
  j["hypotheses"] = {{"c1", -2}, {"c2", 2}, {"c3", -2}, {"c4", 2}, {"c5", 9}, {"tv_bound", 4}};
  j["output"] = {{"t", {0.1, 0.7}}, {"x_min", -2}, {"x_max", 3}, {"n_samples", 11}};
  j["entropy_pairs"] = json::array(
      {{{"F", {{"family", "quadratic"}, {"a", 1}, {"b", 0.1}}},
        {"G", {{"family", "zero"}}},
        {"H", {{"family", "quadratic"}, {"a", 2}, {"b", -1}}}}});
  const json once = to_json(parse_config(j));
  const json twice = to_json(parse_config(once));
  EXPECT_EQ(once, twice);

  const json cauchy = {
      {"s", 2},
      {"problem", "cauchy"},
      {"initial_data",
       {{"sampled",
         {{"x_min", -1}, {"x_max", 1}, {"rho", {1, 1.1, 1.2}}, {"u", {0, 0, 0}}, {"v", {0.1, 0.1, 0.1}}}}}}};
  const json c1 = to_json(parse_config(cauchy));
  EXPECT_EQ(c1, to_json(parse_config(c1)));
  const json segments = {
      {"s", 2},
      {"problem", "cauchy"},
      {"initial_data",
       {{"segments",
         {{{"x_begin", -1}, {"x_end", 0}, {"rho", 1}, {"u", 0}, {"v", 0}},
          {{"x_begin", 0}, {"x_end", 1}, {"rho", 2}, {"u", 0.1}, {"v", 0}}}}}}};
  const json s1 = to_json(parse_config(segments));
  EXPECT_EQ(s1, to_json(parse_config(s1)));
}

TEST_F(CliTest, ClassifyExitCodes) {
  const json classical = riemann_json(state(1, 0.2, 0.1), state(1, 0.2, 0.1), 1);
  EXPECT_EQ(run({"classify", "--config", write_config(classical)}), cli::exit_code::classical);
  EXPECT_NE(out_.str().find("classification,Classical"), std::string::npos);

  const json delta = riemann_json(state(1, 2, 0), state(1, -2, 0), 1);
  EXPECT_EQ(run({"classify", "--config", write_config(delta), "--format", "json"}),
            cli::exit_code::delta_shock);
  EXPECT_EQ(json::parse(out_.str())["classification"], "DeltaShock");

  const json parallel = riemann_json(state(1, 3, 0.5), state(1, 1, 0.5), 1);
  EXPECT_EQ(run({"classify", "--config", write_config(parallel)}), cli::exit_code::degenerate);

  std::ofstream(dir_ / "broken.json") << "{ not json";
  EXPECT_EQ(run({"classify", "--config", (dir_ / "broken.json").string()}),
            cli::exit_code::input_error);
  EXPECT_NE(err_.str().find("malformed"), std::string::npos);
  EXPECT_EQ(run({"classify"}), cli::exit_code::input_error);
  EXPECT_EQ(run({"classify", "--config", write_config(classical), "--format", "xml"}),
            cli::exit_code::input_error);
}

TEST_F(CliTest, SolveClassicalProfileMatchesFan) {
  json j = riemann_json(state(1, 1, 0), state(1, -1, 0), 3);
  j["output"] = {{"t", {0.25, 0.5}}, {"x_min", -1.5}, {"x_max", 1.5}, {"n_samples", 31}};
  const auto out = dir_ / "out";
  ASSERT_EQ(run({"solve", "--config", write_config(j), "--out", out.string()}), 0);
  const Params params(3);
  const auto fan = solve_classical({1, 1, 0}, {1, -1, 0}, params);
  for (int k = 0; k < 2; ++k) {
    std::ifstream in(out / ("profile_" + std::to_string(k) + ".csv"));
    std::stringstream buffer;
    buffer << in.rdbuf();
    const auto lines = lines_of(buffer.str());
    ASSERT_EQ(lines.size(), 32u);
    EXPECT_EQ(lines[0], "x,rho,u,v");
    double prev_x = -1e300;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      double x, rho, u, v;
      char c;
      std::istringstream row(lines[i]);
      row >> x >> c >> rho >> c >> u >> c >> v;
      EXPECT_GT(x, prev_x);
      prev_x = x;
      const auto expected = sample_fan(fan, k == 0 ? 0.25 : 0.5, x);
      EXPECT_EQ(rho, expected.rho);
      EXPECT_EQ(u, expected.u);
      EXPECT_EQ(v, expected.v);
    }
  }
}

TEST_F(CliTest, SolveDeltaEmitsRecordAndSkipsSingularPoint) {
  json j = riemann_json(state(1, 2, 0), state(1, -2, 0), 1);
  j["output"] = {{"t", {1.0}}, {"x_min", -1}, {"x_max", 1}, {"n_samples", 21}};
  const auto out = dir_ / "delta";
  ASSERT_EQ(run({"solve", "--config", write_config(j), "--out", out.string()}), 0);
  std::ifstream record(out / "delta_shock.json");
  const json wave = json::parse(record);
  EXPECT_NEAR(wave["u_delta"].get<double>(), 0.0, 1e-15);
  EXPECT_NEAR(wave["w_slope"].get<double>(), 4.0, 1e-15);
  EXPECT_NEAR(wave["g"].get<double>(), 1.0, 1e-15);
  std::ifstream in(out / "profile_0.csv");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const auto lines = lines_of(buffer.str());
  EXPECT_EQ(lines.size(), 21u);  // header + 20 samples, x = 0 dropped
  for (const auto& line : lines) EXPECT_NE(line.rfind("0,", 0), 0u);
}

TEST_F(CliTest, SolveCauchyConstantAndAdvection) {
  json j = {{"s", 1},
            {"problem", "cauchy"},
            {"initial_data",
             {{"segments", {{{"x_begin", -1}, {"x_end", 1}, {"rho", 1.5}, {"u", 0.3}, {"v", 0.2}}}}}},
            {"hypotheses", {{"c1", 0}, {"c2", 0.2}, {"c3", 0.4}, {"c4", 0.6}, {"c5", 0.8}, {"tv_bound", 1}}},
            {"output", {{"t", {0.5}}, {"n_samples", 5}}},
            {"map_resolution", 256}};
  ASSERT_EQ(run({"solve", "--config", write_config(j), "--format", "json"}), 0);
  const json profile = json::parse(lines_of(out_.str())[0]);
  for (double rho : profile["rho"]) EXPECT_NEAR(rho, 1.5, 1e-13);
  for (double u : profile["u"]) EXPECT_NEAR(u, 0.3, 1e-13);

  std::vector<double> rho;
  for (int i = 0; i < 201; ++i) rho.push_back(1.0 + 0.3 * std::exp(-20.0 * std::pow(-2.0 + 0.02 * i, 2)));
  j["initial_data"] = {{"sampled", {{"x_min", -2}, {"x_max", 2}, {"rho", rho},
                                    {"u", std::vector<double>(201, 0.5)},
                                    {"v", std::vector<double>(201, 0.1)}}}};
  j["hypotheses"] = {{"c1", 0.3}, {"c2", 0.5}, {"c3", 0.5}, {"c4", 0.7}, {"c5", 0.7}, {"tv_bound", 1}};
  j["output"] = {{"t", {1.0}}, {"x_min", -0.5}, {"x_max", 1.0}, {"n_samples", 4}};
  j["map_resolution"] = 4096;
  ASSERT_EQ(run({"solve", "--config", write_config(j), "--format", "json"}), 0);
  const json moved = json::parse(lines_of(out_.str())[0]);
  // Peak at x = 0 travels to x = 0.5.
  EXPECT_NEAR(moved["rho"][2].get<double>(), 1.3, 1e-8);
}

TEST_F(CliTest, SolveReportsHypothesisFailure) {
  json j = riemann_json(state(1, 1, 0), state(1, -1, 0), 3);
  j["hypotheses"] = {{"c1", -0.5}, {"c2", 2}, {"c3", -2}, {"c4", 2}, {"c5", 5}, {"tv_bound", 10}};
  EXPECT_EQ(run({"solve", "--config", write_config(j)}), cli::exit_code::input_error);
  EXPECT_NE(err_.str().find("H1"), std::string::npos);
}

TEST_F(CliTest, ValidateClassicalPasses) {
  json j = riemann_json(state(1, 1, 0), state(1, -1, 0), 3);
  j["oracle"] = {{"n_cells", 400}};
  const auto out = dir_ / "val";
  EXPECT_EQ(run({"validate", "--config", write_config(j), "--out", out.string()}), 0);
  EXPECT_EQ(out_.str().find("FAIL"), std::string::npos);
  EXPECT_TRUE(fs::exists(out / "validation.csv"));
  std::ifstream grid(out / "oracle_grid.csv");
  std::string header;
  std::getline(grid, header);
  EXPECT_EQ(header, "x_center,rho,m,n");
}

TEST_F(CliTest, ValidateDeltaPasses) {
  json j = riemann_json(state(2, 2, 0), state(1, -2, 0), 1);
  j["oracle"] = {{"n_cells", 800}, {"t_end", 0.5}};
  EXPECT_EQ(run({"validate", "--config", write_config(j), "--format", "json"}), 0);
  const json table = json::parse(out_.str());
  bool saw_grh = false, saw_mass = false;
  for (const auto& row : table) {
    EXPECT_TRUE(row["pass"].get<bool>()) << row.dump();
    saw_grh |= row["name"].get<std::string>().rfind("grh_residual", 0) == 0;
    saw_mass |= row["name"] == "fv_windowed_mass_rel_error";
  }
  EXPECT_TRUE(saw_grh);
  EXPECT_TRUE(saw_mass);
}

TEST(CliValidators, TamperedSpeedFailsRankineHugoniot) {
  const auto config = parse_config(riemann_json(state(1, 1, 0), state(1.5, -0.5, 0.1), 3));
  auto fan = solve_classical(*config.left, *config.right, config.params());
  fan.speeds[0] -= 0.05;
  const auto rows = cli::validate_classical(fan, config);
  bool rh_failed = false;
  for (const auto& row : rows) {
    if (row.name == "rh_residual_contact1") rh_failed = !row.pass();
  }
  EXPECT_TRUE(rh_failed);
}

TEST_F(CliTest, ValidateCauchyPasses) {
  const json j = {
      {"s", 1},
      {"problem", "cauchy"},
      {"initial_data",
       {{"segments",
         {{{"x_begin", -1}, {"x_end", -0.3}, {"rho", 1.0}, {"u", 0.1}, {"v", 0.2}},
          {{"x_begin", -0.3}, {"x_end", 0.4}, {"rho", 1.3}, {"u", -0.1}, {"v", 0.25}},
          {{"x_begin", 0.4}, {"x_end", 1}, {"rho", 1.1}, {"u", 0.05}, {"v", 0.15}}}}}},
      {"hypotheses", {{"c1", -0.5}, {"c2", 0.2}, {"c3", 0.1}, {"c4", 0.5}, {"c5", 0.8}, {"tv_bound", 2}}},
      {"oracle", {{"n_cells", 200}, {"t_end", 0.2}}},
      {"output", {{"t", {0.5}}}},
      {"map_resolution", 1024}};
  EXPECT_EQ(run({"validate", "--config", write_config(j)}), 0) << out_.str() << err_.str();
}

TEST(CliLogging, EnvironmentSelectsLevel) {
  ::setenv("TEMPLEFLOW_LOG", "debug", 1);
  cli::init_logging();
  EXPECT_EQ(spdlog::get_level(), spdlog::level::debug);
  ::setenv("TEMPLEFLOW_LOG", "off", 1);
  cli::init_logging();
  EXPECT_EQ(spdlog::get_level(), spdlog::level::off);
  ::unsetenv("TEMPLEFLOW_LOG");
  cli::init_logging();
  EXPECT_EQ(spdlog::get_level(), spdlog::level::warn);
}

TEST(CliFormat, SeventeenDigits) {
  EXPECT_EQ(cli::format_number(0.1), "0.10000000000000001");
  EXPECT_EQ(std::stod(cli::format_number(1.0 / 3.0)), 1.0 / 3.0);
}
