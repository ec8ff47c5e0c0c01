#include "templeflow/config.hpp"

#include <fstream>
#include <sstream>

#include "templeflow/errors.hpp"

namespace templeflow {

using nlohmann::json;

namespace {

double number(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw ConfigError(where + ": missing field '" + key + "'");
  if (!j.at(key).is_number()) throw ConfigError(where + "." + key + " must be a number");
  return j.at(key).get<double>();
}

double number_or(const json& j, const char* key, double fallback, const std::string& where) {
  return j.contains(key) ? number(j, key, where) : fallback;
}

PrimitiveState state(const json& j, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + " must be an object");
  try {
    return {number(j, "rho", where), number(j, "u", where), number(j, "v", where)};
  } catch (const DomainError&) {
    throw ConfigError(where + ".rho must be positive");
  }
}

std::vector<double> numbers(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw ConfigError(where + "." + key + " must be an array of numbers");
  }
  std::vector<double> out;
  for (const auto& v : j.at(key)) {
    if (!v.is_number()) throw ConfigError(where + "." + key + " must contain numbers only");
    out.push_back(v.get<double>());
  }
  return out;
}

InitialData initial_data(const json& j) {
  const std::string where = "initial_data";
  if (j.contains("segments")) {
    std::vector<Segment> segments;
    int i = 0;
    for (const auto& seg : j.at("segments")) {
      const std::string at = where + ".segments[" + std::to_string(i++) + "]";
      segments.push_back({number(seg, "x_begin", at), number(seg, "x_end", at), state(seg, at)});
    }
    try {
      return InitialData::piecewise_constant(std::move(segments));
    } catch (const ArgumentError& e) {
      throw ConfigError(where + ": " + e.what());
    }
  }
  if (j.contains("sampled")) {
    const json& smp = j.at("sampled");
    const std::string at = where + ".sampled";
    const auto rho = numbers(smp, "rho", at);
    const auto u = numbers(smp, "u", at);
    const auto v = numbers(smp, "v", at);
    if (rho.size() != u.size() || rho.size() != v.size()) {
      throw ConfigError(at + ": rho, u and v must have equal lengths");
    }
    std::vector<PrimitiveState> samples;
    for (std::size_t k = 0; k < rho.size(); ++k) {
      if (!(rho[k] > 0.0)) throw ConfigError(at + ".rho must be positive");
      samples.emplace_back(rho[k], u[k], v[k]);
    }
    try {
      return InitialData::sampled(number(smp, "x_min", at), number(smp, "x_max", at),
                                  std::move(samples));
    } catch (const ArgumentError& e) {
      throw ConfigError(at + ": " + e.what());
    }
  }
  throw ConfigError(where + " needs either 'segments' or 'sampled'");
}

GeneratorSpec generator(const json& j, const std::string& where) {
  GeneratorSpec g;
  if (!j.is_object()) throw ConfigError(where + " must be an object");
  g.family = j.value("family", std::string("quadratic"));
  if (g.family != "quadratic" && g.family != "zero") {
    throw ConfigError(where + ".family must be 'quadratic' or 'zero'");
  }
  g.a = number_or(j, "a", 0.0, where);
  g.b = number_or(j, "b", 0.0, where);
  return g;
}

json state_json(const PrimitiveState& p) { return {{"rho", p.rho}, {"u", p.u}, {"v", p.v}}; }

json generator_json(const GeneratorSpec& g) {
  return {{"family", g.family}, {"a", g.a}, {"b", g.b}};
}

}  // namespace

EntropyPair PairSpec::build() const {
  auto make = [](const GeneratorSpec& g) {
    return g.family == "zero" ? QuadraticGenerator{0.0, 0.0} : QuadraticGenerator{g.a, g.b};
  };
  return quadratic_pair(make(F), make(G), make(H));
}

std::optional<Hypotheses> ProblemConfig::build_hypotheses() const {
  if (!hypotheses) return std::nullopt;
  const auto& h = *hypotheses;
  return Hypotheses(h.c1, h.c2, h.c3, h.c4, h.c5, h.tv_bound, params());
}

InitialData ProblemConfig::data(double half_width) const {
  if (kind == ProblemKind::Cauchy) return *initial_data;
  return InitialData::riemann(*left, *right, half_width);
}

ProblemConfig parse_config(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  ProblemConfig c;
  c.s = number(j, "s", "config");
  if (!(c.s > 0.0)) throw ConfigError("config.s must be positive");

  const std::string kind = j.value("problem", std::string());
  if (kind == "riemann") {
    c.kind = ProblemKind::Riemann;
    if (!j.contains("left") || !j.contains("right")) {
      throw ConfigError("riemann config needs 'left' and 'right' states");
    }
    c.left = state(j.at("left"), "left");
    c.right = state(j.at("right"), "right");
  } else if (kind == "cauchy") {
    c.kind = ProblemKind::Cauchy;
    if (!j.contains("initial_data")) throw ConfigError("cauchy config needs 'initial_data'");
    c.initial_data = initial_data(j.at("initial_data"));
  } else {
    throw ConfigError("config.problem must be 'riemann' or 'cauchy'");
  }

  if (j.contains("hypotheses")) {
    const json& h = j.at("hypotheses");
    const std::string at = "hypotheses";
    c.hypotheses = HypothesisConstants{number(h, "c1", at), number(h, "c2", at),
                                       number(h, "c3", at), number(h, "c4", at),
                                       number(h, "c5", at), number(h, "tv_bound", at)};
    try {
      (void)c.build_hypotheses();
    } catch (const ArgumentError& e) {
      throw ConfigError(std::string("hypotheses: ") + e.what());
    }
  }

  if (j.contains("output")) {
    const json& o = j.at("output");
    if (o.contains("t")) c.output.times = numbers(o, "t", "output");
    c.output.x_min = number_or(o, "x_min", c.output.x_min, "output");
    c.output.x_max = number_or(o, "x_max", c.output.x_max, "output");
    c.output.n_samples = static_cast<int>(number_or(o, "n_samples", c.output.n_samples, "output"));
  }
  if (c.output.times.empty()) throw ConfigError("output.t must not be empty");
  for (double t : c.output.times) {
    if (!(t > 0.0)) throw ConfigError("output.t values must be positive");
  }
  if (!(c.output.x_max > c.output.x_min)) throw ConfigError("output.x_max must exceed x_min");
  if (c.output.n_samples < 2) throw ConfigError("output.n_samples must be at least 2");

  if (j.contains("oracle")) {
    const json& o = j.at("oracle");
    c.oracle.n_cells = static_cast<int>(number_or(o, "n_cells", c.oracle.n_cells, "oracle"));
    c.oracle.cfl = number_or(o, "cfl", c.oracle.cfl, "oracle");
    c.oracle.t_end = number_or(o, "t_end", c.oracle.t_end, "oracle");
  }
  if (c.oracle.n_cells < 4) throw ConfigError("oracle.n_cells must be at least 4");
  if (!(c.oracle.cfl > 0.0 && c.oracle.cfl <= 0.5)) {
    throw ConfigError("oracle.cfl must lie in (0, 0.5]");
  }
  if (!(c.oracle.t_end > 0.0)) throw ConfigError("oracle.t_end must be positive");

  if (j.contains("entropy_pairs")) {
    int i = 0;
    for (const auto& p : j.at("entropy_pairs")) {
      const std::string at = "entropy_pairs[" + std::to_string(i++) + "]";
      PairSpec spec;
      if (p.contains("F")) spec.F = generator(p.at("F"), at + ".F");
      if (p.contains("G")) spec.G = generator(p.at("G"), at + ".G");
      if (p.contains("H")) spec.H = generator(p.at("H"), at + ".H");
      c.entropy_pairs.push_back(spec);
    }
  }

  c.map_resolution = static_cast<int>(number_or(j, "map_resolution", c.map_resolution, "config"));
  if (c.map_resolution < 2) throw ConfigError("config.map_resolution must be at least 2");
  return c;
}

ProblemConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  return parse_config(j);
}

json to_json(const ProblemConfig& c) {
  json j;
  j["s"] = c.s;
  if (c.kind == ProblemKind::Riemann) {
    j["problem"] = "riemann";
    j["left"] = state_json(*c.left);
    j["right"] = state_json(*c.right);
  } else {
    j["problem"] = "cauchy";
    const InitialData& d = *c.initial_data;
    if (d.is_piecewise_constant()) {
      json segs = json::array();
      for (const auto& seg : d.segments()) {
        json s = state_json(seg.state);
        s["x_begin"] = seg.x_begin;
        s["x_end"] = seg.x_end;
        segs.push_back(s);
      }
      j["initial_data"] = {{"segments", segs}};
    } else {
      json rho = json::array(), u = json::array(), v = json::array();
      for (const auto& p : d.samples()) {
        rho.push_back(p.rho);
        u.push_back(p.u);
        v.push_back(p.v);
      }
      j["initial_data"] = {
          {"sampled",
           {{"x_min", d.x_min()}, {"x_max", d.x_max()}, {"rho", rho}, {"u", u}, {"v", v}}}};
    }
  }
  if (c.hypotheses) {
    const auto& h = *c.hypotheses;
    j["hypotheses"] = {{"c1", h.c1}, {"c2", h.c2}, {"c3", h.c3},
                       {"c4", h.c4}, {"c5", h.c5}, {"tv_bound", h.tv_bound}};
  }
  j["output"] = {{"t", c.output.times},
                 {"x_min", c.output.x_min},
                 {"x_max", c.output.x_max},
                 {"n_samples", c.output.n_samples}};
  j["oracle"] = {{"n_cells", c.oracle.n_cells}, {"cfl", c.oracle.cfl}, {"t_end", c.oracle.t_end}};
  json pairs = json::array();
  for (const auto& p : c.entropy_pairs) {
    pairs.push_back(
        {{"F", generator_json(p.F)}, {"G", generator_json(p.G)}, {"H", generator_json(p.H)}});
  }
  j["entropy_pairs"] = pairs;
  j["map_resolution"] = c.map_resolution;
  return j;
}

}  // namespace templeflow
