#include "guessing/document.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace guessing {

using nlohmann::json;

namespace {

std::vector<std::pair<double, double>> sample_table(const StrategyCdf& f, int resolution) {
  std::vector<std::pair<double, double>> samples;
  double lo = f.support_lo(), hi = f.support_hi();
  switch (f.kind()) {
    case StrategyCdf::Kind::PointMass:
      // Atom rendered as a jump: two rows at the same x.
      samples.push_back({lo, 0.0});
      samples.push_back({lo, 1.0});
      break;
    case StrategyCdf::Kind::Discrete: {
      const auto& p = f.discrete_profile();
      int n = p.size();
      samples.push_back({lo, 0.0});
      double cum = 0.0;
      for (int i = 1; i <= n; ++i) {
        cum += p.probs[i - 1];
        double x = static_cast<double>(i) / n;
        if (x >= lo && x <= hi) samples.push_back({x, cum});
      }
      break;
    }
    default:
      samples.reserve(resolution + 1);
      for (int i = 0; i <= resolution; ++i) {
        double x = lo + (hi - lo) * i / resolution;
        samples.push_back({x, f.evaluate(x)});
      }
  }
  return samples;
}

json series_to_json(const SeriesSolution& s, bool folded) {
  json j;
  j["kind"] = folded ? "folded_odd" : "direct";
  j["coefficients"] = s.coefficients;
  j["support_upper"] = s.support_upper;
  j["truncation_order"] = s.truncation_order;
  return j;
}

SeriesSolution series_from_json(const json& j, Rule rule, int players) {
  SeriesSolution s;
  s.coefficients = j.at("coefficients").get<std::vector<double>>();
  s.support_upper = j.at("support_upper").get<double>();
  s.truncation_order = j.value("truncation_order",
                               static_cast<int>(s.coefficients.size()) - 1);
  s.rule = rule;
  s.players = players;
  return s;
}

json representation_to_json(const StrategyCdf& f) {
  json j;
  switch (f.kind()) {
    case StrategyCdf::Kind::ClosedFormPir2:
      j["representation"] = "closed_form_pir2";
      break;
    case StrategyCdf::Kind::Uniform:
      j["representation"] = "uniform";
      j["lo"] = f.support_lo();
      j["hi"] = f.support_hi();
      break;
    case StrategyCdf::Kind::PointMass:
      j["representation"] = "point_mass";
      j["x"] = f.atom();
      break;
    case StrategyCdf::Kind::Series:
      j["representation"] = "series";
      j["series"] = series_to_json(f.series_solution(), f.series_is_folded());
      break;
    case StrategyCdf::Kind::Discrete:
      j["representation"] = "discrete";
      j["probabilities"] = f.discrete_profile().probs;
      j["grid_size"] = f.discrete_profile().size();
      j["grid_map"] = "i_over_n";
      break;
    case StrategyCdf::Kind::Composed: {
      j["representation"] = "composed";
      j["base"] = representation_to_json(f.base());
      json knots = json::array();
      for (const auto& [x, g] : f.target().knots()) knots.push_back({x, g});
      j["target_table"] = knots;
      break;
    }
  }
  return j;
}

StrategyCdf representation_from_json(const json& j, Rule rule, int players) {
  std::string tag = j.at("representation").get<std::string>();
  if (tag == "closed_form_pir2") return StrategyCdf::pir2_closed_form();
  if (tag == "uniform")
    return StrategyCdf::uniform(j.at("lo").get<double>(), j.at("hi").get<double>());
  if (tag == "point_mass") return StrategyCdf::point_mass(j.at("x").get<double>());
  if (tag == "series") {
    const json& sj = j.at("series");
    SeriesSolution s = series_from_json(sj, rule, players);
    if (sj.at("kind").get<std::string>() == "folded_odd")
      return StrategyCdf::folded_series(std::move(s));
    return StrategyCdf::series(std::move(s));
  }
  if (tag == "discrete") {
    DiscreteProfile p;
    p.probs = j.at("probabilities").get<std::vector<double>>();
    return StrategyCdf::discrete(std::move(p));
  }
  if (tag == "composed") {
    StrategyCdf base = representation_from_json(j.at("base"), rule, players);
    std::vector<std::pair<double, double>> knots;
    for (const auto& k : j.at("target_table"))
      knots.push_back({k.at(0).get<double>(), k.at(1).get<double>()});
    return StrategyCdf::composed(std::move(base), TargetModel::table(std::move(knots)));
  }
  throw std::domain_error("unknown strategy representation '" + tag + "'");
}

}  // namespace

StrategyDocument make_document(Rule rule, int players, const StrategyCdf& strategy,
                               int resolution) {
  if (resolution < 1) throw std::domain_error("make_document: resolution must be >= 1");
  StrategyDocument doc;
  doc.rule = rule;
  doc.players = players;
  doc.strategy = strategy;
  doc.samples = sample_table(strategy, resolution);
  return doc;
}

std::string document_to_json(const StrategyDocument& doc) {
  json j;
  j["schema_version"] = doc.schema_version;
  j["game"] = {{"rule", to_string(doc.rule)}, {"players", doc.players}};
  j.update(representation_to_json(doc.strategy));
  j["support"] = {doc.strategy.support_lo(), doc.strategy.support_hi()};
  json samples = json::array();
  for (const auto& [x, fx] : doc.samples) samples.push_back({x, fx});
  j["samples"] = samples;
  return j.dump(2) + "\n";
}

StrategyDocument document_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed strategy document: ") + e.what());
  }
  try {
    StrategyDocument doc;
    doc.schema_version = j.at("schema_version").get<int>();
    if (doc.schema_version != 1)
      throw std::runtime_error("unsupported schema_version");
    doc.rule = rule_from_string(j.at("game").at("rule").get<std::string>());
    doc.players = j.at("game").at("players").get<int>();
    if (doc.players < 2) throw std::runtime_error("players must be >= 2");
    doc.strategy = representation_from_json(j, doc.rule, doc.players);
    for (const auto& s : j.at("samples"))
      doc.samples.push_back({s.at(0).get<double>(), s.at(1).get<double>()});
    return doc;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed strategy document: ") + e.what());
  }
}

void write_document(const StrategyDocument& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << document_to_json(doc);
}

StrategyDocument read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return document_from_json(buf.str());
}

std::string document_to_csv(const StrategyDocument& doc) {
  std::ostringstream out;
  out << "x,F\n";
  char line[80];
  for (const auto& [x, fx] : doc.samples) {
    std::snprintf(line, sizeof(line), "%.17g,%.17g\n", x, fx);
    out << line;
  }
  return out.str();
}

std::string report_to_json(const EquilibriumReport& report) {
  json j;
  j["game"] = {{"rule", to_string(report.rule)}, {"players", report.players}};
  switch (report.method) {
    case VerifyMethod::Quadrature:
      j["method"] = "quadrature";
      break;
    case VerifyMethod::MonteCarlo:
      j["method"] = "monte_carlo";
      j["samples"] = report.mc_samples;
      j["seed"] = report.mc_seed;
      break;
    case VerifyMethod::DiscreteExact:
      j["method"] = "discrete";
      break;
  }
  j["tol"] = report.tol;
  json grid = json::array();
  for (std::size_t i = 0; i < report.grid.size(); ++i)
    grid.push_back({{"x", report.grid[i]},
                    {"v", report.values[i]},
                    {"on_support", static_cast<bool>(report.on_support[i])}});
  j["grid"] = grid;
  j["max_abs_on_support"] = report.max_abs_on_support;
  j["max_positive_off_support"] = report.max_positive_off_support;
  j["game_value_per_player"] = report.game_value_per_player;
  j["pass"] = report.pass;
  return j.dump(2) + "\n";
}

TargetModel read_target_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();

  std::vector<std::pair<double, double>> knots;
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    json j;
    try {
      j = json::parse(text);
      for (const auto& k : j) knots.push_back({k.at(0).get<double>(), k.at(1).get<double>()});
    } catch (const json::exception& e) {
      throw std::runtime_error(std::string("malformed target table: ") + e.what());
    }
  } else {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::replace(line.begin(), line.end(), ',', ' ');
      std::istringstream fields(line);
      double x, g;
      if (fields >> x >> g) knots.push_back({x, g});  // header lines fail to parse
    }
  }
  return TargetModel::table(std::move(knots));
}

}  // namespace guessing
