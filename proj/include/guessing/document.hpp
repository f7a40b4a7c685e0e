#pragma once

#include <string>
#include <utility>
#include <vector>

#include "guessing/strategy.hpp"
#include "guessing/types.hpp"
#include "guessing/verify.hpp"

namespace guessing {

// Serialized strategy: game tag, representation payload, support, and a
// table of (x, F(x)) samples at export resolution. JSON is canonical and
// round-trips exactly; CSV is export-only.
struct StrategyDocument {
  int schema_version = 1;
  Rule rule = Rule::PriceIsRight;
  int players = 2;
  StrategyCdf strategy = StrategyCdf::pir2_closed_form();
  std::vector<std::pair<double, double>> samples;
};

StrategyDocument make_document(Rule rule, int players, const StrategyCdf& strategy,
                               int resolution = 512);

std::string document_to_json(const StrategyDocument& doc);
StrategyDocument document_from_json(const std::string& text);

void write_document(const StrategyDocument& doc, const std::string& path);
StrategyDocument read_document(const std::string& path);

// CSV with header x,F: the sample table only.
std::string document_to_csv(const StrategyDocument& doc);

std::string report_to_json(const EquilibriumReport& report);

// Target CDF table from a two-column CSV (x,G) or a JSON array of pairs.
TargetModel read_target_table(const std::string& path);

}  // namespace guessing
