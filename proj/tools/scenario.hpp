#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "tatecoh/gcomplex.hpp"

namespace tatecoh::cli {

using Json = nlohmann::ordered_json;
using Rows = std::vector<std::vector<long long>>;

struct GroupSpec {
  std::string kind;  // cyclic, product, symmetric, table
  std::size_t n = 0;  // order of a cyclic group, degree of a symmetric group
  std::vector<GroupSpec> factors;
  std::vector<std::vector<int>> table;
  std::string name;
  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

struct ModuleSpec {
  std::string kind;        // trivial, regular, finite-field-units, explicit
  long long torsion = 0;   // trivial: 0 for Z, n >= 2 for Z/n
  long long p = 0, f = 1;  // finite-field-units over Z/n with n = |G|
  std::vector<long long> diagonal;  // explicit: Z/t_i per generator, 0 for Z
  std::vector<Rows> actions;        // explicit: one matrix per element id
  friend bool operator==(const ModuleSpec&, const ModuleSpec&) = default;
};

struct CoefficientSpec {
  std::string kind;  // a module kind, tensor-power-shift or complex
  ModuleSpec module;  // single module, or the base of a tensor power
  int degree = 0;
  int power = 0;
  int lo = 0;
  std::vector<ModuleSpec> terms;
  std::vector<Rows> differentials;
  int shift = 0;  // applied last
  friend bool operator==(const CoefficientSpec&, const CoefficientSpec&) = default;
};

struct AnalysisSpec {
  std::string kind;  // tate, formation, tate-nakayama, cone-les, norm-table
  std::optional<std::pair<int, int>> range;
  long long m = 0;
  std::optional<std::vector<long long>> cls;
  friend bool operator==(const AnalysisSpec&, const AnalysisSpec&) = default;
};

struct OptionsSpec {
  std::string engine = "auto";
  int window = 6;
  std::size_t max_order = 24;
  std::size_t bar_cap = 20000;
  std::pair<int, int> range{-2, 3};
  friend bool operator==(const OptionsSpec&, const OptionsSpec&) = default;
};

struct ScenarioSpec {
  std::string name, description, expect;
  GroupSpec group;
  CoefficientSpec coefficients;
  std::vector<AnalysisSpec> analyses;
  OptionsSpec options;
  friend bool operator==(const ScenarioSpec&, const ScenarioSpec&) = default;
};

/// Command-line values that take precedence over the document's options.
struct Overrides {
  std::optional<std::string> engine;
  std::optional<int> window;
  std::optional<std::size_t> max_order;
  std::optional<std::pair<int, int>> range;
};

/// Parses and validates a scenario document. Syntax errors carry line and column,
/// schema errors a field path (InputError); a group above --max-order or a window
/// beyond the caps raises ComputationError.
ScenarioSpec parse_scenario(const std::string& text, const Overrides& ov = {});
ScenarioSpec parse_scenario_json(const Json& doc, const Overrides& ov = {});
Json serialize(const ScenarioSpec& spec);

/// "a..b" with a <= b.
std::pair<int, int> parse_range(const std::string& s);

FiniteGroup build_group(const GroupSpec& g, std::size_t max_order);
GComplex build_coefficients(const FiniteGroup& g, const CoefficientSpec& c);

/// Smallest window serving every analysis of the scenario.
int planned_window(const ScenarioSpec& spec, const GComplex& c);

/// Deterministic report; timings only when asked for.
Json run_scenario(const ScenarioSpec& spec, bool timing = false);
std::string render_text(const Json& report);

struct CatalogEntry {
  std::string name, description, expect, document;
};
const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& name);

}  // namespace tatecoh::cli
