#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "scenario.hpp"
#include "tatecoh/errors.hpp"

using namespace tatecoh;
using namespace tatecoh::cli;

namespace {

std::string error_of(const std::string& doc, const Overrides& ov = {}) {
  try {
    parse_scenario(doc, ov);
  } catch (const std::exception& e) {
    return e.what();
  }
  return {};
}

const Json& result(const Json& rep, const std::string& kind) {
  for (const Json& r : rep["results"])
    if (r["analysis"] == kind) return r;
  throw std::runtime_error("no " + kind + " result");
}

std::vector<std::string> tate_groups(const Json& rep) {
  std::vector<std::string> out;
  for (const Json& d : result(rep, "tate")["degrees"]) out.push_back(d["group"]);
  return out;
}

const char* const kMinimal = R"({"group": {"kind": "cyclic", "order": 4},
  "coefficients": {"kind": "trivial"}, "analyses": ["formation"]})";

}  // namespace

TEST(Scenario, MinimalDocumentParses) {
  const ScenarioSpec s = parse_scenario(kMinimal);
  EXPECT_EQ(s.group.kind, "cyclic");
  EXPECT_EQ(s.group.n, 4u);
  EXPECT_EQ(s.coefficients.kind, "trivial");
  EXPECT_EQ(s.coefficients.module.torsion, 0);
  ASSERT_EQ(s.analyses.size(), 1u);
  EXPECT_EQ(s.analyses[0].kind, "formation");
  EXPECT_EQ(s.options, OptionsSpec{});
}

TEST(Scenario, UnknownAnalysisNamesTheField) {
  const std::string e = error_of(R"({"group": {"kind": "cyclic", "order": 2}, "coefficients": {"kind": "trivial"},
    "analyses": ["tate", {"kind": "reciprocity-law"}]})");
  EXPECT_NE(e.find("analyses[1].kind"), std::string::npos) << e;
  EXPECT_NE(e.find("unknown analysis 'reciprocity-law'"), std::string::npos) << e;
  EXPECT_THROW(parse_scenario(R"({"group": {"kind": "cyclic", "order": 2}, "coefficients": {"kind": "trivial"},
    "analyses": ["cohomology"]})"),
               InputError);
}

TEST(Scenario, OversizedGroupIsRefusedWithTheCap) {
  const std::string doc = R"({"group": {"kind": "cyclic", "order": 30}, "coefficients": {"kind": "trivial"},
    "analyses": ["tate"]})";
  EXPECT_THROW(parse_scenario(doc), ComputationError);
  const std::string e = error_of(doc);
  EXPECT_NE(e.find("30"), std::string::npos) << e;
  EXPECT_NE(e.find("--max-order 24"), std::string::npos) << e;
  Overrides ov;
  ov.max_order = 30;
  EXPECT_NO_THROW(parse_scenario(doc, ov));
  const std::string product = R"({"group": {"kind": "product", "factors": [{"kind": "symmetric", "degree": 5},
    {"kind": "cyclic", "order": 2}]}, "coefficients": {"kind": "trivial"}, "analyses": ["tate"]})";
  EXPECT_NE(error_of(product).find("--max-order 24"), std::string::npos);
}

TEST(Scenario, SyntaxErrorsCarryLineAndColumn) {
  const std::string e = error_of("{\n  \"group\": {\"kind\": \"cyclic\",,\n}");
  EXPECT_EQ(e.rfind("line 2, column ", 0), 0u) << e;
}

TEST(Scenario, SchemaErrorsCarryFieldPaths) {
  EXPECT_NE(error_of(R"({"group": {"kind": "cyclic", "order": 2}, "coefficients": {"kind": "trivial"},
    "analyses": ["tate"], "options": {"windw": 3}})").find("options.windw: unknown field"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"group": {"kind": "cyclic", "order": "two"}, "coefficients": {"kind": "trivial"},
    "analyses": ["tate"]})").find("group.order: expected an integer"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"group": {"kind": "cyclic", "order": 2}, "analyses": ["tate"]})").find("coefficients: missing field"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"group": {"kind": "cyclic", "order": 2}, "coefficients": {"kind": "complex", "lo": 0,
    "terms": [{"kind": "trivial"}, {"kind": "explicit", "torsion": [0], "actions": [[[1]], [[1, 0]]]}],
    "differentials": [[[2]]]}, "analyses": ["tate"]})").find("coefficients.terms[1].actions[1][0]"),
            std::string::npos);
  // a map that is not equivariant
  const std::string e = error_of(R"({"group": {"kind": "cyclic", "order": 2}, "coefficients": {"kind": "complex",
    "lo": 0, "terms": [{"kind": "trivial"}, {"kind": "explicit", "torsion": [0], "actions": [[[1]], [[-1]]]}],
    "differentials": [[[2]]]}, "analyses": ["tate"]})");
  EXPECT_EQ(e.rfind("coefficients: ", 0), 0u) << e;
  EXPECT_NE(error_of(R"({"group": {"kind": "table", "table": [[0, 1], [1, 1]]}, "coefficients": {"kind": "trivial"},
    "analyses": ["tate"]})").rfind("group: ", 0),
            std::string::npos);
}

TEST(Scenario, WindowAndCapsAreEnforced) {
  const std::string doc = R"({"group": {"kind": "cyclic", "order": 3}, "coefficients": {"kind": "trivial"},
    "analyses": [{"kind": "tate", "range": [-4, 4]}], "options": {"window": 4}})";
  const std::string e = error_of(doc);
  EXPECT_NE(e.find("window of 5"), std::string::npos) << e;
  EXPECT_THROW(parse_scenario(doc), ComputationError);
  Overrides ov;
  ov.window = 5;
  EXPECT_EQ(parse_scenario(doc, ov).options.window, 5);

  const std::string bar = R"({"group": {"kind": "symmetric", "degree": 3}, "coefficients": {"kind": "trivial"},
    "analyses": ["tate"], "options": {"range": "-5..5", "window": 12}})";
  EXPECT_THROW(parse_scenario(bar), ComputationError);
  EXPECT_NE(error_of(bar).find("above the cap 20000"), std::string::npos);

  EXPECT_NE(error_of(R"({"group": {"kind": "symmetric", "degree": 3}, "coefficients": {"kind": "trivial"},
    "analyses": ["tate"], "options": {"engine": "periodic"}})").find("options.engine"),
            std::string::npos);
  EXPECT_NE(error_of(kMinimal, Overrides{.engine = "spectral"}).find("options.engine"), std::string::npos);
}

TEST(Scenario, RangeSyntax) {
  EXPECT_EQ(parse_range("-2..3"), std::make_pair(-2, 3));
  EXPECT_EQ(parse_range("4..4"), std::make_pair(4, 4));
  EXPECT_THROW(parse_range("3..-2"), InputError);
  EXPECT_THROW(parse_range("-2,3"), InputError);
  EXPECT_THROW(parse_range("a..3"), InputError);
}

TEST(Scenario, RoundTripIsIdentity) {
  std::vector<std::string> docs;
  for (const CatalogEntry& e : catalog()) docs.push_back(e.document);
  docs.push_back(kMinimal);
  docs.push_back(R"({"name": "x", "group": {"kind": "table", "table": [[0, 1], [1, 0]], "name": "C2"},
    "coefficients": {"kind": "complex", "lo": -1, "terms": [{"kind": "trivial"}, {"kind": "trivial", "torsion": 2}],
      "differentials": [[[1]]], "shift": 1},
    "analyses": [{"kind": "tate-nakayama", "class": [1], "range": "-1..2"}, {"kind": "cone-les", "m": 3}],
    "options": {"engine": "bar", "window": 7, "bar_cap": 500, "max_order": 12, "range": [-1, 1]}})");
  docs.push_back(R"({"group": {"kind": "cyclic", "order": 2},
    "coefficients": {"kind": "explicit", "torsion": [0, 3], "actions": [[[1, 0], [0, 1]], [[-1, 0], [0, 2]]], "degree": -1},
    "analyses": ["tate", "norm-table"]})");
  for (const std::string& d : docs) {
    const ScenarioSpec s = parse_scenario(d);
    const Json j = serialize(s);
    const ScenarioSpec t = parse_scenario_json(j);
    EXPECT_EQ(s, t) << d;
    EXPECT_EQ(j.dump(), serialize(t).dump());
    EXPECT_EQ(parse_scenario(j.dump(2)), s);
  }
}

TEST(Scenario, OverridesTakePrecedence) {
  Overrides ov;
  ov.range = std::make_pair(-1, 1);
  ov.engine = "bar";
  const ScenarioSpec s = parse_scenario(kMinimal, ov);
  EXPECT_EQ(s.options.range, std::make_pair(-1, 1));
  EXPECT_EQ(s.options.engine, "bar");
  const Json rep = run_scenario(parse_scenario(R"({"group": {"kind": "cyclic", "order": 4},
    "coefficients": {"kind": "trivial"}, "analyses": ["tate"]})", ov));
  EXPECT_EQ(rep["resolution"]["engine"], "bar");
  EXPECT_EQ(tate_groups(rep), (std::vector<std::string>{"0", "Z/4", "0"}));
}

TEST(Catalog, AtLeastEightEntriesWithVerdicts) {
  const auto& c = catalog();
  EXPECT_GE(c.size(), 8u);
  std::set<std::string> names;
  for (const CatalogEntry& e : c) {
    EXPECT_FALSE(e.expect.empty()) << e.name;
    EXPECT_FALSE(e.description.empty()) << e.name;
    EXPECT_TRUE(names.insert(e.name).second) << e.name;
    EXPECT_EQ(&catalog_entry(e.name), &e);
  }
  for (const char* n : {"unramified-cyclic-6", "klein-four-z", "hilbert90-f4", "zhat1-f4", "tautological-s3"})
    EXPECT_TRUE(names.count(n)) << n;
  EXPECT_THROW(catalog_entry("no-such-demo"), InputError);
}

TEST(Catalog, UnramifiedCyclicSixIsAFormation) {
  const Json rep = run_scenario(parse_scenario(catalog_entry("unramified-cyclic-6").document));
  const Json& f = result(rep, "formation");
  EXPECT_EQ(f["verdict"], "PASS");
  EXPECT_EQ(f["reciprocity"]["source"], "Z/6");
  EXPECT_EQ(f["reciprocity"]["target"], "Z/6");
  EXPECT_TRUE(f["reciprocity"]["isomorphism"].get<bool>());
  EXPECT_EQ(f["C3"]["witnesses"], 2);  // the units of Z/6
  EXPECT_EQ(result(rep, "tate-nakayama")["verdict"], "PASS");
  EXPECT_EQ(result(rep, "norm-table")["rows"].size(), 4u);
}

TEST(Catalog, KleinFourFailsAtC2) {
  const Json rep = run_scenario(parse_scenario(catalog_entry("klein-four-z").document));
  const Json& f = result(rep, "formation");
  EXPECT_EQ(f["verdict"], "FAIL");
  EXPECT_EQ(f["first_failure"], "C2");
  EXPECT_TRUE(f["axioms"]["C1"].get<bool>());
  EXPECT_TRUE(f["axioms"]["C3"].is_null());
  const Json& t = result(rep, "tate-nakayama");
  EXPECT_TRUE(t["hypothesis_i"].get<bool>());
  EXPECT_FALSE(t["hypothesis_ii"].get<bool>());
}

TEST(Catalog, HilbertNinety) {
  for (const char* n : {"hilbert90-f4", "hilbert90-f9", "hilbert90-f8"}) {
    const Json rep = run_scenario(parse_scenario(catalog_entry(n).document));
    for (const Json& d : result(rep, "tate")["degrees"])
      if (d["q"] == 1) EXPECT_EQ(d["group"], "0") << n;
  }
}

TEST(Catalog, EveryExpectationIsMet) {
  for (const CatalogEntry& e : catalog()) {
    const Json rep = run_scenario(parse_scenario(e.document));
    EXPECT_TRUE(rep["expectation_met"].get<bool>()) << e.name << ": " << rep["summary"].dump();
  }
}

TEST(Catalog, ReportsMatchGoldenFiles) {
  for (const CatalogEntry& e : catalog()) {
    std::ifstream in(std::string(TATECOH_GOLDEN_DIR) + "/" + e.name + ".json");
    ASSERT_TRUE(in) << e.name;
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(run_scenario(parse_scenario(e.document)).dump(2) + "\n", ss.str()) << e.name;
  }
}

TEST(Report, Deterministic) {
  for (const char* n : {"tautological-s3", "unramified-cyclic-4", "s3-z"}) {
    const ScenarioSpec s = parse_scenario(catalog_entry(n).document);
    const Json a = run_scenario(s), b = run_scenario(s);
    EXPECT_EQ(a.dump(), b.dump());
    EXPECT_EQ(render_text(a), render_text(b));
    EXPECT_EQ(a.dump().find("timing_ms"), std::string::npos);
  }
  const Json timed = run_scenario(parse_scenario(kMinimal), true);
  EXPECT_TRUE(timed["results"][0].contains("timing_ms"));
}

TEST(Report, ExplicitComplexAndModule) {
  // Z --2--> Z in degrees 0, 1 is quasi-isomorphic to Z/2 in degree 1.
  const Json a = run_scenario(parse_scenario(R"({"group": {"kind": "cyclic", "order": 2},
    "coefficients": {"kind": "complex", "lo": 0, "terms": [{"kind": "trivial"}, {"kind": "trivial"}],
      "differentials": [[[2]]]}, "analyses": ["tate"]})"));
  EXPECT_EQ(tate_groups(a), std::vector<std::string>(6, "Z/2"));
  // Z with the sign action: Hhat^0 = 0, Hhat^1 = Z/2.
  const Json b = run_scenario(parse_scenario(R"({"group": {"kind": "cyclic", "order": 2},
    "coefficients": {"kind": "explicit", "torsion": [0], "actions": [[[1]], [[-1]]]},
    "analyses": [{"kind": "tate", "range": [0, 1]}]})"));
  EXPECT_EQ(tate_groups(b), (std::vector<std::string>{"0", "Z/2"}));
  // The same module shifted by one: Hhat^q(C[1]) = Hhat^{q+1}(C).
  const Json c = run_scenario(parse_scenario(R"({"group": {"kind": "cyclic", "order": 2},
    "coefficients": {"kind": "explicit", "torsion": [0], "actions": [[[1]], [[-1]]], "shift": 1},
    "analyses": [{"kind": "tate", "range": [-1, 0]}]})"));
  EXPECT_EQ(tate_groups(c), (std::vector<std::string>{"0", "Z/2"}));
}

TEST(Report, ClassOfWrongLengthIsRejected) {
  EXPECT_THROW(run_scenario(parse_scenario(R"({"group": {"kind": "cyclic", "order": 2},
    "coefficients": {"kind": "trivial"}, "analyses": [{"kind": "tate-nakayama", "class": [1, 0]}]})")),
               InputError);
  // a non-generator fails hypothesis (ii)
  const Json rep = run_scenario(parse_scenario(R"({"group": {"kind": "cyclic", "order": 4},
    "coefficients": {"kind": "trivial"}, "analyses": [{"kind": "tate-nakayama", "class": [2]}]})"));
  EXPECT_EQ(rep["results"][0]["verdict"], "FAIL");
  EXPECT_FALSE(rep["results"][0]["hypothesis_ii"].get<bool>());
}

TEST(Report, NormTableSkippedWithoutFormation) {
  const Json rep = run_scenario(parse_scenario(R"({"group": {"kind": "product", "factors": [{"kind": "cyclic",
    "order": 2}, {"kind": "cyclic", "order": 2}]}, "coefficients": {"kind": "trivial"}, "analyses": ["norm-table"]})"));
  EXPECT_EQ(rep["results"][0]["verdict"], "SKIPPED");
}
