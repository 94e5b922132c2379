#include <chrono>
#include <iomanip>
#include <memory>
#include <sstream>

#include "scenario.hpp"
#include "tatecoh/errors.hpp"
#include "tatecoh/formation.hpp"
#include "tatecoh/tate.hpp"

namespace tatecoh::cli {

namespace {

const char* const kConvention =
    "u_G is the least k in 1..|G|-1, gcd(k,|G|) = 1, whose multiple of the first canonical generator restricts "
    "to generators on every subgroup; a convention, not canonical";

Json num(const Integer& v) { return v.fits_int64() ? Json(v.to_int64()) : Json(v.to_string()); }

Json vec(std::span<const Integer> v) {
  Json j = Json::array();
  for (const Integer& x : v) j.push_back(num(x));
  return j;
}

Json matrix(const IntMatrix& m) {
  Json j = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) j.push_back(vec(m.row(r)));
  return j;
}

Json subgroup(const Subgroup& h) {
  return {{"elements", h.elements}, {"order", h.order()}, {"normal", h.is_normal}};
}

Json group_entry(const AbGroup& a) {
  return {{"group", a.to_string()}, {"torsion", vec(a.torsion)}, {"free_rank", a.free_rank}};
}

std::string describe(const std::vector<int>& e) {
  std::string s = "{";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + "}";
}

std::string range_text(std::pair<int, int> r) { return "[" + std::to_string(r.first) + ", " + std::to_string(r.second) + "]"; }

struct Context {
  const ScenarioSpec& spec;
  FiniteGroup group;
  GComplex c;
  ResolutionPtr x;
  std::optional<FormationReport> formation;

  const FormationReport& formation_report() {
    if (!formation) formation = check_class_formation(x, c, spec.options.max_order);
    return *formation;
  }
};

Json run_tate(Context& ctx, std::pair<int, int> r, std::vector<std::string>& summary) {
  const TateCohomology t(ctx.x, ctx.c, r.first, r.second);
  Json j{{"analysis", "tate"}, {"range", {r.first, r.second}}};
  Json degrees = Json::array();
  std::string line = "tate:";
  for (int q = r.first; q <= r.second; ++q) {
    Json d{{"q", q}};
    d.update(group_entry(t.group(q)));
    degrees.push_back(d);
    line += (q == r.first ? " " : ", ") + std::string("Hhat^") + std::to_string(q) + " = " + t.group(q).to_string();
  }
  j["degrees"] = degrees;
  summary.push_back(line);
  return j;
}

Json formation_json(const FormationReport& f) {
  Json j{{"analysis", "formation"}, {"verdict", f.is_formation() ? "PASS" : "FAIL"}};
  j["first_failure"] = f.first_failure.empty() ? Json() : Json(f.first_failure);
  j["detail"] = f.detail.empty() ? Json() : Json(f.detail);
  j["axioms"] = {{"C1", f.c1}, {"C2", f.c2}};
  j["axioms"]["C3"] = f.c1 && f.c2 ? Json(f.c3) : Json();
  Json rows = Json::array();
  for (const FormationRow& r : f.rows) {
    Json row = subgroup(r.subgroup);
    row["H1"] = r.h1;
    row["H2"] = r.h2;
    row["C1"] = r.c1;
    row["C2"] = r.c2;
    if (f.is_formation()) row["u"] = vec(r.u);
    rows.push_back(row);
  }
  j["subgroups"] = rows;
  if (f.c1 && f.c2)
    j["C3"] = {{"candidates", f.candidates},
               {"witnesses", f.witnesses},
               {"compatibility", f.compatibility},
               {"invariant_square", f.invariant_square}};
  if (f.is_formation()) {
    j["fundamental_class"] = vec(f.fundamental_class);
    j["convention"] = kConvention;
  }
  return j;
}

Json run_formation(Context& ctx, std::vector<std::string>& summary) {
  const FormationReport& f = ctx.formation_report();
  Json j = formation_json(f);
  summary.push_back(std::string("formation: ") + (f.is_formation() ? "PASS" : "FAIL (" + f.first_failure + ")"));
  if (f.is_formation()) {
    const ReciprocityReport r = reciprocity_map(ctx.x, ctx.c, f.fundamental_class);
    j["reciprocity"] = {{"source", r.source},
                        {"target", r.target},
                        {"matrix", matrix(r.matrix)},
                        {"generator_images", r.generator_images},
                        {"isomorphism", r.isomorphism},
                        {"density", r.density}};
    summary.push_back("reciprocity: " + r.source + " -> " + r.target + (r.isomorphism ? " isomorphism" : " not an isomorphism"));
  }
  return j;
}

Json run_norm_table(Context& ctx, std::vector<std::string>& summary) {
  const FormationReport& f = ctx.formation_report();
  Json j{{"analysis", "norm-table"}};
  if (!f.is_formation()) {
    j["verdict"] = "SKIPPED";
    j["reason"] = "not a class formation (first failure " + f.first_failure + ")";
    summary.push_back("norm-table: SKIPPED");
    return j;
  }
  const auto rows = norm_group_table(ctx.x, ctx.c, f.fundamental_class, ctx.spec.options.max_order);
  Json out = Json::array();
  bool all = true;
  for (const NormRow& r : rows) {
    Json row = subgroup(r.subgroup);
    row["quotient"] = r.quotient;
    row["expected"] = r.expected;
    row["isomorphism"] = r.isomorphism;
    all = all && r.isomorphism;
    out.push_back(row);
  }
  j["verdict"] = all ? "PASS" : "FAIL";
  j["rows"] = out;
  summary.push_back("norm-table: " + std::string(all ? "PASS" : "FAIL") + " (" + std::to_string(rows.size()) + " rows)");
  return j;
}

Json run_tnk(Context& ctx, const AnalysisSpec& a, std::pair<int, int> r, const std::string& path,
             std::vector<std::string>& summary) {
  const TateCohomology h2(ctx.x, ctx.c, 2, 2);
  const std::size_t k = h2.group(2).ngens();
  IntVector cls(k);
  std::string source;
  if (a.cls) {
    if (a.cls->size() != k)
      throw InputError(path + ".class: expected " + std::to_string(k) + " coordinates for Hhat^2(G, C) = " +
                       h2.group(2).to_string());
    for (std::size_t i = 0; i < k; ++i) cls[i] = Integer((*a.cls)[i]);
    source = "given";
  } else if (ctx.formation_report().is_formation()) {
    cls = ctx.formation_report().fundamental_class;
    source = "fundamental class";
  } else if (k > 0) {
    cls[0] = Integer(1);
    source = "first canonical generator";
  } else {
    source = "zero (Hhat^2(G, C) = 0)";
  }
  cls = h2.group(2).reduce(cls);
  const TnkReport t = tate_nakayama_check(ctx.x, ctx.c, cls, r.first, r.second, ctx.spec.options.max_order);
  Json j{{"analysis", "tate-nakayama"}, {"range", {r.first, r.second}}};
  j["class"] = {{"coords", vec(cls)}, {"source", source}, {"order", num(h2.group(2).element_order(cls))}};
  j["hypothesis_i"] = t.hypothesis_i;
  j["hypothesis_ii"] = t.hypothesis_ii;
  j["verdict"] = t.all_pass() ? "PASS" : "FAIL";
  j["failure"] = t.failure.empty() ? Json() : Json(t.failure);
  Json rows = Json::array();
  for (const TnkSubgroupRow& row : t.rows) {
    Json o = subgroup(row.subgroup);
    o["H1"] = row.h1;
    o["H2"] = row.h2;
    o["restricted_order"] = num(row.restricted_order);
    o["generates"] = row.generates;
    rows.push_back(o);
  }
  j["subgroups"] = rows;
  Json degrees = Json::array();
  for (const auto& [q, iso] : t.isomorphism)
    degrees.push_back({{"q", q}, {"source", t.source.at(q)}, {"target", t.target.at(q)}, {"isomorphism", iso}});
  j["degrees"] = degrees;
  std::string line = "tate-nakayama: ";
  if (t.all_pass())
    line += "PASS";
  else if (!t.hypothesis_i)
    line += "FAIL (i)";
  else if (!t.hypothesis_ii)
    line += "FAIL (ii)";
  else
    line += "FAIL (cup product not an isomorphism)";
  summary.push_back(line);
  return j;
}

Json run_cone(Context& ctx, const AnalysisSpec& a, std::pair<int, int> r, std::vector<std::string>& summary) {
  const ConeReport c = cone_les_check(ctx.x, ctx.c, a.m, r.first, r.second);
  Json j{{"analysis", "cone-les"}, {"m", a.m}, {"range", {r.first, r.second}}, {"verdict", c.all_pass() ? "PASS" : "FAIL"}};
  Json rows = Json::array();
  for (const ConeRow& row : c.rows)
    rows.push_back({{"i", row.degree},
                    {"cone_order", num(row.cone_order)},
                    {"quotient_order", num(row.quotient_order)},
                    {"torsion_order", num(row.torsion_order)},
                    {"inclusion_image", num(row.inclusion_image)},
                    {"projection_image", num(row.projection_image)},
                    {"composite_zero", row.composite_zero},
                    {"holds", row.holds}});
  j["degrees"] = rows;
  summary.push_back("cone-les m=" + std::to_string(a.m) + ": " + (c.all_pass() ? "PASS" : "FAIL"));
  return j;
}

bool expectation_met(const std::string& expect, const std::vector<std::string>& summary) {
  std::size_t start = 0;
  while (start <= expect.size()) {
    std::size_t end = expect.find(';', start);
    if (end == std::string::npos) end = expect.size();
    std::string part = expect.substr(start, end - start);
    part.erase(0, part.find_first_not_of(' '));
    part.erase(part.find_last_not_of(' ') + 1);
    if (!part.empty() &&
        std::none_of(summary.begin(), summary.end(), [&](const std::string& s) { return s.find(part) != std::string::npos; }))
      return false;
    start = end + 1;
  }
  return true;
}

}  // namespace

Json run_scenario(const ScenarioSpec& spec, bool timing) {
  Context ctx{spec, build_group(spec.group, spec.options.max_order), {}, nullptr, std::nullopt};
  ctx.c = build_coefficients(ctx.group, spec.coefficients);
  const int window = planned_window(spec, ctx.c);
  const Engine engine = parse_engine(spec.options.engine);
  ctx.x = std::make_shared<const CompleteResolution>(
      make_complete_resolution(ctx.group, engine, window, spec.options.bar_cap));

  Json rep;
  rep["scenario"] = spec.name;
  rep["description"] = spec.description;
  rep["input"] = serialize(spec);
  const Abelianization ab = abelianization(ctx.group);
  rep["group"] = {{"name", ctx.group.name()}, {"order", ctx.group.order()}, {"abelianization", ab.group.to_string()}};
  Json terms = Json::array();
  for (int q = ctx.c.lo(); q <= ctx.c.hi(); ++q)
    terms.push_back({{"degree", q}, {"module", ctx.c.term(q).abelian_group().to_string()}});
  rep["coefficients"] = terms;
  rep["resolution"] = {{"engine", ctx.x->kind()}, {"window", window}, {"window_limit", spec.options.window}};

  std::vector<std::string> summary;
  Json results = Json::array();
  for (std::size_t i = 0; i < spec.analyses.size(); ++i) {
    const AnalysisSpec& a = spec.analyses[i];
    const std::string path = "analyses[" + std::to_string(i) + "]";
    const auto r = a.range.value_or(spec.options.range);
    const auto t0 = std::chrono::steady_clock::now();
    Json res;
    try {
      if (a.kind == "tate") res = run_tate(ctx, r, summary);
      if (a.kind == "formation") res = run_formation(ctx, summary);
      if (a.kind == "norm-table") res = run_norm_table(ctx, summary);
      if (a.kind == "tate-nakayama") res = run_tnk(ctx, a, r, path, summary);
      if (a.kind == "cone-les") res = run_cone(ctx, a, r, summary);
    } catch (const ComputationError& e) {
      throw ComputationError(path + " (" + a.kind + "): " + e.what());
    }
    if (timing)
      res["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    results.push_back(res);
  }
  rep["results"] = results;
  rep["summary"] = summary;
  rep["expect"] = spec.expect.empty() ? Json() : Json(spec.expect);
  rep["expectation_met"] = spec.expect.empty() ? Json() : Json(expectation_met(spec.expect, summary));
  return rep;
}

namespace {

std::string str(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  if (j.is_boolean()) return j.get<bool>() ? "yes" : "no";
  return j.dump();
}

std::string elements(const Json& j) { return describe(j["elements"].get<std::vector<int>>()); }

// Left-aligned columns, two spaces apart.
std::string table(const std::vector<std::vector<std::string>>& rows, const std::string& indent = "  ") {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], r[i].size());
    }
  std::ostringstream os;
  for (const auto& r : rows) {
    std::string line = indent;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    os << line << "\n";
  }
  return os.str();
}

void render_result(std::ostringstream& os, const Json& r) {
  const std::string kind = r["analysis"];
  if (kind == "tate") {
    os << "Tate cohomology, q in " << r["range"][0] << ".." << r["range"][1] << "\n";
    std::vector<std::vector<std::string>> rows{{"q", "Hhat^q"}};
    for (const Json& d : r["degrees"]) rows.push_back({std::to_string(d["q"].get<int>()), str(d["group"])});
    os << table(rows);
  } else if (kind == "formation") {
    os << "Class formation: " << str(r["verdict"]);
    if (!r["first_failure"].is_null()) os << " at " << str(r["first_failure"]) << " (" << str(r["detail"]) << ")";
    os << "\n";
    std::vector<std::vector<std::string>> rows{{"H", "Hhat^1", "Hhat^2", "C1", "C2", "u_H"}};
    for (const Json& s : r["subgroups"])
      rows.push_back({elements(s), str(s["H1"]), str(s["H2"]), str(s["C1"]), str(s["C2"]),
                      s.contains("u") ? s["u"].dump() : "-"});
    os << table(rows);
    if (r.contains("C3"))
      os << "  C3: " << r["C3"]["witnesses"] << " of " << r["C3"]["candidates"]
         << " generators give a compatible family; compatibility " << str(r["C3"]["compatibility"])
         << ", invariant square " << str(r["C3"]["invariant_square"]) << "\n";
    if (r.contains("fundamental_class"))
      os << "  fundamental class u_G = " << r["fundamental_class"].dump() << "\n  note: " << str(r["convention"]) << "\n";
    if (r.contains("reciprocity")) {
      const Json& x = r["reciprocity"];
      os << "Reciprocity Hhat^0(G, C) -> G^ab: " << str(x["source"]) << " -> " << str(x["target"]) << ", "
         << (x["isomorphism"].get<bool>() ? "isomorphism" : "not an isomorphism") << "\n";
      os << "  matrix " << x["matrix"].dump() << ", generator images " << x["generator_images"].dump() << "\n";
      os << "  image: " << str(x["density"]) << "\n";
    }
  } else if (kind == "norm-table") {
    os << "Norm groups: " << str(r["verdict"]);
    if (r.contains("reason")) os << " (" << str(r["reason"]) << ")";
    os << "\n";
    if (r.contains("rows")) {
      std::vector<std::vector<std::string>> rows{{"V", "Hhat^0(G)/cor Hhat^0(V)", "(G/V)^ab", "iso"}};
      for (const Json& s : r["rows"])
        rows.push_back({elements(s), str(s["quotient"]), str(s["expected"]), str(s["isomorphism"])});
      os << table(rows);
    }
  } else if (kind == "tate-nakayama") {
    os << "Cup-product criterion: " << str(r["verdict"]);
    if (!r["failure"].is_null()) os << " (" << str(r["failure"]) << ")";
    os << "\n  class " << r["class"]["coords"].dump() << " (" << str(r["class"]["source"]) << ", order "
       << r["class"]["order"].dump() << ")\n";
    std::vector<std::vector<std::string>> rows{{"H", "Hhat^1", "Hhat^2", "order of res", "generates"}};
    for (const Json& s : r["subgroups"])
      rows.push_back({elements(s), str(s["H1"]), str(s["H2"]), s["restricted_order"].dump(), str(s["generates"])});
    os << table(rows);
    if (!r["degrees"].empty()) {
      std::vector<std::vector<std::string>> deg{{"q", "Hhat^{q-2}(G, Z)", "Hhat^q(G, C)", "iso"}};
      for (const Json& d : r["degrees"])
        deg.push_back({std::to_string(d["q"].get<int>()), str(d["source"]), str(d["target"]), str(d["isomorphism"])});
      os << table(deg);
    }
  } else if (kind == "cone-les") {
    os << "Cone of multiplication by " << r["m"] << ": " << str(r["verdict"]) << "\n";
    std::vector<std::vector<std::string>> rows{{"i", "|cone|", "|H^i/m|", "|_m H^{i+1}|", "holds"}};
    for (const Json& d : r["degrees"])
      rows.push_back({std::to_string(d["i"].get<int>()), d["cone_order"].dump(), d["quotient_order"].dump(),
                      d["torsion_order"].dump(), str(d["holds"])});
    os << table(rows);
  }
  if (r.contains("timing_ms")) os << "  time " << std::fixed << std::setprecision(1) << r["timing_ms"].get<double>() << " ms\n";
}

}  // namespace

std::string render_text(const Json& rep) {
  std::ostringstream os;
  os << "scenario: " << (rep["scenario"].get<std::string>().empty() ? "(unnamed)" : str(rep["scenario"])) << "\n";
  if (!rep["description"].get<std::string>().empty()) os << "  " << str(rep["description"]) << "\n";
  os << "group: " << str(rep["group"]["name"]) << ", order " << rep["group"]["order"] << ", abelianization "
     << str(rep["group"]["abelianization"]) << "\n";
  os << "coefficients:";
  for (const Json& t : rep["coefficients"]) os << " " << str(t["module"]) << " in degree " << t["degree"];
  os << "\n";
  os << "resolution: " << str(rep["resolution"]["engine"]) << ", window " << rep["resolution"]["window"] << " (limit "
     << rep["resolution"]["window_limit"] << ")\n";
  for (const Json& r : rep["results"]) {
    os << "\n";
    render_result(os, r);
  }
  os << "\nsummary:\n";
  for (const Json& s : rep["summary"]) os << "  " << str(s) << "\n";
  if (!rep["expect"].is_null())
    os << "expected: " << str(rep["expect"]) << " -> " << (rep["expectation_met"].get<bool>() ? "met" : "NOT met") << "\n";
  return os.str();
}

}  // namespace tatecoh::cli
