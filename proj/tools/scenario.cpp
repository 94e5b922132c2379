#include "scenario.hpp"

#include <algorithm>
#include <charconv>

#include "tatecoh/errors.hpp"
#include "tatecoh/tate.hpp"

namespace tatecoh::cli {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) { throw InputError(path + ": " + msg); }

std::string at(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

void only_keys(const Json& j, const std::string& path, std::initializer_list<const char*> keys) {
  if (!j.is_object()) fail(path, "expected an object");
  for (const auto& [k, v] : j.items())
    if (std::none_of(keys.begin(), keys.end(), [&](const char* s) { return k == s; }))
      fail(at(path, k), "unknown field");
}

const Json& need(const Json& j, const std::string& path, const char* key) {
  if (!j.contains(key)) fail(at(path, key), "missing field");
  return j[key];
}

long long as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long long>();
}

long long as_int(const Json& j, const std::string& path, long long lo, long long hi) {
  const long long v = as_int(j, path);
  if (v < lo || v > hi) fail(path, "value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return v;
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

const Json& as_array(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

Rows as_rows(const Json& j, const std::string& path) {
  Rows rows;
  for (std::size_t i = 0; i < as_array(j, path).size(); ++i) {
    const std::string p = at(path, i);
    std::vector<long long> row;
    for (std::size_t k = 0; k < as_array(j[i], p).size(); ++k) row.push_back(as_int(j[i][k], at(p, k)));
    if (!rows.empty() && row.size() != rows[0].size()) fail(p, "row length differs from the first row");
    rows.push_back(std::move(row));
  }
  return rows;
}

std::pair<int, int> as_range(const Json& j, const std::string& path) {
  if (j.is_string()) {
    try {
      return parse_range(j.get<std::string>());
    } catch (const InputError& e) {
      fail(path, e.what());
    }
  }
  if (!j.is_array() || j.size() != 2) fail(path, "expected [qmin, qmax] or \"qmin..qmax\"");
  const int a = static_cast<int>(as_int(j[0], at(path, 0), -64, 64));
  const int b = static_cast<int>(as_int(j[1], at(path, 1), -64, 64));
  if (a > b) fail(path, "qmin exceeds qmax");
  return {a, b};
}

GroupSpec parse_group(const Json& j, const std::string& path) {
  GroupSpec g;
  if (!j.is_object()) fail(path, "expected an object");
  g.kind = as_string(need(j, path, "kind"), at(path, "kind"));
  if (g.kind == "cyclic") {
    only_keys(j, path, {"kind", "order"});
    g.n = static_cast<std::size_t>(as_int(need(j, path, "order"), at(path, "order"), 1, 1 << 20));
  } else if (g.kind == "symmetric") {
    only_keys(j, path, {"kind", "degree"});
    g.n = static_cast<std::size_t>(as_int(need(j, path, "degree"), at(path, "degree"), 1, 5));
  } else if (g.kind == "product") {
    only_keys(j, path, {"kind", "factors"});
    const std::string p = at(path, "factors");
    const Json& fs = as_array(need(j, path, "factors"), p);
    if (fs.empty()) fail(p, "expected at least one factor");
    for (std::size_t i = 0; i < fs.size(); ++i) g.factors.push_back(parse_group(fs[i], at(p, i)));
  } else if (g.kind == "table") {
    only_keys(j, path, {"kind", "table", "name"});
    const std::string p = at(path, "table");
    const Rows rows = as_rows(need(j, path, "table"), p);
    if (rows.empty()) fail(p, "empty table");
    for (const auto& r : rows) g.table.emplace_back(r.begin(), r.end());
    if (j.contains("name")) g.name = as_string(j["name"], at(path, "name"));
  } else {
    fail(at(path, "kind"), "unknown group kind '" + g.kind + "' (expected cyclic, product, symmetric or table)");
  }
  return g;
}

const char* const kModuleKinds[] = {"trivial", "regular", "finite-field-units", "explicit"};

bool is_module_kind(const std::string& k) {
  return std::any_of(std::begin(kModuleKinds), std::end(kModuleKinds), [&](const char* s) { return k == s; });
}

// Module fields of `j`; `extra` names the keys the caller handles itself.
ModuleSpec parse_module(const Json& j, const std::string& path, std::initializer_list<const char*> extra = {}) {
  ModuleSpec m;
  if (!j.is_object()) fail(path, "expected an object");
  m.kind = as_string(need(j, path, "kind"), at(path, "kind"));
  std::vector<const char*> keys{"kind"};
  keys.insert(keys.end(), extra.begin(), extra.end());
  if (m.kind == "trivial") {
    keys.push_back("torsion");
    if (j.contains("torsion")) m.torsion = as_int(j["torsion"], at(path, "torsion"), 0, 1LL << 40);
  } else if (m.kind == "regular") {
  } else if (m.kind == "finite-field-units") {
    keys.insert(keys.end(), {"p", "f"});
    m.p = as_int(need(j, path, "p"), at(path, "p"), 2, 1 << 20);
    if (j.contains("f")) m.f = as_int(j["f"], at(path, "f"), 1, 64);
  } else if (m.kind == "explicit") {
    keys.insert(keys.end(), {"torsion", "actions"});
    const std::string tp = at(path, "torsion");
    const Json& t = as_array(need(j, path, "torsion"), tp);
    for (std::size_t i = 0; i < t.size(); ++i) m.diagonal.push_back(as_int(t[i], at(tp, i), 0, 1LL << 40));
    const std::string ap = at(path, "actions");
    const Json& a = as_array(need(j, path, "actions"), ap);
    for (std::size_t i = 0; i < a.size(); ++i) m.actions.push_back(as_rows(a[i], at(ap, i)));
  } else {
    fail(at(path, "kind"), "unknown module kind '" + m.kind +
                               "' (expected trivial, regular, finite-field-units, explicit, tensor-power-shift or complex)");
  }
  for (const auto& [k, v] : j.items())
    if (std::none_of(keys.begin(), keys.end(), [&](const char* s) { return k == s; })) fail(at(path, k), "unknown field");
  return m;
}

CoefficientSpec parse_coefficients(const Json& j, const std::string& path) {
  CoefficientSpec c;
  if (!j.is_object()) fail(path, "expected an object");
  c.kind = as_string(need(j, path, "kind"), at(path, "kind"));
  if (j.contains("shift")) c.shift = static_cast<int>(as_int(j["shift"], at(path, "shift"), -64, 64));
  if (c.kind == "tensor-power-shift") {
    only_keys(j, path, {"kind", "base", "n", "shift"});
    c.module = parse_module(need(j, path, "base"), at(path, "base"));
    c.power = static_cast<int>(as_int(need(j, path, "n"), at(path, "n"), 0, 16));
  } else if (c.kind == "complex") {
    only_keys(j, path, {"kind", "lo", "terms", "differentials", "shift"});
    c.lo = static_cast<int>(as_int(need(j, path, "lo"), at(path, "lo"), -64, 64));
    const std::string tp = at(path, "terms");
    const Json& t = as_array(need(j, path, "terms"), tp);
    if (t.empty()) fail(tp, "expected at least one term");
    for (std::size_t i = 0; i < t.size(); ++i) c.terms.push_back(parse_module(t[i], at(tp, i)));
    const std::string dp = at(path, "differentials");
    const Json& d = as_array(need(j, path, "differentials"), dp);
    if (d.size() + 1 != t.size()) fail(dp, "expected " + std::to_string(t.size() - 1) + " matrices");
    for (std::size_t i = 0; i < d.size(); ++i) c.differentials.push_back(as_rows(d[i], at(dp, i)));
  } else if (is_module_kind(c.kind)) {
    c.module = parse_module(j, path, {"degree", "shift"});
    if (j.contains("degree")) c.degree = static_cast<int>(as_int(j["degree"], at(path, "degree"), -64, 64));
  } else {
    parse_module(j, path);  // reports the unknown kind
  }
  return c;
}

AnalysisSpec parse_analysis(const Json& j, const std::string& path) {
  AnalysisSpec a;
  const Json obj = j.is_string() ? Json{{"kind", j}} : j;
  if (!obj.is_object()) fail(path, "expected an analysis name or object");
  a.kind = as_string(need(obj, path, "kind"), at(path, "kind"));
  if (a.kind == "tate") {
    only_keys(obj, path, {"kind", "range"});
  } else if (a.kind == "formation" || a.kind == "norm-table") {
    only_keys(obj, path, {"kind"});
  } else if (a.kind == "tate-nakayama") {
    only_keys(obj, path, {"kind", "range", "class"});
    if (obj.contains("class")) {
      const std::string cp = at(path, "class");
      std::vector<long long> v;
      for (std::size_t i = 0; i < as_array(obj["class"], cp).size(); ++i) v.push_back(as_int(obj["class"][i], at(cp, i)));
      a.cls = std::move(v);
    }
  } else if (a.kind == "cone-les") {
    only_keys(obj, path, {"kind", "m", "range"});
    a.m = as_int(need(obj, path, "m"), at(path, "m"), 1, 1 << 20);
  } else {
    fail(at(path, "kind"),
         "unknown analysis '" + a.kind + "' (expected tate, formation, tate-nakayama, cone-les or norm-table)");
  }
  if (obj.contains("range")) a.range = as_range(obj["range"], at(path, "range"));
  return a;
}

OptionsSpec parse_options(const Json& j, const std::string& path) {
  OptionsSpec o;
  only_keys(j, path, {"engine", "window", "max_order", "bar_cap", "range"});
  if (j.contains("engine")) o.engine = as_string(j["engine"], at(path, "engine"));
  if (j.contains("window")) o.window = static_cast<int>(as_int(j["window"], at(path, "window"), 1, 64));
  if (j.contains("max_order"))
    o.max_order = static_cast<std::size_t>(as_int(j["max_order"], at(path, "max_order"), 1, 1 << 20));
  if (j.contains("bar_cap"))
    o.bar_cap = static_cast<std::size_t>(as_int(j["bar_cap"], at(path, "bar_cap"), 1, 1LL << 32));
  if (j.contains("range")) o.range = as_range(j["range"], at(path, "range"));
  return o;
}

// Order of the described group, or 0 once it passes `cap`.
std::size_t group_order(const GroupSpec& g, std::size_t cap) {
  if (g.kind == "cyclic") return g.n;
  if (g.kind == "table") return g.table.size();
  if (g.kind == "symmetric") {
    std::size_t r = 1;
    for (std::size_t i = 2; i <= g.n; ++i) r *= i;
    return r;
  }
  std::size_t r = 1;
  for (const GroupSpec& f : g.factors) {
    const std::size_t k = group_order(f, cap);
    if (k == 0 || r * k > cap) return 0;
    r *= k;
  }
  return r;
}

IntMatrix to_matrix(const Rows& rows, std::size_t nrows, std::size_t ncols, const std::string& path) {
  if (rows.size() != nrows && !(nrows == 0 && rows.empty())) fail(path, "expected " + std::to_string(nrows) + " rows");
  IntMatrix m(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i) {
    if (rows[i].size() != ncols) fail(at(path, i), "expected " + std::to_string(ncols) + " columns");
    for (std::size_t k = 0; k < ncols; ++k) m(i, k) = Integer(rows[i][k]);
  }
  return m;
}

GModule build_module(const FiniteGroup& g, const ModuleSpec& m, const std::string& path) {
  try {
    if (m.kind == "trivial") return trivial_cyclic_module(g, static_cast<std::size_t>(m.torsion));
    if (m.kind == "regular") return regular_module(g);
    if (m.kind == "finite-field-units") {
      if (!(g == make_cyclic(g.order())))
        fail(path, "finite-field-units needs the group {\"kind\": \"cyclic\"} acting through its generator 1");
      return finite_field_units(m.p, m.f, static_cast<std::int64_t>(g.order()));
    }
    IntVector t;
    for (long long v : m.diagonal) t.emplace_back(v);
    if (m.actions.size() != g.order())
      fail(at(path, "actions"), "expected one matrix per group element (" + std::to_string(g.order()) + ")");
    std::vector<IntMatrix> acts;
    for (std::size_t i = 0; i < m.actions.size(); ++i)
      acts.push_back(to_matrix(m.actions[i], t.size(), t.size(), at(at(path, "actions"), i)));
    return GModule::from_diagonal(g, std::move(t), std::move(acts));
  } catch (const InputError& e) {
    const std::string what = e.what();
    if (what.rfind(path, 0) == 0) throw;
    fail(path, what);
  }
}

Json module_json(const ModuleSpec& m) {
  Json j;
  j["kind"] = m.kind;
  if (m.kind == "trivial") {
    j["torsion"] = m.torsion;
  } else if (m.kind == "finite-field-units") {
    j["p"] = m.p;
    j["f"] = m.f;
  } else if (m.kind == "explicit") {
    j["torsion"] = m.diagonal;
    j["actions"] = m.actions;
  }
  return j;
}

Json group_json(const GroupSpec& g) {
  Json j;
  j["kind"] = g.kind;
  if (g.kind == "cyclic") j["order"] = g.n;
  if (g.kind == "symmetric") j["degree"] = g.n;
  if (g.kind == "product") {
    j["factors"] = Json::array();
    for (const GroupSpec& f : g.factors) j["factors"].push_back(group_json(f));
  }
  if (g.kind == "table") {
    j["table"] = g.table;
    if (!g.name.empty()) j["name"] = g.name;
  }
  return j;
}

}  // namespace

std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  auto number = [&](std::string_view v) {
    int out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size() || v.empty())
      throw InputError("range '" + s + "' is not of the form qmin..qmax");
    return out;
  };
  if (dots == std::string::npos) throw InputError("range '" + s + "' is not of the form qmin..qmax");
  const std::string_view sv(s);
  const int a = number(sv.substr(0, dots)), b = number(sv.substr(dots + 2));
  if (a > b) throw InputError("range '" + s + "' has qmin > qmax");
  if (a < -64 || b > 64) throw InputError("range '" + s + "' leaves [-64, 64]");
  return {a, b};
}

FiniteGroup build_group(const GroupSpec& g, std::size_t max_order) {
  const std::size_t n = group_order(g, max_order);
  if (n == 0 || n > max_order)
    throw ComputationError("group: order " + (n ? std::to_string(n) + " " : std::string("")) +
                           "exceeds the cap --max-order " + std::to_string(max_order));
  try {
    if (g.kind == "cyclic") return make_cyclic(g.n);
    if (g.kind == "symmetric") return make_symmetric(g.n);
    if (g.kind == "product") {
      FiniteGroup out = build_group(g.factors[0], max_order);
      for (std::size_t i = 1; i < g.factors.size(); ++i) out = direct_product(out, build_group(g.factors[i], max_order));
      return out;
    }
    return FiniteGroup::from_table(g.table, g.name);
  } catch (const InputError& e) {
    fail("group", e.what());
  }
}

GComplex build_coefficients(const FiniteGroup& g, const CoefficientSpec& c) {
  const std::string path = "coefficients";
  GComplex out;
  try {
    if (c.kind == "tensor-power-shift") {
      out = tensor_power_shifted(build_module(g, c.module, at(path, "base")), c.power);
    } else if (c.kind == "complex") {
      std::vector<GModule> terms;
      for (std::size_t i = 0; i < c.terms.size(); ++i)
        terms.push_back(build_module(g, c.terms[i], at(at(path, "terms"), i)));
      std::vector<IntMatrix> diffs;
      for (std::size_t i = 0; i < c.differentials.size(); ++i)
        diffs.push_back(to_matrix(c.differentials[i], terms[i + 1].gens(), terms[i].gens(),
                                  at(at(path, "differentials"), i)));
      out = GComplex(g, c.lo, std::move(terms), std::move(diffs));
    } else {
      out = concentrate(build_module(g, c.module, path), c.degree);
    }
  } catch (const InputError& e) {
    const std::string what = e.what();
    if (what.rfind(path, 0) == 0) throw;
    fail(path, what);
  }
  return c.shift ? shift(out, c.shift) : out;
}

int planned_window(const ScenarioSpec& spec, const GComplex& c) {
  const GComplex z = concentrate(trivial_cyclic_module(c.group()), 0);
  int need = 1;
  auto want = [&](const GComplex& k, int lo, int hi) { need = std::max(need, required_window(k, lo, hi)); };
  for (const AnalysisSpec& a : spec.analyses) {
    const auto [lo, hi] = a.range.value_or(spec.options.range);
    if (a.kind == "tate") {
      want(c, lo, hi);
    } else if (a.kind == "formation" || a.kind == "norm-table") {
      want(c, 0, 2);
      want(z, -2, -2);
    } else if (a.kind == "tate-nakayama") {
      want(c, std::min(lo, 1), std::max(hi, 2));
      want(z, lo - 2, hi - 2);
    } else if (a.kind == "cone-les") {
      want(c, lo, hi + 1);
      want(cone_of_mult(c, a.m).complex, lo, hi);
    }
  }
  return need;
}

ScenarioSpec parse_scenario(const std::string& text, const Overrides& ov) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string why = e.what();
    if (const auto p = why.rfind(": "); p != std::string::npos) why = why.substr(p + 2);
    throw InputError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + why);
  }
  return parse_scenario_json(doc, ov);
}

ScenarioSpec parse_scenario_json(const Json& doc, const Overrides& ov) {
  ScenarioSpec s;
  only_keys(doc, "document", {"name", "description", "expect", "group", "coefficients", "analyses", "options"});
  if (doc.contains("name")) s.name = as_string(doc["name"], "name");
  if (doc.contains("description")) s.description = as_string(doc["description"], "description");
  if (doc.contains("expect")) s.expect = as_string(doc["expect"], "expect");
  s.group = parse_group(need(doc, "", "group"), "group");
  s.coefficients = parse_coefficients(need(doc, "", "coefficients"), "coefficients");
  const Json& an = as_array(need(doc, "", "analyses"), "analyses");
  if (an.empty()) fail("analyses", "expected at least one analysis");
  for (std::size_t i = 0; i < an.size(); ++i) s.analyses.push_back(parse_analysis(an[i], at("analyses", i)));
  if (doc.contains("options")) s.options = parse_options(doc["options"], "options");

  if (ov.engine) s.options.engine = *ov.engine;
  if (ov.window) s.options.window = *ov.window;
  if (ov.max_order) s.options.max_order = *ov.max_order;
  if (ov.range) s.options.range = *ov.range;

  Engine engine = Engine::Auto;
  try {
    engine = parse_engine(s.options.engine);
  } catch (const InputError& e) {
    fail("options.engine", e.what());
  }
  const FiniteGroup g = build_group(s.group, s.options.max_order);
  const GComplex c = build_coefficients(g, s.coefficients);
  if (engine == Engine::Periodic && !g.is_cyclic()) fail("options.engine", "the periodic engine needs a cyclic group");
  const int need = planned_window(s, c);
  if (need > s.options.window)
    throw ComputationError("the analyses need a resolution window of " + std::to_string(need) +
                           ", above --window " + std::to_string(s.options.window));
  if (engine == Engine::Bar || (engine == Engine::Auto && !g.is_cyclic())) {
    double rank = 1;
    for (int i = 0; i < need; ++i) rank *= static_cast<double>(g.order());
    if (rank > static_cast<double>(s.options.bar_cap))
      throw ComputationError("bar resolution of length " + std::to_string(need) + " has top rank " +
                             std::to_string(g.order()) + "^" + std::to_string(need) + ", above the cap " +
                             std::to_string(s.options.bar_cap));
  }
  return s;
}

Json serialize(const ScenarioSpec& s) {
  Json j;
  if (!s.name.empty()) j["name"] = s.name;
  if (!s.description.empty()) j["description"] = s.description;
  if (!s.expect.empty()) j["expect"] = s.expect;
  j["group"] = group_json(s.group);

  const CoefficientSpec& c = s.coefficients;
  Json cj;
  if (c.kind == "tensor-power-shift") {
    cj["kind"] = c.kind;
    cj["base"] = module_json(c.module);
    cj["n"] = c.power;
  } else if (c.kind == "complex") {
    cj["kind"] = c.kind;
    cj["lo"] = c.lo;
    cj["terms"] = Json::array();
    for (const ModuleSpec& m : c.terms) cj["terms"].push_back(module_json(m));
    cj["differentials"] = c.differentials;
  } else {
    cj = module_json(c.module);
    cj["degree"] = c.degree;
  }
  if (c.shift) cj["shift"] = c.shift;
  j["coefficients"] = cj;

  j["analyses"] = Json::array();
  for (const AnalysisSpec& a : s.analyses) {
    Json aj;
    aj["kind"] = a.kind;
    if (a.kind == "cone-les") aj["m"] = a.m;
    if (a.range) aj["range"] = {a.range->first, a.range->second};
    if (a.cls) aj["class"] = *a.cls;
    j["analyses"].push_back(aj);
  }
  j["options"] = {{"engine", s.options.engine},
                  {"window", s.options.window},
                  {"max_order", s.options.max_order},
                  {"bar_cap", s.options.bar_cap},
                  {"range", {s.options.range.first, s.options.range.second}}};
  return j;
}

}  // namespace tatecoh::cli
