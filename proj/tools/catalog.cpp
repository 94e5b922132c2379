#include "scenario.hpp"
#include "tatecoh/errors.hpp"

namespace tatecoh::cli {

namespace {

std::string unramified(int n) {
  const std::string s = std::to_string(n);
  return R"j({
  "name": "unramified-cyclic-)j" + s + R"j(",
  "description": "Z/)j" + s + R"j( acting trivially on Z, the finite shadow of an unramified extension",
  "expect": "formation: PASS; reciprocity: Z/)j" + s + " -> Z/" + s + R"j( isomorphism; tate-nakayama: PASS",
  "group": {"kind": "cyclic", "order": )j" + s + R"j(},
  "coefficients": {"kind": "trivial", "degree": 0},
  "analyses": ["tate", "formation", "tate-nakayama", "norm-table", {"kind": "cone-les", "m": 2, "range": [-2, 2]}]
})j";
}

std::vector<CatalogEntry> build() {
  std::vector<std::string> docs;
  for (int n : {2, 3, 4, 6}) docs.push_back(unramified(n));
  docs.push_back(R"j({
  "name": "klein-four-z",
  "description": "Z/2 x Z/2 acting trivially on Z; Hhat^2 is not cyclic",
  "expect": "formation: FAIL (C2); tate-nakayama: FAIL (ii)",
  "group": {"kind": "product", "factors": [{"kind": "cyclic", "order": 2}, {"kind": "cyclic", "order": 2}]},
  "coefficients": {"kind": "trivial", "degree": 0},
  "analyses": ["tate", "formation", "tate-nakayama"]
})j");
  docs.push_back(R"j({
  "name": "s3-z",
  "description": "S_3 acting trivially on Z",
  "expect": "formation: FAIL (C2); tate-nakayama: FAIL (ii)",
  "group": {"kind": "symmetric", "degree": 3},
  "coefficients": {"kind": "trivial", "degree": 0},
  "analyses": ["tate", "formation", "tate-nakayama"]
})j");
  docs.push_back(R"j({
  "name": "hilbert90-f4",
  "description": "Gal(F_4/F_2) acting on the units of F_4",
  "expect": "Hhat^1 = 0; tate-nakayama: FAIL (ii)",
  "group": {"kind": "cyclic", "order": 2},
  "coefficients": {"kind": "finite-field-units", "p": 2, "f": 1, "degree": 0},
  "analyses": ["tate", "tate-nakayama", {"kind": "cone-les", "m": 3, "range": [-2, 2]}]
})j");
  docs.push_back(R"j({
  "name": "hilbert90-f9",
  "description": "Gal(F_9/F_3) acting on the units of F_9",
  "expect": "Hhat^1 = 0",
  "group": {"kind": "cyclic", "order": 2},
  "coefficients": {"kind": "finite-field-units", "p": 3, "f": 1, "degree": 0},
  "analyses": ["tate", {"kind": "cone-les", "m": 2, "range": [-2, 2]}]
})j");
  docs.push_back(R"j({
  "name": "hilbert90-f8",
  "description": "Gal(F_8/F_2) acting on the units of F_8",
  "expect": "Hhat^1 = 0",
  "group": {"kind": "cyclic", "order": 3},
  "coefficients": {"kind": "finite-field-units", "p": 2, "f": 1, "degree": 0},
  "analyses": ["tate"]
})j");
  docs.push_back(R"j({
  "name": "zhat1-f4",
  "description": "units of F_4 placed in degree 1, a finite analogue of Z(1)",
  "expect": "formation: FAIL (C2)",
  "group": {"kind": "cyclic", "order": 2},
  "coefficients": {"kind": "finite-field-units", "p": 2, "f": 1, "degree": 1},
  "analyses": ["tate", "formation"]
})j");
  docs.push_back(R"j({
  "name": "regular-z4",
  "description": "the regular module Z[Z/4]",
  "expect": "Hhat^-2 = 0, Hhat^-1 = 0, Hhat^0 = 0, Hhat^1 = 0, Hhat^2 = 0, Hhat^3 = 0; tate-nakayama: FAIL (ii)",
  "group": {"kind": "cyclic", "order": 4},
  "coefficients": {"kind": "regular", "degree": 0},
  "analyses": ["tate", "tate-nakayama"]
})j");
  docs.push_back(R"j({
  "name": "regular-klein",
  "description": "the regular module Z[Z/2 x Z/2]",
  "expect": "Hhat^-2 = 0, Hhat^-1 = 0, Hhat^0 = 0, Hhat^1 = 0, Hhat^2 = 0, Hhat^3 = 0",
  "group": {"kind": "product", "factors": [{"kind": "cyclic", "order": 2}, {"kind": "cyclic", "order": 2}]},
  "coefficients": {"kind": "regular", "degree": 0},
  "analyses": ["tate"]
})j");
  docs.push_back(R"j({
  "name": "tautological-s3",
  "description": "S_3 with Z placed in degree 2, so that Hhat^q(G, C) = Hhat^{q-2}(G, Z)",
  "expect": "formation: PASS; reciprocity: Z/2 -> Z/2 isomorphism; norm-table: PASS",
  "group": {"kind": "symmetric", "degree": 3},
  "coefficients": {"kind": "trivial", "degree": 2},
  "analyses": ["tate", "formation", "norm-table"]
})j");
  docs.push_back(R"j({
  "name": "tautological-klein",
  "description": "Z/2 x Z/2 with Z placed in degree 2",
  "expect": "formation: PASS; reciprocity: Z/2 + Z/2 -> Z/2 + Z/2 isomorphism; norm-table: PASS",
  "group": {"kind": "product", "factors": [{"kind": "cyclic", "order": 2}, {"kind": "cyclic", "order": 2}]},
  "coefficients": {"kind": "trivial", "degree": 2},
  "analyses": ["tate", "formation", "norm-table"]
})j");
  docs.push_back(R"j({
  "name": "tensor-square-f4",
  "description": "second tensor power of the units of F_4 over Gal(F_4/F_2), placed in degree 2",
  "expect": "Hhat^-2 = 0, Hhat^-1 = 0, Hhat^0 = 0, Hhat^1 = 0, Hhat^2 = 0, Hhat^3 = 0",
  "group": {"kind": "cyclic", "order": 2},
  "coefficients": {"kind": "tensor-power-shift", "base": {"kind": "finite-field-units", "p": 2, "f": 1}, "n": 2},
  "analyses": ["tate"]
})j");
  docs.push_back(R"j({
  "name": "tensor-square-f9",
  "description": "second tensor power of the units of F_9 over Gal(F_9/F_3), placed in degree 2",
  "expect": "Hhat^-2 = Z/2, Hhat^-1 = Z/2, Hhat^0 = Z/2, Hhat^1 = Z/2, Hhat^2 = Z/2, Hhat^3 = Z/2",
  "group": {"kind": "cyclic", "order": 2},
  "coefficients": {"kind": "tensor-power-shift", "base": {"kind": "finite-field-units", "p": 3, "f": 1}, "n": 2},
  "analyses": ["tate", {"kind": "cone-les", "m": 4, "range": [-2, 2]}]
})j");

  std::vector<CatalogEntry> out;
  for (const std::string& d : docs) {
    const ScenarioSpec s = parse_scenario(d);
    out.push_back({s.name, s.description, s.expect, d});
  }
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const CatalogEntry& e : catalog())
    if (e.name == name) return e;
  throw InputError("unknown demo '" + name + "' (see the list verb)");
}

}  // namespace tatecoh::cli
