#include "tatecoh/formation.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "tatecoh/errors.hpp"

namespace tatecoh {

namespace {

std::string describe(const Subgroup& h) {
  std::string s = "{";
  for (std::size_t i = 0; i < h.elements.size(); ++i) s += (i ? "," : "") + std::to_string(h.elements[i]);
  return s + "}";
}

bool is_subset(const Subgroup& small, const Subgroup& big) {
  return std::all_of(small.elements.begin(), small.elements.end(), [&](int x) { return big.contains(x); });
}

std::vector<IntVector> columns_of(const IntMatrix& m) {
  std::vector<IntVector> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return cols;
}

// Numerator of inv_H(x) in (1/|H|)Z/Z, normalized by inv_H(u_H) = 1/|H|.
Integer invariant(const IntVector& u, std::span<const Integer> x, std::size_t order) {
  if (u.empty()) return Integer(0);
  const Integer n(static_cast<long long>(order));
  const Bezout e = ext_gcd(u[0], n);
  return floor_mod(x[0] * e.s, n);
}

// Preimage under a map onto a finite group: solves m y = target modulo the torsion of `b`.
std::optional<IntVector> preimage(const IntMatrix& m, const AbGroup& b, std::span<const Integer> target) {
  const std::size_t extra = b.torsion.size();
  IntMatrix sys(b.ngens(), m.cols() + extra);
  sys.set_block(0, 0, m);
  for (std::size_t i = 0; i < extra; ++i) sys(i, m.cols() + i) = b.torsion[i];
  auto y = solve_integer(sys, target);
  if (!y) return std::nullopt;
  y->resize(m.cols());
  return y;
}

struct Reciprocity {
  IntMatrix cup, matrix;
  bool cup_iso = false;
};

Reciprocity compute_reciprocity(const TateCohomology& z, const TateCohomology& cg, std::span<const Integer> u,
                                const Abelianization& ab) {
  Reciprocity r;
  r.cup = cup_with(z, cg, u, 0);
  const AbGroup& b = cg.group(0);
  r.cup_iso = is_isomorphism(z.group(-2), b, r.cup);
  const IntMatrix to_ab = abelianization_map(z, ab);
  r.matrix = IntMatrix(ab.group.ngens(), b.ngens());
  if (!r.cup_iso) return r;
  for (std::size_t i = 0; i < b.ngens(); ++i) {
    IntVector e(b.ngens());
    e[i] = Integer(1);
    const auto y = preimage(r.cup, b, e);
    if (!y) throw ComputationError("reciprocity: cup product is not surjective");
    r.matrix.set_column(i, ab.group.reduce(to_ab * *y));
  }
  return r;
}

}  // namespace

FormationReport check_class_formation(const ResolutionPtr& x, const GComplex& c, std::size_t max_order) {
  const FiniteGroup& g = x->group();
  FormationReport rep;
  const std::vector<Subgroup> subs = all_subgroups(g, max_order);
  std::vector<TateCohomology> coh;
  for (const Subgroup& h : subs) {
    coh.emplace_back(x, c, h, 1, 2);
    FormationRow row;
    row.subgroup = h;
    row.h1 = coh.back().group(1).to_string();
    row.h2 = coh.back().group(2).to_string();
    row.c1 = coh.back().group(1).is_trivial();
    const AbGroup& h2 = coh.back().group(2);
    row.c2 = h2.is_finite() && h2.is_cyclic() && h2.order() == Integer(static_cast<long long>(h.order()));
    rep.rows.push_back(std::move(row));
  }
  rep.c1 = std::all_of(rep.rows.begin(), rep.rows.end(), [](const FormationRow& r) { return r.c1; });
  rep.c2 = std::all_of(rep.rows.begin(), rep.rows.end(), [](const FormationRow& r) { return r.c2; });
  if (!rep.c1) {
    const auto& r = *std::find_if(rep.rows.begin(), rep.rows.end(), [](const FormationRow& r) { return !r.c1; });
    rep.first_failure = "C1";
    rep.detail = "Hhat^1(H, C) = " + r.h1 + " for H = " + describe(r.subgroup);
    return rep;
  }
  if (!rep.c2) {
    const auto& r = *std::find_if(rep.rows.begin(), rep.rows.end(), [](const FormationRow& r) { return !r.c2; });
    rep.first_failure = "C2";
    rep.detail = "Hhat^2(H, C) = " + r.h2 + " is not cyclic of order " + std::to_string(r.subgroup.order()) +
                 " for H = " + describe(r.subgroup);
    return rep;
  }

  const std::size_t top = subs.size() - 1;  // the whole group sorts last
  const std::size_t n = g.order();
  std::vector<IntMatrix> from_top;
  for (std::size_t i = 0; i < subs.size(); ++i) from_top.push_back(restriction_matrix(coh[top], coh[i], 2));

  std::vector<IntVector> candidates;
  if (n == 1) {
    candidates.emplace_back();
  } else {
    for (std::size_t k = 1; k < n; ++k)
      if (std::gcd(k, n) == 1) candidates.push_back(IntVector{Integer(static_cast<long long>(k))});
  }
  rep.candidates = candidates.size();
  std::vector<IntVector> chosen;
  for (const IntVector& ug : candidates) {
    std::vector<IntVector> family;
    bool ok = true;
    for (std::size_t i = 0; i < subs.size() && ok; ++i) {
      const AbGroup& h2 = coh[i].group(2);
      family.push_back(h2.reduce(from_top[i] * ug));
      ok = h2.element_order(family.back()) == Integer(static_cast<long long>(subs[i].order()));
    }
    if (!ok) continue;
    if (rep.witnesses++ == 0) chosen = std::move(family);
  }
  if (rep.witnesses == 0) {
    rep.first_failure = "C3";
    rep.detail = "no generator of Hhat^2(G, C) restricts to generators on every subgroup";
    return rep;
  }
  for (std::size_t i = 0; i < subs.size(); ++i) rep.rows[i].u = chosen[i];
  rep.fundamental_class = chosen[top];

  rep.compatibility = rep.invariant_square = true;
  for (std::size_t a = 0; a < subs.size(); ++a)
    for (std::size_t b = 0; b < subs.size(); ++b) {
      if (a == b || !is_subset(subs[b], subs[a])) continue;
      const IntMatrix res = restriction_matrix(coh[a], coh[b], 2);
      const AbGroup& hb = coh[b].group(2);
      if (hb.reduce(res * chosen[a]) != chosen[b]) rep.compatibility = false;
      const AbGroup& ha = coh[a].group(2);
      for (std::size_t k = 0; k < ha.ngens(); ++k) {
        IntVector e(ha.ngens());
        e[k] = Integer(1);
        const Integer lhs = invariant(chosen[b], hb.reduce(res * e), subs[b].order());
        const Integer rhs = floor_mod(invariant(chosen[a], e, subs[a].order()),
                                      Integer(static_cast<long long>(subs[b].order())));
        if (lhs != rhs) rep.invariant_square = false;
      }
    }
  rep.c3 = rep.compatibility && rep.invariant_square;
  if (!rep.c3) {
    rep.first_failure = "C3";
    rep.detail = "restricted classes are not compatible";
  }
  return rep;
}

IntMatrix abelianization_map(const TateCohomology& z, const Abelianization& ab) {
  const TotalComplex& t = z.total();
  const CompleteResolution& x = t.resolution();
  if (t.subgroup().order() != x.group().order()) throw InputError("abelianization map needs the whole group");
  const auto& labels = x.h1_labels();
  if (labels.size() != x.rank(2)) throw InputError("resolution carries no degree-one labels");
  const AbGroup& src = z.group(-2);
  IntMatrix m(ab.group.ngens(), src.ngens());
  for (std::size_t i = 0; i < src.ngens(); ++i) {
    const IntVector f = z.data(-2).representative(i);
    IntVector col(ab.group.ngens());
    for (std::size_t a = 0; a < labels.size(); ++a)
      col = add(col, scale(f[t.slot(-2, 0, a, 0, 0)], ab.projection[labels[a]]));
    m.set_column(i, ab.group.reduce(col));
  }
  return m;
}

ReciprocityReport reciprocity_map(const ResolutionPtr& x, const GComplex& c, std::span<const Integer> u) {
  const FiniteGroup& g = x->group();
  const TateCohomology z(x, concentrate(trivial_cyclic_module(g), 0), -2, -2);
  const TateCohomology cg(x, c, 0, 2);
  const Abelianization ab = abelianization(g);
  const Reciprocity r = compute_reciprocity(z, cg, u, ab);
  ReciprocityReport rep;
  rep.source = cg.group(0).to_string();
  rep.target = ab.group.to_string();
  rep.matrix = r.matrix;
  rep.isomorphism = r.cup_iso && is_isomorphism(cg.group(0), ab.group, r.matrix);
  if (r.cup_iso)
    for (std::size_t i = 0; i < r.matrix.cols(); ++i) rep.generator_images.push_back(ab.lift(r.matrix.column(i)));
  return rep;
}

std::vector<NormRow> norm_group_table(const ResolutionPtr& x, const GComplex& c, std::span<const Integer> u,
                                      std::size_t max_order) {
  const FiniteGroup& g = x->group();
  const TateCohomology z(x, concentrate(trivial_cyclic_module(g), 0), -2, -2);
  const TateCohomology cg(x, c, 0, 2);
  const Abelianization ab = abelianization(g);
  const Reciprocity r = compute_reciprocity(z, cg, u, ab);
  std::vector<NormRow> out;
  for (const Subgroup& v : all_subgroups(g, max_order)) {
    if (!v.is_normal) continue;
    NormRow row;
    row.subgroup = v;
    const TateCohomology cv(x, c, v, 0, 0);
    const IntMatrix cor = corestriction_matrix(cv, cg, 0);
    const AbGroup q = quotient_group(cg.group(0), columns_of(cor));
    row.quotient = q.to_string();
    const Quotient quo = quotient(g, v);
    const Abelianization abq = abelianization(quo.group);
    row.expected = abq.group.to_string();
    IntMatrix proj(abq.group.ngens(), ab.group.ngens());
    for (std::size_t k = 0; k < ab.group.ngens(); ++k) {
      IntVector e(ab.group.ngens());
      e[k] = Integer(1);
      proj.set_column(k, abq.projection[quo.projection[ab.lift(e)]]);
    }
    if (r.cup_iso) {
      const IntMatrix m = proj * r.matrix;
      const IntMatrix killed = m * cor;
      bool kills = true;
      for (std::size_t j = 0; j < killed.cols(); ++j) kills = kills && is_zero(abq.group.reduce(killed.column(j)));
      row.isomorphism = kills && q.order() == abq.group.order() && quotient_group(abq.group, columns_of(m)).is_trivial();
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace tatecoh
