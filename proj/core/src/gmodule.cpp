#include "tatecoh/gmodule.hpp"

#include <string>

#include "tatecoh/errors.hpp"

namespace tatecoh {

namespace {

Integer reduce_entry(const Integer& v, const Integer& t) { return t.is_zero() ? v : floor_mod(v, t); }

bool congruent_rows(const IntMatrix& a, const IntMatrix& b, const IntVector& torsion) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (reduce_entry(a(i, j) - b(i, j), torsion[i]) != Integer(0)) return false;
  return true;
}

}  // namespace

GModule GModule::from_diagonal(const FiniteGroup& g, IntVector torsion, std::vector<IntMatrix> actions) {
  if (actions.size() != g.order()) throw InputError("module needs one action matrix per group element");
  const std::size_t n = torsion.size();
  for (const auto& t : torsion)
    if (t.sign() < 0) throw InputError("negative torsion coefficient in module presentation");
  bool has_units = false;
  for (const auto& t : torsion) has_units = has_units || t.is_unit();
  if (has_units) return from_presentation(g, n, IntMatrix::diagonal(torsion, n, n), actions);

  for (std::size_t x = 0; x < actions.size(); ++x) {
    const IntMatrix& a = actions[x];
    if (a.rows() != n || a.cols() != n)
      throw InputError("action matrix of element " + std::to_string(x) + " has the wrong shape");
    // relators must map into relators
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i)
        if (reduce_entry(a(i, j) * torsion[j], torsion[i]) != Integer(0))
          throw InputError("action of element " + std::to_string(x) + " does not preserve the relations");
  }
  GModule m;
  m.group_ = g;
  m.torsion_ = std::move(torsion);
  m.action_ = std::move(actions);
  for (auto& a : m.action_) a = m.reduce_rows(std::move(a));
  if (!congruent_rows(m.action_[g.identity()], IntMatrix::identity(n), m.torsion_))
    throw InputError("identity element does not act trivially");
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y) {
      const int xy = g.mul(static_cast<int>(x), static_cast<int>(y));
      if (!congruent_rows(m.action_[x] * m.action_[y], m.action_[xy], m.torsion_))
        throw InputError("action violates the group law at (" + std::to_string(x) + "," + std::to_string(y) + ")");
    }
  return m;
}

GModule GModule::from_presentation(const FiniteGroup& g, std::size_t gens, const IntMatrix& relators,
                                   const std::vector<IntMatrix>& actions) {
  if (relators.rows() != gens) throw InputError("relator matrix must have one row per generator");
  if (actions.size() != g.order()) throw InputError("module needs one action matrix per group element");
  SnfResult snf = smith_normal_form(relators);
  std::vector<std::size_t> keep;
  IntVector torsion;
  for (std::size_t i = 0; i < gens; ++i) {
    const Integer d = i < snf.rank ? snf.diagonal[i] : Integer(0);
    if (d.is_unit()) continue;
    keep.push_back(i);
    torsion.push_back(d);
  }
  std::vector<IntMatrix> acts;
  for (std::size_t x = 0; x < actions.size(); ++x) {
    const IntMatrix& a = actions[x];
    if (a.rows() != gens || a.cols() != gens)
      throw InputError("action matrix of element " + std::to_string(x) + " has the wrong shape");
    // well defined on the quotient: A * relators lies in the relator span
    IntMatrix image = snf.U * a * relators;
    for (std::size_t j = 0; j < image.cols(); ++j)
      for (std::size_t i = 0; i < gens; ++i) {
        const Integer d = i < snf.rank ? snf.diagonal[i] : Integer(0);
        if (reduce_entry(image(i, j), d) != Integer(0))
          throw InputError("action of element " + std::to_string(x) + " does not preserve the relations");
      }
    acts.push_back((snf.U * a * snf.U_inv).select_rows(keep).select_columns(keep));
  }
  return from_diagonal(g, std::move(torsion), std::move(acts));
}

IntMatrix GModule::relators() const {
  std::vector<IntVector> cols;
  for (std::size_t i = 0; i < gens(); ++i) {
    if (torsion_[i].is_zero()) continue;
    IntVector c(gens());
    c[i] = torsion_[i];
    cols.push_back(std::move(c));
  }
  return IntMatrix::from_columns(gens(), cols);
}

bool GModule::is_torsion_free() const {
  for (const auto& t : torsion_)
    if (!t.is_zero()) return false;
  return true;
}

bool GModule::is_finite() const {
  for (const auto& t : torsion_)
    if (t.is_zero()) return false;
  return true;
}

AbGroup GModule::abelian_group() const { return cokernel_structure(relators()); }

IntVector GModule::reduce(std::span<const Integer> v) const {
  IntVector r(v.begin(), v.end());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = reduce_entry(r[i], torsion_[i]);
  return r;
}

IntMatrix GModule::reduce_rows(IntMatrix m) const {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (!torsion_[i].is_zero())
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = floor_mod(m(i, j), torsion_[i]);
  return m;
}

bool GModule::is_zero_element(std::span<const Integer> v) const { return is_zero(reduce(v)); }

GModule trivial_module(const FiniteGroup& g, const AbGroup& a) {
  IntVector t = a.invariants();
  std::vector<IntMatrix> acts(g.order(), IntMatrix::identity(t.size()));
  return GModule::from_diagonal(g, std::move(t), std::move(acts));
}

GModule trivial_cyclic_module(const FiniteGroup& g, std::size_t n) {
  return GModule::from_diagonal(g, IntVector{Integer(n)}, std::vector<IntMatrix>(g.order(), IntMatrix::identity(1)));
}

GModule zero_module(const FiniteGroup& g) {
  return GModule::from_diagonal(g, {}, std::vector<IntMatrix>(g.order(), IntMatrix(0, 0)));
}

GModule regular_module(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<IntMatrix> acts;
  for (std::size_t x = 0; x < n; ++x) {
    IntMatrix a(n, n);
    for (std::size_t h = 0; h < n; ++h) a(g.mul(static_cast<int>(x), static_cast<int>(h)), h) = 1;
    acts.push_back(std::move(a));
  }
  return GModule::from_diagonal(g, IntVector(n), std::move(acts));
}

GModule finite_field_units(std::int64_t p, std::int64_t f, std::int64_t n, std::int64_t cap) {
  if (p < 2) throw InputError("finite_field_units: p must be a prime");
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw InputError("finite_field_units: " + std::to_string(p) + " is not prime");
  if (f < 1 || n < 1) throw InputError("finite_field_units: f and n must be positive");
  Integer q(1);
  for (std::int64_t i = 0; i < f * n; ++i) {
    q *= Integer(p);
    if (q > Integer(cap))
      throw ComputationError("finite_field_units: field size exceeds the cap of " + std::to_string(cap));
  }
  const Integer order = q - Integer(1);
  FiniteGroup g = make_cyclic(static_cast<std::size_t>(n));
  Integer pf(1);
  for (std::int64_t i = 0; i < f; ++i) pf *= Integer(p);
  std::vector<IntMatrix> acts;
  Integer s(1);
  for (std::int64_t i = 0; i < n; ++i) {
    IntMatrix a(1, 1);
    a(0, 0) = floor_mod(s, order);
    acts.push_back(std::move(a));
    s = floor_mod(s * pf, order);
  }
  return GModule::from_diagonal(g, IntVector{order}, std::move(acts));
}

GModule tensor(const GModule& m, const GModule& n) {
  if (!(m.group() == n.group())) throw InputError("tensor: modules over different groups");
  const std::size_t a = m.gens(), b = n.gens();
  IntVector torsion(a * b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) torsion[i * b + j] = gcd(m.torsion()[i], n.torsion()[j]);
  std::vector<IntMatrix> acts;
  for (std::size_t x = 0; x < m.group().order(); ++x)
    acts.push_back(kronecker(m.action(static_cast<int>(x)), n.action(static_cast<int>(x))));
  return GModule::from_presentation(m.group(), a * b, IntMatrix::diagonal(torsion, a * b, a * b), acts);
}

GModule dual_module(const GModule& m) {
  if (!m.is_torsion_free()) throw InputError("dual_module: module has torsion");
  std::vector<IntMatrix> acts;
  for (std::size_t x = 0; x < m.group().order(); ++x) acts.push_back(m.action(m.group().inv(static_cast<int>(x))).transpose());
  return GModule::from_diagonal(m.group(), m.torsion(), std::move(acts));
}

GModule restrict_module(const GModule& m, const Subgroup& h) {
  FiniteGroup sub = subgroup_as_group(m.group(), h);
  std::vector<IntMatrix> acts;
  for (int e : h.elements) acts.push_back(m.action(e));
  return GModule::from_diagonal(sub, m.torsion(), std::move(acts));
}

IntMatrix norm_endomorphism(const GModule& m) {
  IntMatrix s(m.gens(), m.gens());
  for (const auto& a : m.actions()) s = s + a;
  return m.reduce_rows(std::move(s));
}

IntMatrix invariance_defect_matrix(const GModule& m) {
  const std::size_t n = m.gens();
  IntMatrix d(n * m.group().order(), n);
  const IntMatrix id = IntMatrix::identity(n);
  for (std::size_t x = 0; x < m.group().order(); ++x) d.set_block(x * n, 0, m.action(static_cast<int>(x)) - id);
  return d;
}

namespace {

IntVector repeat(const IntVector& t, std::size_t k) {
  IntVector r;
  for (std::size_t i = 0; i < k; ++i) r.insert(r.end(), t.begin(), t.end());
  return r;
}

}  // namespace

HomologyData fixed_point_data(const GModule& m) {
  return HomologyData(SparseMatrix(m.gens(), 0), SparseMatrix::from_dense(invariance_defect_matrix(m)), m.torsion(),
                      repeat(m.torsion(), m.group().order()));
}

AbGroup fixed_points(const GModule& m) { return fixed_point_data(m).group(); }

HomologyData classical_tate_zero(const GModule& m) {
  return HomologyData(SparseMatrix::from_dense(norm_endomorphism(m)),
                      SparseMatrix::from_dense(invariance_defect_matrix(m)), m.torsion(),
                      repeat(m.torsion(), m.group().order()));
}

HomologyData classical_tate_minus_one(const GModule& m) {
  const std::size_t n = m.gens();
  IntMatrix aug(n, n * m.group().order());
  const IntMatrix id = IntMatrix::identity(n);
  for (std::size_t x = 0; x < m.group().order(); ++x) aug.set_block(0, x * n, m.action(static_cast<int>(x)) - id);
  return HomologyData(SparseMatrix::from_dense(aug), SparseMatrix::from_dense(norm_endomorphism(m)), m.torsion(),
                      m.torsion());
}

}  // namespace tatecoh
