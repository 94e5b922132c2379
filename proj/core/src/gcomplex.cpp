#include "tatecoh/gcomplex.hpp"

#include <string>

#include "tatecoh/errors.hpp"

namespace tatecoh {

GModule direct_sum(const GModule& a, const GModule& b) {
  if (!(a.group() == b.group())) throw InputError("direct_sum: modules over different groups");
  IntVector t = a.torsion();
  t.insert(t.end(), b.torsion().begin(), b.torsion().end());
  std::vector<IntMatrix> acts;
  for (std::size_t x = 0; x < a.group().order(); ++x)
    acts.push_back(block_diagonal(a.action(static_cast<int>(x)), b.action(static_cast<int>(x))));
  return GModule::from_diagonal(a.group(), std::move(t), std::move(acts));
}

GComplex::GComplex(const FiniteGroup& g, int lo, std::vector<GModule> terms, std::vector<IntMatrix> differentials)
    : group_(g), lo_(lo), terms_(std::move(terms)), differentials_(std::move(differentials)) {
  if (terms_.empty()) throw InputError("complex needs at least one term");
  if (differentials_.size() + 1 != terms_.size())
    throw InputError("complex needs exactly one differential between consecutive terms");
  for (const auto& t : terms_)
    if (!(t.group() == group_)) throw InputError("complex terms live over different groups");
  for (std::size_t k = 0; k < differentials_.size(); ++k) {
    const GModule &src = terms_[k], &dst = terms_[k + 1];
    IntMatrix& d = differentials_[k];
    const std::string where = " at degree " + std::to_string(lo_ + static_cast<int>(k));
    if (d.rows() != dst.gens() || d.cols() != src.gens()) throw InputError("differential has the wrong shape" + where);
    for (std::size_t j = 0; j < src.gens(); ++j) {
      IntVector col = scale(src.torsion()[j], d.column(j));
      if (!dst.is_zero_element(col)) throw InputError("differential is not well defined" + where);
    }
    d = dst.reduce_rows(std::move(d));
    for (std::size_t x = 0; x < group_.order(); ++x) {
      const int gx = static_cast<int>(x);
      if (!dst.reduce_rows(d * src.action(gx) - dst.action(gx) * d).is_zero())
        throw InputError("differential is not equivariant" + where);
    }
    if (k > 0 && !dst.reduce_rows(d * differentials_[k - 1]).is_zero())
      throw InputError("d o d is not zero" + where);
  }
}

GModule GComplex::term(int q) const {
  if (!in_support(q)) return zero_module(group_);
  return terms_[q - lo_];
}

IntMatrix GComplex::differential(int q) const {
  if (in_support(q) && in_support(q + 1)) return differentials_[q - lo_];
  return IntMatrix(in_support(q + 1) ? terms_[q + 1 - lo_].gens() : 0, in_support(q) ? terms_[q - lo_].gens() : 0);
}

GComplex concentrate(const GModule& m, int q) { return GComplex(m.group(), q, {m}, {}); }

GComplex shift(const GComplex& c, int n) {
  std::vector<GModule> terms;
  std::vector<IntMatrix> diffs;
  const Integer sign = (n % 2 == 0) ? Integer(1) : Integer(-1);
  for (int q = c.lo(); q <= c.hi(); ++q) {
    terms.push_back(c.term(q));
    if (q < c.hi()) diffs.push_back(sign * c.differential(q));
  }
  return GComplex(c.group(), c.lo() - n, std::move(terms), std::move(diffs));
}

GComplex restrict_complex(const GComplex& c, const Subgroup& h) {
  std::vector<GModule> terms;
  std::vector<IntMatrix> diffs;
  for (int q = c.lo(); q <= c.hi(); ++q) {
    terms.push_back(restrict_module(c.term(q), h));
    if (q < c.hi()) diffs.push_back(c.differential(q));
  }
  return GComplex(subgroup_as_group(c.group(), h), c.lo(), std::move(terms), std::move(diffs));
}

Cone cone_of_mult(const GComplex& c, long long m) {
  if (m < 1) throw InputError("cone_of_mult: m must be positive");
  Cone out;
  out.lo = c.lo() - 1;
  out.hi = c.hi();
  std::vector<GModule> terms;
  std::vector<IntMatrix> diffs;
  for (int q = out.lo; q <= out.hi; ++q) {
    const GModule a = c.term(q + 1), b = c.term(q);
    terms.push_back(direct_sum(a, b));
    const std::size_t na = a.gens(), nb = b.gens();
    IntMatrix inc(na + nb, nb), proj(na, na + nb);
    for (std::size_t i = 0; i < nb; ++i) inc(na + i, i) = 1;
    for (std::size_t i = 0; i < na; ++i) proj(i, i) = 1;
    out.inclusion.push_back(std::move(inc));
    out.projection.push_back(std::move(proj));
    if (q == out.hi) break;
    // target cone^{q+1} = C^{q+2} + C^{q+1}
    const std::size_t ta = c.term(q + 2).gens(), tb = na;
    IntMatrix d(ta + tb, na + nb);
    d.set_block(0, 0, Integer(-1) * c.differential(q + 1));
    d.set_block(ta, 0, Integer(m) * IntMatrix::identity(na));
    d.set_block(ta, na, c.differential(q));
    diffs.push_back(std::move(d));
  }
  out.complex = GComplex(c.group(), out.lo, std::move(terms), std::move(diffs));
  return out;
}

GComplex tensor_power_shifted(const GModule& m, int n, std::size_t max_gens) {
  if (n < 0) throw InputError("tensor_power_shifted: n must be nonnegative");
  if (n == 0) return concentrate(trivial_cyclic_module(m.group()), 0);
  std::size_t size = 1;
  for (int i = 0; i < n; ++i) {
    size *= std::max<std::size_t>(m.gens(), 1);
    if (size > max_gens)
      throw ComputationError("tensor power exceeds the cap of " + std::to_string(max_gens) + " generators");
  }
  GModule p = m;
  for (int i = 1; i < n; ++i) p = tensor(p, m);
  return concentrate(p, n);
}

}  // namespace tatecoh
