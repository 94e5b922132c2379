#include "tatecoh/abgroup.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tatecoh {

Integer AbGroup::order() const {
  if (free_rank != 0) throw std::domain_error("AbGroup::order: group is infinite");
  Integer n(1);
  for (const auto& t : torsion) n *= t;
  return n;
}

Integer AbGroup::exponent() const {
  if (free_rank != 0) throw std::domain_error("AbGroup::exponent: group is infinite");
  return torsion.empty() ? Integer(1) : torsion.back();
}

IntVector AbGroup::invariants() const {
  IntVector v = torsion;
  v.resize(torsion.size() + free_rank);
  return v;
}

Integer AbGroup::modulus(std::size_t i) const { return i < torsion.size() ? torsion[i] : Integer(0); }

IntVector AbGroup::reduce(std::span<const Integer> c) const {
  if (c.size() != ngens()) throw std::invalid_argument("AbGroup::reduce: wrong number of coordinates");
  IntVector r(c.begin(), c.end());
  for (std::size_t i = 0; i < torsion.size(); ++i) r[i] = floor_mod(r[i], torsion[i]);
  return r;
}

IntVector AbGroup::coordinates_of(std::span<const Integer> ambient) const {
  if (coords.cols() != ambient.size() || coords.rows() != ngens())
    throw std::invalid_argument("AbGroup::coordinates_of: ambient dimension mismatch");
  return reduce(coords * ambient);
}

Integer AbGroup::element_order(std::span<const Integer> c) const {
  IntVector r = reduce(c);
  for (std::size_t i = torsion.size(); i < r.size(); ++i)
    if (!r[i].is_zero()) return Integer(0);
  Integer ord(1);
  for (std::size_t i = 0; i < torsion.size(); ++i) ord = lcm(ord, exact_div(torsion[i], gcd(r[i], torsion[i])));
  return ord;
}

std::string AbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : torsion) {
    if (!first) os << " + ";
    os << "Z/" << t;
    first = false;
  }
  if (free_rank > 0) {
    if (!first) os << " + ";
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
  }
  return os.str();
}

AbGroup cokernel_structure(const IntMatrix& A) {
  SnfResult snf = smith_normal_form(A);
  AbGroup g;
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < A.rows(); ++i) {
    if (i < snf.rank) {
      if (snf.diagonal[i].is_unit()) continue;
      g.torsion.push_back(snf.diagonal[i]);
    } else {
      ++g.free_rank;
    }
    rows.push_back(i);
  }
  g.coords = snf.U.select_rows(rows);
  g.basis_lift = snf.U_inv.select_columns(rows);
  return g;
}

AbGroup abgroup_from_invariants(std::span<const Integer> torsion, std::size_t free_rank) {
  AbGroup g;
  for (const auto& t : torsion) {
    if (t.sign() <= 0) throw std::invalid_argument("abgroup_from_invariants: torsion factors must be positive");
    if (!t.is_unit()) g.torsion.push_back(t);
  }
  std::sort(g.torsion.begin(), g.torsion.end());
  for (std::size_t i = 1; i < g.torsion.size(); ++i)
    if (!floor_mod(g.torsion[i], g.torsion[i - 1]).is_zero())
      throw std::invalid_argument("abgroup_from_invariants: factors must form a divisibility chain");
  g.free_rank = free_rank;
  g.coords = IntMatrix::identity(g.ngens());
  g.basis_lift = IntMatrix::identity(g.ngens());
  return g;
}

AbGroup homology_at(const IntMatrix& d_in, const IntMatrix& d_out) {
  if (d_in.rows() != d_out.cols()) throw std::invalid_argument("homology_at: incompatible shapes");
  if (!(d_out * d_in).is_zero()) throw std::invalid_argument("homology_at: d_out * d_in is not zero");
  const std::size_t n = d_out.cols();
  SnfResult snf = smith_normal_form(d_out);
  std::vector<std::size_t> kidx;
  for (std::size_t j = snf.rank; j < n; ++j) kidx.push_back(j);
  IntMatrix Z = snf.V.select_columns(kidx);
  IntMatrix Zc = snf.V_inv.select_rows(kidx);  // coordinates of cycles in the Z basis
  IntMatrix rel = Zc * d_in;
  AbGroup q = cokernel_structure(rel);
  q.basis_lift = Z * q.basis_lift;
  q.coords = q.coords * Zc;
  return q;
}

AbGroup quotient_group(const AbGroup& g, const std::vector<IntVector>& generators) {
  const std::size_t n = g.ngens();
  IntMatrix rel(n, g.torsion.size() + generators.size());
  for (std::size_t i = 0; i < g.torsion.size(); ++i) rel(i, i) = g.torsion[i];
  for (std::size_t j = 0; j < generators.size(); ++j) {
    if (generators[j].size() != n) throw std::invalid_argument("quotient_group: generator length mismatch");
    for (std::size_t i = 0; i < n; ++i) rel(i, g.torsion.size() + j) = generators[j][i];
  }
  return cokernel_structure(rel);
}

Integer subgroup_order(const AbGroup& g, const std::vector<IntVector>& generators) {
  return exact_div(g.order(), quotient_group(g, generators).order());
}

namespace {

SparseVec combine(const Integer& a, const SparseVec& x, const Integer& b, const SparseVec& y) {
  SparseVec out;
  axpy(out, a, x);
  axpy(out, b, y);
  return out;
}

// Lowest-row reduction without transform: afterwards nonzero columns have distinct last rows.
void reduce_columns(std::vector<SparseVec>& cols, std::size_t nrows) {
  std::vector<std::ptrdiff_t> pivot(nrows, -1);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    while (!cols[j].empty()) {
      const uint32_t L = cols[j].back().first;
      const std::ptrdiff_t p = pivot[L];
      if (p < 0) {
        pivot[L] = static_cast<std::ptrdiff_t>(j);
        break;
      }
      const Integer a = cols[p].back().second;
      const Integer b = cols[j].back().second;
      if (floor_mod(b, a).is_zero()) {
        axpy(cols[j], -exact_div(b, a), cols[p]);
      } else {
        Bezout e = ext_gcd(a, b);
        SparseVec np = combine(e.s, cols[p], e.t, cols[j]);
        SparseVec nj = combine(-exact_div(b, e.g), cols[p], exact_div(a, e.g), cols[j]);
        cols[p] = std::move(np);
        cols[j] = std::move(nj);
      }
    }
  }
}

}  // namespace

HomologyData::HomologyData(const SparseMatrix& d_in, const SparseMatrix& d_out, IntVector torsion_mid,
                           IntVector torsion_out)
    : mid_dim_(d_out.cols()), d_out_(d_out), torsion_mid_(std::move(torsion_mid)), torsion_out_(std::move(torsion_out)) {
  if (d_in.rows() != mid_dim_) throw std::invalid_argument("HomologyData: incompatible shapes");
  if (torsion_mid_.size() != mid_dim_ || torsion_out_.size() != d_out.rows())
    throw std::invalid_argument("HomologyData: torsion vector length mismatch");
  for (std::size_t i = 0; i < torsion_out_.size(); ++i)
    if (!torsion_out_[i].is_zero()) out_relator_rows_.push_back(i);

  // cycles: kernel of [d_out | relations of the target], reduced with tracked transform
  const std::size_t nb = mid_dim_, r = out_relator_rows_.size(), total = nb + r;
  std::vector<SparseVec> R(total), V(total), W(total);
  for (std::size_t j = 0; j < total; ++j) {
    V[j] = {{static_cast<uint32_t>(j), Integer(1)}};
    W[j] = V[j];
    if (j < nb) {
      R[j] = d_out.column(j);
    } else {
      const std::size_t row = out_relator_rows_[j - nb];
      R[j] = {{static_cast<uint32_t>(row), torsion_out_[row]}};
    }
  }
  std::vector<std::ptrdiff_t> pivot(d_out.rows(), -1);
  for (std::size_t j = 0; j < total; ++j) {
    while (!R[j].empty()) {
      const uint32_t L = R[j].back().first;
      const std::ptrdiff_t p = pivot[L];
      if (p < 0) {
        pivot[L] = static_cast<std::ptrdiff_t>(j);
        break;
      }
      const Integer a = R[p].back().second;
      const Integer b = R[j].back().second;
      if (floor_mod(b, a).is_zero()) {
        const Integer q = exact_div(b, a);
        axpy(R[j], -q, R[p]);
        axpy(V[j], -q, V[p]);
        axpy(W[p], q, W[j]);
      } else {
        Bezout e = ext_gcd(a, b);
        const Integer ag = exact_div(a, e.g), bg = exact_div(b, e.g);
        SparseVec rp = combine(e.s, R[p], e.t, R[j]), rj = combine(-bg, R[p], ag, R[j]);
        SparseVec vp = combine(e.s, V[p], e.t, V[j]), vj = combine(-bg, V[p], ag, V[j]);
        SparseVec wp = combine(ag, W[p], bg, W[j]), wj = combine(-e.t, W[p], e.s, W[j]);
        R[p] = std::move(rp), R[j] = std::move(rj);
        V[p] = std::move(vp), V[j] = std::move(vj);
        W[p] = std::move(wp), W[j] = std::move(wj);
      }
    }
  }

  vinv_by_column_.assign(total, {});
  for (std::size_t j = 0; j < total; ++j) {
    if (!R[j].empty()) continue;
    const auto k = static_cast<uint32_t>(kernel_vectors_.size());
    SparseVec kv;
    for (auto& e : V[j])
      if (e.first < nb) kv.push_back(std::move(e));
    kernel_vectors_.push_back(std::move(kv));
    for (auto& [c, v] : W[j]) vinv_by_column_[c].emplace_back(k, std::move(v));
  }
  R.clear();
  V.clear();
  W.clear();
  const std::size_t K = kernel_vectors_.size();

  // boundaries (images of d_in and the relations of the middle term) in kernel coordinates
  std::vector<SparseVec> rel;
  for (std::size_t a = 0; a < d_in.cols(); ++a) rel.push_back(kernel_coordinates(d_in.column(a)));
  for (std::size_t i = 0; i < nb; ++i)
    if (!torsion_mid_[i].is_zero()) rel.push_back(kernel_coordinates({{static_cast<uint32_t>(i), torsion_mid_[i]}}));
  reduce_columns(rel, K);

  std::vector<SparseVec> hard;
  for (auto& c : rel) {
    if (c.empty()) continue;
    if (c.back().second.is_unit()) {
      Elimination e{c.back().first, c.back().second, {}};
      c.pop_back();
      e.relation = std::move(c);
      eliminations_.push_back(std::move(e));
    } else {
      hard.push_back(std::move(c));
    }
  }
  std::sort(eliminations_.begin(), eliminations_.end(),
            [](const Elimination& x, const Elimination& y) { return x.gen > y.gen; });

  remaining_pos_.assign(K, 0);
  for (const auto& e : eliminations_) remaining_pos_[e.gen] = -1;
  for (std::size_t k = 0; k < K; ++k) {
    if (remaining_pos_[k] < 0) continue;
    remaining_pos_[k] = static_cast<std::ptrdiff_t>(remaining_.size());
    remaining_.push_back(k);
  }

  IntMatrix M(remaining_.size(), hard.size());
  for (std::size_t j = 0; j < hard.size(); ++j) {
    IntVector c = to_dense(hard[j], K);
    substitute(c);
    for (std::size_t k = 0; k < K; ++k)
      if (!c[k].is_zero()) M(static_cast<std::size_t>(remaining_pos_[k]), j) = c[k];
  }
  SnfResult snf = smith_normal_form(M);
  for (std::size_t i = 0; i < remaining_.size(); ++i) {
    if (i < snf.rank) {
      if (snf.diagonal[i].is_unit()) continue;
      group_.torsion.push_back(snf.diagonal[i]);
    } else {
      ++group_.free_rank;
    }
    canonical_rows_.push_back(i);
  }
  snf_U_ = std::move(snf.U);
  snf_U_inv_ = std::move(snf.U_inv);

  group_.basis_lift = IntMatrix(mid_dim_, group_.ngens());
  for (std::size_t i = 0; i < group_.ngens(); ++i) group_.basis_lift.set_column(i, representative(i));
}

SparseVec HomologyData::kernel_coordinates(const SparseVec& z) const {
  // complete z to an element of the kernel of [d_out | target relations]
  SparseVec full = z;
  if (!out_relator_rows_.empty()) {
    SparseVec dz = d_out_.apply(z);
    std::size_t k = 0;
    for (const auto& [row, v] : dz) {
      while (k < out_relator_rows_.size() && out_relator_rows_[k] < row) ++k;
      if (k < out_relator_rows_.size() && out_relator_rows_[k] == row)
        full.emplace_back(static_cast<uint32_t>(mid_dim_ + k), -exact_div(v, torsion_out_[row]));
    }
  }
  SparseVec c;
  for (const auto& [idx, v] : full) axpy(c, v, vinv_by_column_[idx]);
  return c;
}

void HomologyData::substitute(IntVector& c) const {
  for (const auto& e : eliminations_) {
    if (c[e.gen].is_zero()) continue;
    const Integer k = -(e.unit * c[e.gen]);
    c[e.gen] = Integer(0);
    for (const auto& [i, m] : e.relation) c[i].add_mul(k, m);
  }
}

IntVector HomologyData::representative(std::size_t i) const {
  if (i >= group_.ngens()) throw std::out_of_range("HomologyData::representative: generator index");
  const std::size_t col = canonical_rows_[i];
  SparseVec z;
  for (std::size_t r = 0; r < remaining_.size(); ++r)
    if (!snf_U_inv_(r, col).is_zero()) axpy(z, snf_U_inv_(r, col), kernel_vectors_[remaining_[r]]);
  return to_dense(z, mid_dim_);
}

IntVector HomologyData::representative_of(std::span<const Integer> coords) const {
  if (coords.size() != group_.ngens()) throw std::invalid_argument("HomologyData::representative_of: length mismatch");
  IntVector z(mid_dim_);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) z = add(z, scale(coords[i], representative(i)));
  return z;
}

bool HomologyData::is_cycle(std::span<const Integer> z) const {
  if (z.size() != mid_dim_) return false;
  IntVector dz = d_out_.apply(z);
  for (std::size_t r = 0; r < dz.size(); ++r) {
    if (torsion_out_[r].is_zero()) {
      if (!dz[r].is_zero()) return false;
    } else if (!floor_mod(dz[r], torsion_out_[r]).is_zero()) {
      return false;
    }
  }
  return true;
}

IntVector HomologyData::coordinates(std::span<const Integer> z) const {
  if (!is_cycle(z)) throw std::invalid_argument("HomologyData::coordinates: vector is not a cycle");
  IntVector c = to_dense(kernel_coordinates(to_sparse(z)), kernel_vectors_.size());
  substitute(c);
  IntVector rem(remaining_.size());
  for (std::size_t r = 0; r < remaining_.size(); ++r) rem[r] = c[remaining_[r]];
  IntVector u = snf_U_ * std::span<const Integer>(rem);
  IntVector out(group_.ngens());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = u[canonical_rows_[i]];
  return group_.reduce(out);
}

}  // namespace tatecoh
