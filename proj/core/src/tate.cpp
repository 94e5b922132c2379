#include "tatecoh/tate.hpp"

#include <algorithm>
#include <functional>

#include "tatecoh/errors.hpp"

namespace tatecoh {

namespace {

constexpr std::size_t kDenseLimit = 4'000'000;

Integer sign_of(int k) { return (k % 2 == 0) ? Integer(1) : Integer(-1); }

SparseVec make_sparse(std::vector<SparseEntry> e) {
  std::sort(e.begin(), e.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& x : e) {
    if (!out.empty() && out.back().first == x.first) {
      out.back().second += x.second;
      if (out.back().second.is_zero()) out.pop_back();
    } else if (!x.second.is_zero()) {
      out.push_back(std::move(x));
    }
  }
  return out;
}

void check_dense_size(std::size_t rows, std::size_t cols, const char* what) {
  if (rows != 0 && cols > kDenseLimit / rows)
    throw ComputationError(std::string(what) + ": dense system of " + std::to_string(rows) + " x " +
                           std::to_string(cols) + " exceeds the size cap");
}

std::string describe(const Subgroup& h) {
  std::string s = "{";
  for (std::size_t i = 0; i < h.elements.size(); ++i) s += (i ? "," : "") + std::to_string(h.elements[i]);
  return s + "}";
}

bool is_subset(const Subgroup& small, const Subgroup& big) {
  return std::all_of(small.elements.begin(), small.elements.end(), [&](int x) { return big.contains(x); });
}

void check_compatible(const TotalComplex& a, const TotalComplex& b, const char* what) {
  if (a.resolution_ptr() != b.resolution_ptr())
    throw InputError(std::string(what) + ": cohomologies use different resolutions");
  if (!(a.coefficients() == b.coefficients()))
    throw InputError(std::string(what) + ": cohomologies use different coefficients");
}

// Post-composition with a family of module maps C^j -> E^{j+shift}, degree q -> q + shift.
IntVector post_compose(const TotalComplex& from, const TotalComplex& to, int q, int shift,
                       const std::function<IntMatrix(int)>& map_at, std::span<const Integer> f) {
  const int qt = q + shift;
  IntVector out(to.dim(qt));
  const GComplex& c = from.coefficients();
  const std::size_t nt = from.transversal().size();
  for (int j = c.lo(); j <= c.hi(); ++j) {
    const int jt = j + shift;
    if (!to.coefficients().in_support(jt)) continue;
    const IntMatrix m = map_at(j);
    const std::size_t gs = from.term(j).gens(), gt = to.term(jt).gens();
    const int p = j - q;
    for (std::size_t a = 0; a < from.resolution().rank(p); ++a)
      for (std::size_t t = 0; t < nt; ++t) {
        const std::size_t src = from.slot(q, j, a, t, 0), dst = to.slot(qt, jt, a, t, 0);
        for (std::size_t k2 = 0; k2 < gt; ++k2) {
          Integer v;
          for (std::size_t k = 0; k < gs; ++k) v.add_mul(m(k2, k), f[src + k]);
          out[dst + k2] = to.term(jt).torsion()[k2].is_zero() ? v : floor_mod(v, to.term(jt).torsion()[k2]);
        }
      }
  }
  return out;
}

std::vector<IntVector> columns_of(const IntMatrix& m) {
  std::vector<IntVector> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return cols;
}

}  // namespace

int required_window(const GComplex& c, int qmin, int qmax) {
  return std::max(qmax - c.lo() + 1, c.hi() - qmin + 1);
}

// ---------------------------------------------------------------------------
// Total complex

TotalComplex::TotalComplex(ResolutionPtr x, GComplex c, Subgroup h)
    : x_(std::move(x)), c_(std::move(c)), h_(std::move(h)) {
  if (!x_) throw InputError("total complex needs a resolution");
  const FiniteGroup& g = x_->group();
  if (!(c_.group() == g)) throw InputError("coefficient complex and resolution live over different groups");
  for (int e : h_.elements)
    if (e < 0 || static_cast<std::size_t>(e) >= g.order()) throw InputError("subgroup element out of range");
  reps_ = right_coset_representatives(g, h_);
  coset_.assign(g.order(), 0);
  hpart_.assign(g.order(), 0);
  for (std::size_t t = 0; t < reps_.size(); ++t)
    for (int e : h_.elements) {
      const int y = g.mul(e, reps_[t]);
      coset_[y] = t;
      hpart_[y] = e;
    }
  for (int j = c_.lo(); j <= c_.hi(); ++j) {
    terms_.push_back(c_.term(j));
    dc_.push_back(c_.differential(j));
  }
  zero_ = zero_module(g);
}

const GModule& TotalComplex::term(int j) const { return c_.in_support(j) ? terms_[j - c_.lo()] : zero_; }

bool TotalComplex::has_degree(int q) const {
  return x_->has_degree(c_.lo() - q) && x_->has_degree(c_.hi() - q);
}

void TotalComplex::require(int q) const {
  if (!has_degree(q))
    throw ComputationError("total complex degree " + std::to_string(q) + " needs a resolution window of at least " +
                           std::to_string(std::max(q - c_.lo(), c_.hi() - q)) + ", have " +
                           std::to_string(x_->window()));
}

std::size_t TotalComplex::offset(int q, int j) const {
  require(q);
  std::size_t off = 0;
  for (int i = c_.lo(); i < j && i <= c_.hi(); ++i) off += basis_size(i - q) * term(i).gens();
  return off;
}

std::size_t TotalComplex::dim(int q) const { return offset(q, c_.hi() + 1); }

std::size_t TotalComplex::slot(int q, int j, std::size_t a, std::size_t t, std::size_t k) const {
  return offset(q, j) + (a * reps_.size() + t) * term(j).gens() + k;
}

IntVector TotalComplex::torsion(int q) const {
  IntVector out;
  out.reserve(dim(q));
  for (int j = c_.lo(); j <= c_.hi(); ++j) {
    const auto& t = term(j).torsion();
    for (std::size_t s = 0; s < basis_size(j - q); ++s) out.insert(out.end(), t.begin(), t.end());
  }
  return out;
}

SparseMatrix TotalComplex::differential(int q) const {
  require(q);
  require(q + 1);
  const FiniteGroup& g = x_->group();
  const std::size_t nt = reps_.size();
  SparseMatrix d(dim(q + 1), dim(q));
  const Integer sgn = -sign_of(q);
  for (int j = c_.lo(); j <= c_.hi(); ++j) {
    const int p = j - q;
    const std::size_t gj = term(j).gens();
    const std::size_t src0 = offset(q, j);
    if (j + 1 <= c_.hi()) {
      const IntMatrix& dc = dc_[j - c_.lo()];
      const std::size_t gn = term(j + 1).gens(), dst0 = offset(q + 1, j + 1);
      for (std::size_t s = 0; s < basis_size(p); ++s)
        for (std::size_t k = 0; k < gj; ++k)
          for (std::size_t k2 = 0; k2 < gn; ++k2)
            if (!dc(k2, k).is_zero()) d.add(dst0 + s * gn + k2, src0 + s * gj + k, dc(k2, k));
    }
    const GroupRingMatrix& dx = x_->differential(p - 1);
    const std::size_t dst0 = offset(q + 1, j);
    for (std::size_t b = 0; b < dx.cols(); ++b)
      for (std::size_t t = 0; t < nt; ++t)
        for (const GRTerm& term_ : dx.column(b)) {
          const int y = g.mul(reps_[t], term_.g);
          const IntMatrix& rho = term(j).action(hpart_[y]);
          const std::size_t row0 = dst0 + (b * nt + t) * gj, col0 = src0 + (term_.row * nt + coset_[y]) * gj;
          const Integer c = sgn * term_.c;
          for (std::size_t k2 = 0; k2 < gj; ++k2)
            for (std::size_t k = 0; k < gj; ++k)
              if (!rho(k2, k).is_zero()) d.add(row0 + k2, col0 + k, c * rho(k2, k));
        }
  }
  d.finalize();
  return d;
}

IntVector TotalComplex::evaluate(int q, int j, std::span<const Integer> cochain, const SparseVec& x) const {
  const GModule& m = term(j);
  const std::size_t gj = m.gens(), n = x_->group().order();
  IntVector out(gj);
  if (gj == 0) return out;
  for (const auto& [idx, coef] : x) {
    const std::size_t a = idx / n;
    const int y = static_cast<int>(idx % n);
    const std::size_t s0 = slot(q, j, a, coset_[y], 0);
    const IntMatrix& rho = m.action(hpart_[y]);
    for (std::size_t k2 = 0; k2 < gj; ++k2) {
      Integer v;
      for (std::size_t k = 0; k < gj; ++k) v.add_mul(rho(k2, k), cochain[s0 + k]);
      out[k2].add_mul(coef, v);
    }
  }
  return m.reduce(out);
}

// ---------------------------------------------------------------------------
// Cohomology groups

TateCohomology::TateCohomology(ResolutionPtr x, GComplex c, Subgroup h, int qmin, int qmax)
    : tot_(std::move(x), std::move(c), std::move(h)), qmin_(qmin), qmax_(qmax) {
  if (qmin > qmax) throw InputError("empty degree range");
  const int need = required_window(tot_.coefficients(), qmin, qmax);
  if (tot_.resolution().window() < need)
    throw ComputationError("degrees [" + std::to_string(qmin) + ", " + std::to_string(qmax) +
                           "] need a resolution window of at least " + std::to_string(need) + ", have " +
                           std::to_string(tot_.resolution().window()));
  std::vector<SparseMatrix> d;
  for (int q = qmin - 1; q <= qmax; ++q) d.push_back(tot_.differential(q));
  for (int q = qmin; q <= qmax; ++q)
    data_.emplace_back(d[q - qmin], d[q - qmin + 1], tot_.torsion(q), tot_.torsion(q + 1));
}

TateCohomology::TateCohomology(ResolutionPtr x, GComplex c, int qmin, int qmax)
    : TateCohomology(x, c, whole_group(x->group()), qmin, qmax) {}

const HomologyData& TateCohomology::data(int q) const {
  if (!covers(q)) throw std::out_of_range("degree " + std::to_string(q) + " outside the computed range");
  return data_[q - qmin_];
}

IntVector TateCohomology::representative(int q, std::span<const Integer> coords) const {
  return data(q).representative_of(coords);
}

IntVector TateCohomology::coordinates(int q, std::span<const Integer> cocycle) const {
  return data(q).coordinates(cocycle);
}

bool TateCohomology::is_cocycle(int q, std::span<const Integer> v) const { return data(q).is_cycle(v); }

TateClass TateCohomology::make_class(int q, std::span<const Integer> coords) const {
  TateClass c;
  c.degree = q;
  c.coords = group(q).reduce(coords);
  c.order = group(q).element_order(c.coords);
  return c;
}

TateCohomology tate_hypercohomology(const CompleteResolution& x, const GComplex& c, int qmin, int qmax) {
  return TateCohomology(std::make_shared<const CompleteResolution>(x), c, qmin, qmax);
}

// ---------------------------------------------------------------------------
// Restriction and corestriction

IntVector restrict_cochain(const TotalComplex& from_k, const TotalComplex& to_h, int q, std::span<const Integer> f) {
  check_compatible(from_k, to_h, "restriction");
  if (!is_subset(to_h.subgroup(), from_k.subgroup())) throw InputError("restriction: target is not a subgroup");
  const GComplex& c = from_k.coefficients();
  IntVector out(to_h.dim(q));
  for (int j = c.lo(); j <= c.hi(); ++j) {
    const GModule& m = from_k.term(j);
    const std::size_t gj = m.gens();
    const int p = j - q;
    for (std::size_t a = 0; a < from_k.resolution().rank(p); ++a)
      for (std::size_t th = 0; th < to_h.transversal().size(); ++th) {
        const int y = to_h.transversal()[th];
        const std::size_t src = from_k.slot(q, j, a, from_k.coset_index(y), 0), dst = to_h.slot(q, j, a, th, 0);
        const IntVector v = m.action(from_k.h_part(y)) * f.subspan(src, gj);
        const IntVector r = m.reduce(v);
        std::copy(r.begin(), r.end(), out.begin() + static_cast<std::ptrdiff_t>(dst));
      }
  }
  return out;
}

IntVector corestrict_cochain(const TotalComplex& from_h, const TotalComplex& to_k, int q, std::span<const Integer> f) {
  check_compatible(from_h, to_k, "corestriction");
  const Subgroup& h = from_h.subgroup();
  const Subgroup& k = to_k.subgroup();
  if (!is_subset(h, k)) throw InputError("corestriction: source is not a subgroup of the target");
  const FiniteGroup& g = from_h.resolution().group();
  // left coset representatives of H inside K
  std::vector<int> reps;
  std::vector<bool> seen(g.order(), false);
  for (int x : k.elements) {
    if (seen[x]) continue;
    reps.push_back(x);
    for (int e : h.elements) seen[g.mul(x, e)] = true;
  }
  const GComplex& c = from_h.coefficients();
  IntVector out(to_k.dim(q));
  for (int j = c.lo(); j <= c.hi(); ++j) {
    const GModule& m = from_h.term(j);
    const std::size_t gj = m.gens();
    const int p = j - q;
    for (std::size_t a = 0; a < from_h.resolution().rank(p); ++a)
      for (std::size_t tk = 0; tk < to_k.transversal().size(); ++tk) {
        IntVector acc(gj);
        for (int r : reps) {
          const int y = g.mul(g.inv(r), to_k.transversal()[tk]);
          const std::size_t src = from_h.slot(q, j, a, from_h.coset_index(y), 0);
          acc = add(acc, m.action(g.mul(r, from_h.h_part(y))) * f.subspan(src, gj));
        }
        const IntVector r = m.reduce(acc);
        std::copy(r.begin(), r.end(), out.begin() + static_cast<std::ptrdiff_t>(to_k.slot(q, j, a, tk, 0)));
      }
  }
  return out;
}

IntMatrix restriction_matrix(const TateCohomology& from_k, const TateCohomology& to_h, int q) {
  const std::size_t n = from_k.group(q).ngens();
  IntMatrix m(to_h.group(q).ngens(), n);
  for (std::size_t i = 0; i < n; ++i)
    m.set_column(i, to_h.coordinates(q, restrict_cochain(from_k.total(), to_h.total(), q,
                                                         from_k.data(q).representative(i))));
  return m;
}

IntMatrix corestriction_matrix(const TateCohomology& from_h, const TateCohomology& to_k, int q) {
  const std::size_t n = from_h.group(q).ngens();
  IntMatrix m(to_k.group(q).ngens(), n);
  for (std::size_t i = 0; i < n; ++i)
    m.set_column(i, to_k.coordinates(q, corestrict_cochain(from_h.total(), to_k.total(), q,
                                                           from_h.data(q).representative(i))));
  return m;
}

TateClass restriction(const TateCohomology& from_k, const TateCohomology& to_h, const TateClass& c) {
  const IntVector z = restrict_cochain(from_k.total(), to_h.total(), c.degree, from_k.representative(c.degree, c.coords));
  return to_h.make_class(c.degree, to_h.coordinates(c.degree, z));
}

TateClass corestriction(const TateCohomology& from_h, const TateCohomology& to_k, const TateClass& c) {
  const IntVector z =
      corestrict_cochain(from_h.total(), to_k.total(), c.degree, from_h.representative(c.degree, c.coords));
  return to_k.make_class(c.degree, to_k.coordinates(c.degree, z));
}

// ---------------------------------------------------------------------------
// Chain lifts and cup products

ChainLift::ChainLift(const TotalComplex& z_total, int s, std::span<const Integer> cocycle, int pmin, int pmax)
    : tot_(z_total), s_(s), pmin_(std::min(pmin, -s)), pmax_(std::max(pmax, -s)) {
  const GComplex& c = tot_.coefficients();
  const GModule& z = tot_.term(0);
  bool trivial_z = c.lo() == 0 && c.hi() == 0 && z.gens() == 1 && z.torsion()[0].is_zero();
  for (std::size_t y = 0; trivial_z && y < z.group().order(); ++y)
    trivial_z = z.action(static_cast<int>(y))(0, 0) == Integer(1);
  if (!trivial_z) throw InputError("chain lifts need the trivial module Z in degree 0");
  const CompleteResolution& x = tot_.resolution();
  if (x.rank(0) != 1 || x.augmentation()[0] != Integer(1))
    throw InputError("chain lifts need a resolution with F_0 = Z[G] and augmentation 1");
  for (int p = pmin_; p <= pmax_; ++p)
    if (!x.has_degree(p) || !x.has_degree(p + s))
      throw ComputationError("chain lift of degree " + std::to_string(s) + " leaves the resolution window");
  if (cocycle.size() != tot_.dim(s)) throw InputError("chain lift: cocycle has the wrong length");

  maps_.resize(pmax_ - pmin_ + 1);
  const std::size_t nt = tot_.transversal().size();
  const int e = x.group().identity();
  auto& anchor = maps_[-s - pmin_];
  anchor.resize(tot_.basis_size(-s));
  for (std::size_t b = 0; b < x.rank(-s); ++b)
    for (std::size_t t = 0; t < nt; ++t) {
      const Integer& v = cocycle[tot_.slot(s, 0, b, t, 0)];
      if (!v.is_zero()) anchor[b * nt + t] = {{static_cast<uint32_t>(e), v}};
    }
  for (int p = -s - 1; p >= pmin_; --p) step_down(p);
  for (int p = -s; p < pmax_; ++p) step_up(p);
}

const SparseMatrix& ChainLift::zd(int p) const {
  auto it = zd_.find(p);
  if (it == zd_.end()) it = zd_.emplace(p, tot_.resolution().differential(p).z_expand(tot_.resolution().group())).first;
  return it->second;
}

SparseVec ChainLift::translate(int h, const SparseVec& v) const {
  const FiniteGroup& g = tot_.resolution().group();
  const std::size_t n = g.order();
  std::vector<SparseEntry> e;
  e.reserve(v.size());
  for (const auto& [idx, c] : v)
    e.emplace_back(static_cast<uint32_t>((idx / n) * n + g.mul(h, static_cast<int>(idx % n))), c);
  return make_sparse(std::move(e));
}

SparseVec ChainLift::boundary_of_basis(int p, std::size_t b, std::size_t t) const {
  const FiniteGroup& g = tot_.resolution().group();
  const std::size_t n = g.order();
  std::vector<SparseEntry> e;
  for (const GRTerm& term : tot_.resolution().differential(p).column(b))
    e.emplace_back(static_cast<uint32_t>(term.row * n + g.mul(tot_.transversal()[t], term.g)), term.c);
  return make_sparse(std::move(e));
}

const SparseVec& ChainLift::on_basis(int p, std::size_t a, std::size_t t) const {
  if (p < pmin_ || p > pmax_) throw std::out_of_range("chain lift degree outside the computed range");
  return maps_[p - pmin_][a * tot_.transversal().size() + t];
}

SparseVec ChainLift::apply(int p, const SparseVec& x) const {
  const std::size_t n = tot_.resolution().group().order();
  SparseVec out;
  for (const auto& [idx, c] : x) {
    const int y = static_cast<int>(idx % n);
    const SparseVec& img = on_basis(p, idx / n, tot_.coset_index(y));
    if (!img.empty()) axpy(out, c, translate(tot_.h_part(y), img));
  }
  return out;
}

void ChainLift::step_down(int p) {
  // d tau_p (t e_b) = (-1)^s tau_{p+1}(d (t e_b))
  const SparseMatrix& d = zd(p + s_);
  check_dense_size(d.rows(), d.cols(), "chain lift");
  const IntegerSolver solver(d.to_dense());
  const std::size_t nt = tot_.transversal().size();
  const Integer sg = sign_of(s_);
  auto& out = maps_[p - pmin_];
  out.resize(tot_.basis_size(p));
  for (std::size_t b = 0; b < tot_.resolution().rank(p); ++b)
    for (std::size_t t = 0; t < nt; ++t) {
      SparseVec w;
      axpy(w, sg, apply(p + 1, boundary_of_basis(p, b, t)));
      auto u = solver.solve(to_dense(w, d.rows()));
      if (!u) throw ComputationError("chain lift: no integral solution in degree " + std::to_string(p));
      out[b * nt + t] = to_sparse(*u);
    }
}

void ChainLift::step_up(int p) {
  // tau_{p+1} d = (-1)^s d tau_p, solved for all basis images of X^{p+1} at once
  const CompleteResolution& x = tot_.resolution();
  const FiniteGroup& g = x.group();
  const std::size_t n = g.order(), nt = tot_.transversal().size();
  const std::size_t D = x.rank(p + 1 + s_) * n;
  const std::size_t rows = tot_.basis_size(p) * D, cols = tot_.basis_size(p + 1) * D;
  check_dense_size(rows, cols, "chain lift");
  IntMatrix sys(rows, cols);
  IntVector rhs(rows);
  const SparseMatrix& d = zd(p + s_);
  const Integer sg = sign_of(s_);
  for (std::size_t b = 0; b < x.rank(p); ++b)
    for (std::size_t t = 0; t < nt; ++t) {
      const std::size_t r0 = (b * nt + t) * D;
      for (const GRTerm& term : x.differential(p).column(b)) {
        const int y = g.mul(tot_.transversal()[t], term.g);
        const int h = tot_.h_part(y);
        const std::size_t c0 = (term.row * nt + tot_.coset_index(y)) * D;
        for (std::size_t i = 0; i < D; ++i) {
          const std::size_t pi = (i / n) * n + static_cast<std::size_t>(g.mul(h, static_cast<int>(i % n)));
          sys(r0 + pi, c0 + i) += term.c;
        }
      }
      const SparseVec target = d.apply(on_basis(p, b, t));
      for (const auto& [idx, c] : target) rhs[r0 + idx] = sg * c;
    }
  auto u = solve_integer(sys, rhs);
  if (!u) throw ComputationError("chain lift: no integral solution in degree " + std::to_string(p + 1));
  auto& out = maps_[p + 1 - pmin_];
  out.resize(tot_.basis_size(p + 1));
  for (std::size_t k = 0; k < out.size(); ++k)
    out[k] = to_sparse(std::span<const Integer>(*u).subspan(k * D, D));
}

bool ChainLift::verify() const {
  const CompleteResolution& x = tot_.resolution();
  const std::size_t nt = tot_.transversal().size();
  const Integer sg = sign_of(s_);
  for (int p = pmin_; p < pmax_; ++p)
    for (std::size_t b = 0; b < x.rank(p); ++b)
      for (std::size_t t = 0; t < nt; ++t) {
        const SparseVec lhs = zd(p + s_).apply(on_basis(p, b, t));
        SparseVec rhs;
        axpy(rhs, sg, apply(p + 1, boundary_of_basis(p, b, t)));
        if (lhs != rhs) return false;
      }
  return true;
}

IntVector compose_with_lift(const TotalComplex& c_total, int d, std::span<const Integer> a, const ChainLift& tau,
                            int q) {
  if (q - d != tau.degree()) throw InputError("compose_with_lift: degrees do not add up");
  const GComplex& c = c_total.coefficients();
  const std::size_t nt = c_total.transversal().size();
  IntVector out(c_total.dim(q));
  for (int j = c.lo(); j <= c.hi(); ++j) {
    const int p = j - q;
    const std::size_t gj = c_total.term(j).gens();
    if (gj == 0) continue;
    for (std::size_t b = 0; b < c_total.resolution().rank(p); ++b)
      for (std::size_t t = 0; t < nt; ++t) {
        const IntVector v = c_total.evaluate(d, j, a, tau.on_basis(p, b, t));
        std::copy(v.begin(), v.end(), out.begin() + static_cast<std::ptrdiff_t>(c_total.slot(q, j, b, t, 0)));
      }
  }
  return out;
}

IntMatrix cup_matrix(const TateCohomology& z_coh, const TateCohomology& c_coh, int d, std::span<const Integer> a,
                     int q) {
  const TotalComplex& zt = z_coh.total();
  const TotalComplex& ct = c_coh.total();
  if (zt.resolution_ptr() != ct.resolution_ptr()) throw InputError("cup product: different resolutions");
  if (!(zt.subgroup() == ct.subgroup())) throw InputError("cup product: different subgroups");
  const GComplex& c = ct.coefficients();
  if (c.hi() - c.lo() > 1)
    throw InputError("cup products need coefficients supported in at most two adjacent degrees");
  const int s = q - d;
  const IntVector a_rep = c_coh.representative(d, a);
  const std::size_t n = z_coh.group(s).ngens();
  IntMatrix m(c_coh.group(q).ngens(), n);
  for (std::size_t i = 0; i < n; ++i) {
    const ChainLift tau(zt, s, z_coh.data(s).representative(i), c.lo() - q, c.hi() - q);
    m.set_column(i, c_coh.coordinates(q, compose_with_lift(ct, d, a_rep, tau, q)));
  }
  return m;
}

IntMatrix cup_with(const TateCohomology& z_coh, const TateCohomology& c_coh, std::span<const Integer> a, int q) {
  return cup_matrix(z_coh, c_coh, 2, a, q);
}

// ---------------------------------------------------------------------------
// Diagonal approximation

DiagonalApproximation::DiagonalApproximation(ResolutionPtr x, int depth) : x_(std::move(x)), depth_(depth) {
  if (depth < 0 || depth > x_->window()) throw InputError("diagonal approximation depth outside the window");
  if (x_->rank(0) != 1 || x_->augmentation()[0] != Integer(1))
    throw InputError("diagonal approximation needs F_0 = Z[G] with augmentation 1");
  const FiniteGroup& g = x_->group();
  const std::size_t n = g.order();
  delta_.resize(depth + 1);
  const uint32_t e = static_cast<uint32_t>(g.identity());
  delta_[0] = {SparseVec{{static_cast<uint32_t>(e * n + e), Integer(1)}}};
  for (int k = 1; k <= depth; ++k) {
    const SparseMatrix dt = tensor_differential(k);
    check_dense_size(dt.rows(), dt.cols(), "diagonal approximation");
    const IntegerSolver solver(dt.to_dense());
    const GroupRingMatrix& dx = x_->differential(-k);
    for (std::size_t c = 0; c < x_->rank(-k); ++c) {
      SparseVec rhs;
      for (const GRTerm& t : dx.column(c)) axpy(rhs, t.c, act(k - 1, t.g, delta_[k - 1][t.row]));
      auto u = solver.solve(to_dense(rhs, dt.rows()));
      if (!u) throw ComputationError("diagonal approximation: no integral solution in degree " + std::to_string(k));
      delta_[k].push_back(to_sparse(*u));
    }
  }
}

std::size_t DiagonalApproximation::block_offset(int n, int i) const {
  const std::size_t m = x_->group().order();
  std::size_t off = 0;
  for (int a = 0; a < i && a <= n; ++a) off += x_->rank(-a) * m * x_->rank(-(n - a)) * m;
  return off;
}

SparseVec DiagonalApproximation::act(int n, int h, const SparseVec& v) const {
  const FiniteGroup& g = x_->group();
  const std::size_t m = g.order();
  std::vector<SparseEntry> out;
  out.reserve(v.size());
  int i = 0;
  for (const auto& [idx, c] : v) {
    while (idx >= block_offset(n, i + 1)) ++i;
    const std::size_t rj = x_->rank(-(n - i)) * m;
    const std::size_t local = idx - block_offset(n, i);
    const std::size_t l = local / rj, r = local % rj;
    const std::size_t l2 = (l / m) * m + g.mul(h, static_cast<int>(l % m));
    const std::size_t r2 = (r / m) * m + g.mul(h, static_cast<int>(r % m));
    out.emplace_back(static_cast<uint32_t>(block_offset(n, i) + l2 * rj + r2), c);
  }
  return make_sparse(std::move(out));
}

SparseMatrix DiagonalApproximation::tensor_differential(int n) const {
  const FiniteGroup& g = x_->group();
  const std::size_t m = g.order();
  SparseMatrix d(dim(n - 1), dim(n));
  for (int i = 0; i <= n; ++i) {
    const int j = n - i;
    const std::size_t ri = x_->rank(-i) * m, rj = x_->rank(-j) * m;
    const std::size_t src0 = block_offset(n, i);
    // d x (x) y lands in block (i-1, j); (-1)^i x (x) d y in block (i, j-1)
    const SparseMatrix dxi = i > 0 ? x_->differential(-i).z_expand(g) : SparseMatrix();
    const SparseMatrix dxj = j > 0 ? x_->differential(-j).z_expand(g) : SparseMatrix();
    const Integer sg = sign_of(i);
    for (std::size_t l = 0; l < ri; ++l)
      for (std::size_t r = 0; r < rj; ++r) {
        const std::size_t col = src0 + l * rj + r;
        if (i > 0) {
          const std::size_t dst0 = block_offset(n - 1, i - 1);
          for (const auto& [row, c] : dxi.column(l)) d.add(dst0 + row * rj + r, col, c);
        }
        if (j > 0) {
          const std::size_t dst0 = block_offset(n - 1, i);
          const std::size_t rj1 = x_->rank(-(j - 1)) * m;
          for (const auto& [row, c] : dxj.column(r)) d.add(dst0 + l * rj1 + row, col, sg * c);
        }
      }
  }
  d.finalize();
  return d;
}

bool DiagonalApproximation::verify() const {
  // (eps (x) eps) Delta_0 (e) = 1
  Integer aug;
  for (const auto& entry : delta_[0][0]) aug += entry.second;
  if (aug != Integer(1)) return false;
  for (int k = 1; k <= depth_; ++k) {
    const SparseMatrix dt = tensor_differential(k);
    for (std::size_t c = 0; c < x_->rank(-k); ++c) {
      SparseVec rhs;
      for (const GRTerm& t : x_->differential(-k).column(c)) axpy(rhs, t.c, act(k - 1, t.g, delta_[k - 1][t.row]));
      if (dt.apply(delta_[k][c]) != rhs) return false;
    }
  }
  return true;
}

IntVector DiagonalApproximation::cup_cochains(int s, std::span<const Integer> x, int t,
                                              std::span<const Integer> y) const {
  const int n = s + t;
  if (s < 0 || t < 0 || n > depth_) throw InputError("cup_cochains: degrees outside the diagonal");
  const std::size_t m = x_->group().order();
  const std::size_t rt = x_->rank(-t) * m;
  const std::size_t lo = block_offset(n, s), hi = block_offset(n, s + 1);
  IntVector out(x_->rank(-n));
  for (std::size_t c = 0; c < out.size(); ++c)
    for (const auto& [idx, coef] : delta_[n][c]) {
      if (idx < lo || idx >= hi) continue;
      const std::size_t local = idx - lo;
      out[c].add_mul(coef, x[(local / rt) / m] * y[(local % rt) / m]);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Checks

bool is_isomorphism(const AbGroup& source, const AbGroup& target, const IntMatrix& m) {
  if (!source.is_finite() || !target.is_finite())
    throw InputError("is_isomorphism: only finite groups are supported");
  if (source.order() != target.order()) return false;
  return quotient_group(target, columns_of(m)).is_trivial();
}

Integer image_order(const AbGroup& target, const IntMatrix& m) { return subgroup_order(target, columns_of(m)); }

bool TnkReport::all_pass() const {
  return hypothesis_i && hypothesis_ii &&
         std::all_of(isomorphism.begin(), isomorphism.end(), [](const auto& kv) { return kv.second; });
}

TnkReport tate_nakayama_check(const ResolutionPtr& x, const GComplex& c, std::span<const Integer> a, int qmin, int qmax,
                              std::size_t max_order) {
  const FiniteGroup& g = x->group();
  TnkReport rep;
  const TateCohomology cg(x, c, std::min(qmin, 1), std::max(qmax, 2));
  const IntVector a_rep = cg.representative(2, a);
  rep.hypothesis_i = rep.hypothesis_ii = true;
  for (const Subgroup& h : all_subgroups(g, max_order)) {
    const TateCohomology ch(x, c, h, 1, 2);
    TnkSubgroupRow row;
    row.subgroup = h;
    row.h1 = ch.group(1).to_string();
    row.h2 = ch.group(2).to_string();
    row.h1_vanishes = ch.group(1).is_trivial();
    const IntVector ra = ch.coordinates(2, restrict_cochain(cg.total(), ch.total(), 2, a_rep));
    const AbGroup& h2 = ch.group(2);
    row.restricted_order = h2.element_order(ra);
    row.generates = h2.is_finite() && h2.is_cyclic() && h2.order() == Integer(h.order()) &&
                    row.restricted_order == Integer(h.order());
    if (!row.h1_vanishes && rep.hypothesis_i) {
      rep.hypothesis_i = false;
      rep.failure = "hypothesis (i): Hhat^1(H, C) = " + row.h1 + " for H = " + describe(h);
    }
    if (!row.generates && rep.hypothesis_ii) {
      rep.hypothesis_ii = false;
      if (rep.hypothesis_i)
        rep.failure = "hypothesis (ii): restriction of the class has order " + row.restricted_order.to_string() +
                      " in Hhat^2(H, C) = " + row.h2 + " for H = " + describe(h);
    }
    rep.rows.push_back(std::move(row));
  }
  if (!rep.hypothesis_i || !rep.hypothesis_ii) return rep;
  const TateCohomology z(x, concentrate(trivial_cyclic_module(g), 0), qmin - 2, qmax - 2);
  for (int q = qmin; q <= qmax; ++q) {
    const IntMatrix m = cup_with(z, cg, a, q);
    rep.source[q] = z.group(q - 2).to_string();
    rep.target[q] = cg.group(q).to_string();
    rep.isomorphism[q] = is_isomorphism(z.group(q - 2), cg.group(q), m);
  }
  return rep;
}

bool ConeReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const ConeRow& r) { return r.holds; });
}

ConeReport cone_les_check(const ResolutionPtr& x, const GComplex& c, long long m, int imin, int imax) {
  const Cone cone = cone_of_mult(c, m);
  const TateCohomology hc(x, c, imin, imax + 1);
  const TateCohomology hk(x, cone.complex, imin, imax);
  auto inclusion = [&](int j) { return cone.inclusion[j - cone.lo]; };
  auto projection = [&](int j) { return cone.projection[j - cone.lo]; };
  ConeReport rep;
  rep.m = m;
  for (int i = imin; i <= imax; ++i) {
    ConeRow row;
    row.degree = i;
    const AbGroup& a = hc.group(i);
    const AbGroup& b = hc.group(i + 1);
    const AbGroup& k = hk.group(i);
    std::vector<IntVector> mult;
    for (std::size_t r = 0; r < a.ngens(); ++r) {
      IntVector v(a.ngens());
      v[r] = Integer(m);
      mult.push_back(std::move(v));
    }
    row.quotient_order = quotient_group(a, mult).order();
    row.torsion_order = Integer(1);
    for (const auto& t : b.torsion) row.torsion_order *= gcd(t, Integer(m));
    row.cone_order = k.order();

    IntMatrix inc(k.ngens(), a.ngens()), comp(b.ngens(), a.ngens()), proj(b.ngens(), k.ngens());
    for (std::size_t r = 0; r < a.ngens(); ++r) {
      const IntVector z = post_compose(hc.total(), hk.total(), i, 0, inclusion, hc.data(i).representative(r));
      inc.set_column(r, hk.coordinates(i, z));
      comp.set_column(r, hc.coordinates(i + 1, post_compose(hk.total(), hc.total(), i, 1, projection, z)));
    }
    for (std::size_t r = 0; r < k.ngens(); ++r)
      proj.set_column(
          r, hc.coordinates(i + 1, post_compose(hk.total(), hc.total(), i, 1, projection, hk.data(i).representative(r))));
    row.inclusion_image = image_order(k, inc);
    row.projection_image = image_order(b, proj);
    row.composite_zero = image_order(b, comp) == Integer(1);
    row.holds = row.composite_zero && row.cone_order == row.quotient_order * row.torsion_order &&
                row.inclusion_image == row.quotient_order && row.projection_image == row.torsion_order;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

ClassicalComparison compare_with_classical(const ResolutionPtr& x, const GModule& m) {
  const TateCohomology h(x, concentrate(m, 0), -1, 0);
  ClassicalComparison out;
  const AbGroup z = classical_tate_zero(m).group();
  const AbGroup mo = classical_tate_minus_one(m).group();
  out.hyper_zero = h.group(0).to_string();
  out.hyper_minus_one = h.group(-1).to_string();
  out.classical_zero = z.to_string();
  out.classical_minus_one = mo.to_string();
  out.agrees = h.group(0).same_structure(z) && h.group(-1).same_structure(mo);
  return out;
}

}  // namespace tatecoh
