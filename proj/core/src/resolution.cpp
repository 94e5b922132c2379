#include "tatecoh/resolution.hpp"

#include <algorithm>

#include "tatecoh/errors.hpp"

namespace tatecoh {

void GroupRingMatrix::add(std::size_t row, std::size_t col, int g, const Integer& c) {
  if (c.is_zero()) return;
  columns_[col].push_back({static_cast<uint32_t>(row), g, c});
}

void GroupRingMatrix::finalize() {
  for (auto& col : columns_) {
    std::sort(col.begin(), col.end(), [](const GRTerm& a, const GRTerm& b) {
      return a.row != b.row ? a.row < b.row : a.g < b.g;
    });
    std::vector<GRTerm> merged;
    for (auto& t : col) {
      if (!merged.empty() && merged.back().row == t.row && merged.back().g == t.g) {
        merged.back().c += t.c;
        if (merged.back().c.is_zero()) merged.pop_back();
      } else {
        merged.push_back(std::move(t));
      }
    }
    col = std::move(merged);
  }
}

bool GroupRingMatrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
}

SparseMatrix GroupRingMatrix::z_expand(const FiniteGroup& g) const {
  const std::size_t n = g.order();
  SparseMatrix m(rows_ * n, cols_ * n);
  for (std::size_t b = 0; b < cols_; ++b)
    for (std::size_t h = 0; h < n; ++h)
      for (const auto& t : columns_[b])
        m.add(t.row * n + static_cast<std::size_t>(g.mul(static_cast<int>(h), t.g)), b * n + h, t.c);
  m.finalize();
  return m;
}

GroupRingMatrix GroupRingMatrix::conjugate_transpose(const FiniteGroup& g) const {
  GroupRingMatrix r(cols_, rows_);
  for (std::size_t b = 0; b < cols_; ++b)
    for (const auto& t : columns_[b]) r.add(b, t.row, g.inv(t.g), t.c);
  r.finalize();
  return r;
}

FreeResolution bar_resolution(const FiniteGroup& g, int length, std::size_t cap) {
  if (length < 1) throw InputError("bar_resolution: length must be at least 1");
  const std::size_t n = g.order();
  FreeResolution res;
  res.group = g;
  res.kind = "bar";
  std::size_t r = 1;
  res.ranks.push_back(1);
  for (int i = 1; i <= length; ++i) {
    r *= n;
    if (r > cap)
      throw ComputationError("bar resolution of length " + std::to_string(length) + " over a group of order " +
                             std::to_string(n) + " exceeds the cap of " + std::to_string(cap) + " generators");
    res.ranks.push_back(r);
  }
  res.boundary.emplace_back();
  std::vector<int> tup;
  for (int i = 1; i <= length; ++i) {
    GroupRingMatrix d(res.ranks[i - 1], res.ranks[i]);
    tup.assign(i, 0);
    auto index = [&](const std::vector<int>& t) {
      std::size_t k = 0;
      for (int x : t) k = k * n + static_cast<std::size_t>(x);
      return k;
    };
    for (std::size_t b = 0; b < res.ranks[i]; ++b) {
      std::size_t rem = b;
      for (int k = i - 1; k >= 0; --k) {
        tup[k] = static_cast<int>(rem % n);
        rem /= n;
      }
      std::vector<int> face(tup.begin() + 1, tup.end());
      d.add(index(face), b, tup[0], Integer(1));
      for (int k = 1; k < i; ++k) {
        face.assign(tup.begin(), tup.end());
        face[k - 1] = g.mul(tup[k - 1], tup[k]);
        face.erase(face.begin() + k);
        d.add(index(face), b, g.identity(), Integer(k % 2 == 0 ? 1 : -1));
      }
      face.assign(tup.begin(), tup.end() - 1);
      d.add(index(face), b, g.identity(), Integer(i % 2 == 0 ? 1 : -1));
    }
    d.finalize();
    res.boundary.push_back(std::move(d));
  }
  res.augmentation = {Integer(1)};
  for (std::size_t x = 0; x < n; ++x) res.h1_labels.push_back(static_cast<int>(x));
  return res;
}

FreeResolution periodic_resolution(const FiniteGroup& g, int length) {
  if (length < 1) throw InputError("periodic_resolution: length must be at least 1");
  const int sigma = g.cyclic_generator();
  if (sigma < 0) throw InputError("periodic_resolution: group is not cyclic");
  FreeResolution res;
  res.group = g;
  res.kind = "periodic";
  res.ranks.assign(length + 1, 1);
  res.boundary.emplace_back();
  for (int i = 1; i <= length; ++i) {
    GroupRingMatrix d(1, 1);
    if (i % 2 == 1) {
      d.add(0, 0, sigma, Integer(1));
      d.add(0, 0, g.identity(), Integer(-1));
    } else {
      for (std::size_t x = 0; x < g.order(); ++x) d.add(0, 0, static_cast<int>(x), Integer(1));
    }
    d.finalize();
    res.boundary.push_back(std::move(d));
  }
  res.augmentation = {Integer(1)};
  res.h1_labels = {sigma};
  return res;
}

CompleteResolution::CompleteResolution(const FreeResolution& res)
    : group_(res.group), kind_(res.kind), n_(res.length()), augmentation_(res.augmentation), h1_labels_(res.h1_labels) {
  if (n_ < 1) throw InputError("complete resolution needs a resolution of length at least 1");
  for (int p = -n_; p <= n_; ++p) ranks_.push_back(p <= 0 ? res.ranks[-p] : res.ranks[p - 1]);
  for (int p = -n_; p < n_; ++p) {
    if (p < 0) {
      diffs_.push_back(res.boundary[-p]);
    } else if (p == 0) {
      const std::size_t r = res.ranks[0];
      GroupRingMatrix d(r, r);
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b)
          for (std::size_t x = 0; x < group_.order(); ++x)
            d.add(a, b, static_cast<int>(x), augmentation_[a] * augmentation_[b]);
      d.finalize();
      diffs_.push_back(std::move(d));
    } else {
      diffs_.push_back(res.boundary[p].conjugate_transpose(group_));
    }
  }
}

std::size_t CompleteResolution::rank(int p) const {
  if (!has_degree(p)) throw std::out_of_range("CompleteResolution::rank: degree outside the window");
  return ranks_[p + n_];
}

const GroupRingMatrix& CompleteResolution::differential(int p) const {
  if (p < -n_ || p >= n_) throw std::out_of_range("CompleteResolution::differential: degree outside the window");
  return diffs_[p + n_];
}

CompleteResolution CompleteResolution::with_differential(int p, GroupRingMatrix d) const {
  const GroupRingMatrix& old = differential(p);
  if (d.rows() != old.rows() || d.cols() != old.cols())
    throw std::invalid_argument("with_differential: shape mismatch");
  CompleteResolution c = *this;
  c.diffs_[p + n_] = std::move(d);
  return c;
}

CompleteResolution complete_resolution(const FreeResolution& res) { return CompleteResolution(res); }

bool ExactnessReport::all_pass() const {
  return augmentation_exact && coaugmentation_exact && differentials_compose &&
         std::all_of(exact.begin(), exact.end(), [](bool b) { return b; });
}

std::vector<int> ExactnessReport::failures() const {
  std::vector<int> f;
  for (std::size_t i = 0; i < degrees.size(); ++i)
    if (!exact[i]) f.push_back(degrees[i]);
  return f;
}

ExactnessReport validate_complete_resolution(const CompleteResolution& x) {
  const FiniteGroup& g = x.group();
  const std::size_t n = g.order();
  const int N = x.window();
  ExactnessReport rep;
  std::vector<SparseMatrix> z;
  for (int p = -N; p < N; ++p) z.push_back(x.differential(p).z_expand(g));
  auto zd = [&](int p) -> const SparseMatrix& { return z[p + N]; };
  for (int p = -N; p <= N; ++p) rep.z_ranks.push_back(x.rank(p) * n);

  rep.differentials_compose = true;
  for (int p = -N; p + 1 < N; ++p)
    if (multiply(zd(p + 1), zd(p)).nonzeros() != 0) rep.differentials_compose = false;

  for (int p = -N + 1; p < N; ++p) {
    rep.degrees.push_back(p);
    bool ok = rep.differentials_compose;
    if (ok) {
      const std::size_t m = x.rank(p) * n;
      HomologyData h(zd(p - 1), zd(p), IntVector(m), IntVector(x.rank(p + 1) * n));
      ok = h.group().is_trivial();
    }
    rep.exact.push_back(ok);
  }

  // X^-1 -> X^0 -> Z -> 0
  const std::size_t r0 = x.rank(0);
  SparseMatrix eps(1, r0 * n);
  Integer content;
  for (std::size_t a = 0; a < r0; ++a) {
    content = gcd(content, x.augmentation()[a]);
    for (std::size_t h = 0; h < n; ++h) eps.add(0, a * n + h, x.augmentation()[a]);
  }
  eps.finalize();
  if (multiply(eps, zd(-1)).nonzeros() == 0) {
    HomologyData h(zd(-1), eps, IntVector(r0 * n), IntVector(1));
    rep.augmentation_exact = content.is_unit() && h.group().is_trivial();
  }

  // 0 -> Z -> X^1 -> X^2, the dual of the augmentation
  SparseMatrix eta(x.rank(1) * n, 1);
  for (std::size_t a = 0; a < x.rank(1); ++a)
    for (std::size_t h = 0; h < n; ++h) eta.add(a * n + h, 0, x.augmentation()[a]);
  eta.finalize();
  if (N >= 2) {
    if (multiply(zd(1), eta).nonzeros() == 0) {
      HomologyData h(eta, zd(1), IntVector(x.rank(1) * n), IntVector(x.rank(2) * n));
      rep.coaugmentation_exact = !content.is_zero() && h.group().is_trivial();
    }
  } else {
    rep.coaugmentation_exact = !content.is_zero();
  }
  return rep;
}

Engine parse_engine(const std::string& s) {
  if (s == "bar") return Engine::Bar;
  if (s == "periodic") return Engine::Periodic;
  if (s == "auto") return Engine::Auto;
  throw InputError("unknown resolution engine '" + s + "' (expected bar, periodic or auto)");
}

std::string engine_name(Engine e) {
  switch (e) {
    case Engine::Bar:
      return "bar";
    case Engine::Periodic:
      return "periodic";
    case Engine::Auto:
      return "auto";
  }
  return "auto";
}

CompleteResolution make_complete_resolution(const FiniteGroup& g, Engine engine, int window, std::size_t cap) {
  if (engine == Engine::Auto) engine = g.is_cyclic() ? Engine::Periodic : Engine::Bar;
  if (engine == Engine::Periodic) return CompleteResolution(periodic_resolution(g, window));
  return CompleteResolution(bar_resolution(g, window, cap));
}

}  // namespace tatecoh
