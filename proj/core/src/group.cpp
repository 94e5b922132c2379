#include "tatecoh/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "tatecoh/errors.hpp"

namespace tatecoh {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table) : table_(std::move(table)) {
  const int n = static_cast<int>(table_.size());
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = table_[e][x] == x && table_[x][e] == x;
    if (ok) identity_ = e;
  }
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table_[a][b] == identity_ && table_[b][a] == identity_) {
        inverse_[a] = b;
        break;
      }
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table, std::string name) {
  const std::size_t n = table.size();
  if (n == 0) throw InputError("group table is empty");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw InputError("group table is not square (row " + std::to_string(i) + ")");
    for (int v : table[i])
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw InputError("group table entry out of range in row " + std::to_string(i));
  }
  FiniteGroup g(std::move(table));
  if (g.identity_ < 0) throw InputError("group table has no identity element");
  for (std::size_t a = 0; a < n; ++a)
    if (g.inverse_[a] < 0) throw InputError("element " + std::to_string(a) + " has no inverse");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (g.table_[g.table_[a][b]][c] != g.table_[a][g.table_[b][c]]) {
          std::ostringstream os;
          os << "associativity fails at (" << a << "," << b << "," << c << ")";
          throw InputError(os.str());
        }
  g.name_ = std::move(name);
  return g;
}

int FiniteGroup::pow(int a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  int r = identity_;
  for (long long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

std::size_t FiniteGroup::element_order(int a) const {
  std::size_t k = 1;
  for (int x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

int FiniteGroup::cyclic_generator() const {
  for (std::size_t a = 0; a < order(); ++a)
    if (element_order(static_cast<int>(a)) == order()) return static_cast<int>(a);
  return -1;
}

FiniteGroup make_cyclic(std::size_t n) {
  if (n == 0) throw InputError("cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = static_cast<int>((i + j) % n);
  return FiniteGroup::from_table(std::move(t), "Z/" + std::to_string(n));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t m = g.order(), n = h.order();
  std::vector<std::vector<int>> t(m * n, std::vector<int>(m * n));
  for (std::size_t a = 0; a < m * n; ++a)
    for (std::size_t b = 0; b < m * n; ++b) {
      const int x = g.mul(static_cast<int>(a / n), static_cast<int>(b / n));
      const int y = h.mul(static_cast<int>(a % n), static_cast<int>(b % n));
      t[a][b] = static_cast<int>(x * n + y);
    }
  std::string name;
  if (!g.name().empty() && !h.name().empty()) name = g.name() + " x " + h.name();
  return FiniteGroup::from_table(std::move(t), name);
}

FiniteGroup make_symmetric(std::size_t n) {
  if (n == 0 || n > 5) throw InputError("symmetric group supported for 1 <= n <= 5");
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> perms;
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  // (a*b)(x) = a(b(x))
  std::vector<std::vector<int>> t(perms.size(), std::vector<int>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b) {
      std::vector<int> c(n);
      for (std::size_t x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
      t[a][b] = index.at(c);
    }
  return FiniteGroup::from_table(std::move(t), "S_" + std::to_string(n));
}

bool Subgroup::contains(int g) const { return std::binary_search(elements.begin(), elements.end(), g); }

int Subgroup::local_index(int g) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), g);
  if (it == elements.end() || *it != g) return -1;
  return static_cast<int>(it - elements.begin());
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (std::size_t x = 0; x < g.order(); ++x)
    for (int e : h.elements)
      if (!h.contains(g.conj(static_cast<int>(x), e))) return false;
  return true;
}

namespace {

std::vector<char> closure(const FiniteGroup& g, std::vector<char> mask) {
  std::vector<int> members;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) members.push_back(static_cast<int>(i));
  if (!mask[g.identity()]) {
    mask[g.identity()] = 1;
    members.push_back(g.identity());
  }
  const std::vector<int> gens = members;
  for (std::size_t k = 0; k < members.size(); ++k)
    for (int s : gens) {
      const int p = g.mul(members[k], s);
      if (!mask[p]) {
        mask[p] = 1;
        members.push_back(p);
      }
    }
  return mask;
}

Subgroup from_mask(const FiniteGroup& g, const std::vector<char>& mask) {
  Subgroup h;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) h.elements.push_back(static_cast<int>(i));
  h.is_normal = is_normal(g, h);
  return h;
}

}  // namespace

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<char> mask(g.order(), 0);
  for (int x : gens) mask.at(x) = 1;
  return from_mask(g, closure(g, std::move(mask)));
}

Subgroup whole_group(const FiniteGroup& g) {
  Subgroup h;
  h.elements.resize(g.order());
  std::iota(h.elements.begin(), h.elements.end(), 0);
  h.is_normal = true;
  return h;
}

Subgroup trivial_subgroup(const FiniteGroup& g) {
  Subgroup h;
  h.elements = {g.identity()};
  h.is_normal = true;
  return h;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, std::size_t max_order) {
  if (g.order() > max_order)
    throw ComputationError("subgroup enumeration refused: group order " + std::to_string(g.order()) +
                           " exceeds the cap of " + std::to_string(max_order));
  std::set<std::vector<char>> seen;
  std::vector<std::vector<char>> queue;
  std::vector<char> triv(g.order(), 0);
  triv[g.identity()] = 1;
  seen.insert(triv);
  queue.push_back(triv);
  // every subgroup arises by adjoining one element at a time to a smaller one
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (std::size_t x = 0; x < g.order(); ++x) {
      if (queue[k][x]) continue;
      std::vector<char> m = queue[k];
      m[x] = 1;
      m = closure(g, std::move(m));
      if (seen.insert(m).second) queue.push_back(std::move(m));
    }
  }
  std::vector<Subgroup> out;
  for (const auto& m : queue) out.push_back(from_mask(g, m));
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return out;
}

FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h) {
  const std::size_t n = h.order();
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const int li = h.local_index(g.mul(h.elements[i], h.elements[j]));
      if (li < 0) throw InputError("subgroup is not closed under multiplication");
      t[i][j] = li;
    }
  return FiniteGroup::from_table(std::move(t));
}

namespace {

std::vector<int> coset_reps(const FiniteGroup& g, const Subgroup& h, bool left) {
  std::vector<char> covered(g.order(), 0);
  std::vector<int> reps;
  auto take = [&](int x) {
    reps.push_back(x);
    for (int e : h.elements) covered[left ? g.mul(x, e) : g.mul(e, x)] = 1;
  };
  take(g.identity());
  for (std::size_t x = 0; x < g.order(); ++x)
    if (!covered[x]) take(static_cast<int>(x));
  return reps;
}

}  // namespace

std::vector<int> coset_representatives(const FiniteGroup& g, const Subgroup& h) { return coset_reps(g, h, true); }

std::vector<int> right_coset_representatives(const FiniteGroup& g, const Subgroup& h) {
  return coset_reps(g, h, false);
}

Quotient quotient(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw InputError("quotient by a subgroup that is not normal");
  std::vector<int> reps = coset_representatives(g, n);
  Quotient q;
  q.projection.assign(g.order(), -1);
  for (std::size_t c = 0; c < reps.size(); ++c)
    for (int e : n.elements) q.projection[g.mul(reps[c], e)] = static_cast<int>(c);
  std::vector<std::vector<int>> t(reps.size(), std::vector<int>(reps.size()));
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = 0; b < reps.size(); ++b) t[a][b] = q.projection[g.mul(reps[a], reps[b])];
  q.group = FiniteGroup::from_table(std::move(t));
  return q;
}

Abelianization abelianization(const FiniteGroup& g) {
  // generators x_g, relations x_a + x_b - x_{ab}
  const std::size_t n = g.order();
  IntMatrix rel(n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t c = a * n + b;
      rel(a, c) += Integer(1);
      rel(b, c) += Integer(1);
      rel(static_cast<std::size_t>(g.mul(static_cast<int>(a), static_cast<int>(b))), c) -= Integer(1);
    }
  Abelianization ab;
  ab.group = cokernel_structure(rel);
  for (std::size_t x = 0; x < n; ++x) {
    IntVector e(n);
    e[x] = 1;
    ab.projection.push_back(ab.group.coordinates_of(e));
  }
  return ab;
}

int Abelianization::lift(std::span<const Integer> coords) const {
  IntVector target = group.reduce(coords);
  for (std::size_t x = 0; x < projection.size(); ++x)
    if (projection[x] == target) return static_cast<int>(x);
  throw std::invalid_argument("Abelianization::lift: coordinates outside the image");
}

Subgroup commutator_subgroup(const FiniteGroup& g) {
  std::vector<int> comms;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) {
      const int x = static_cast<int>(a), y = static_cast<int>(b);
      comms.push_back(g.mul(g.mul(x, y), g.mul(g.inv(x), g.inv(y))));
    }
  return generated_subgroup(g, comms);
}

}  // namespace tatecoh
