#include "gliderrep/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "gliderrep/error.hpp"

namespace glrep {

namespace {

constexpr long kMaxValidatedOrder = 1000;  // associativity check is cubic

std::vector<std::string> default_names(long n) {
  std::vector<std::string> names(n);
  names[0] = "e";
  for (long i = 1; i < n; ++i) names[i] = "g" + std::to_string(i);
  return names;
}

std::vector<long> compute_inverses(long n, const std::vector<long>& table) {
  std::vector<long> inv(n, -1);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      if (table[i * n + j] == 0 && table[j * n + i] == 0) {
        inv[i] = j;
        break;
      }
  for (long i = 0; i < n; ++i)
    if (inv[i] < 0) fail_domain("element without two-sided inverse");
  return inv;
}

// exponent name like "a^3" ("e" for 0, "a" for 1)
std::string pow_name(const std::string& base, long e) {
  if (e == 0) return "e";
  if (e == 1) return base;
  return base + "^" + std::to_string(e);
}

std::string two_gen_name(const std::string& a, long i, const std::string& b,
                         long j) {
  if (j == 0) return pow_name(a, i);
  if (i == 0) return pow_name(b, j);
  return pow_name(a, i) + "*" + pow_name(b, j);
}

}  // namespace

GroupPtr FiniteGroup::unchecked(const std::string& name,
                                std::vector<long> table,
                                std::vector<std::string> element_names) {
  long n = 0;
  while (n * n < (long)table.size()) ++n;
  std::shared_ptr<FiniteGroup> g(new FiniteGroup());
  g->n_ = n;
  g->name_ = name;
  g->table_ = std::move(table);
  g->element_names_ =
      element_names.empty() ? default_names(n) : std::move(element_names);
  g->inverse_ = compute_inverses(n, g->table_);
  return g;
}

GroupPtr FiniteGroup::from_table(const std::string& name,
                                 std::vector<long> table,
                                 std::vector<std::string> element_names) {
  long n = 0;
  while (n * n < (long)table.size()) ++n;
  if (n == 0 || n * n != (long)table.size())
    fail_usage("multiplication table is not square");
  if (n > kMaxValidatedOrder)
    fail_unsupported("group order " + std::to_string(n) +
                     " exceeds the validation bound");
  for (long v : table)
    if (v < 0 || v >= n) fail_usage("table entry out of range");
  if (!element_names.empty() && (long)element_names.size() != n)
    fail_usage("element name count does not match order");
  for (long j = 0; j < n; ++j)
    if (table[j] != j) fail_usage("id 0 is not a left identity");
  for (long i = 0; i < n; ++i)
    if (table[i * n] != i) fail_usage("id 0 is not a right identity");
  for (long i = 0; i < n; ++i) {
    std::vector<bool> seen_row(n, false), seen_col(n, false);
    for (long j = 0; j < n; ++j) {
      if (seen_row[table[i * n + j]]) fail_usage("row is not a permutation");
      seen_row[table[i * n + j]] = true;
      if (seen_col[table[j * n + i]]) fail_usage("column is not a permutation");
      seen_col[table[j * n + i]] = true;
    }
  }
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      for (long c = 0; c < n; ++c)
        if (table[table[a * n + b] * n + c] != table[a * n + table[b * n + c]])
          fail_usage("multiplication table is not associative");
  return unchecked(name, std::move(table), std::move(element_names));
}

long FiniteGroup::element_order(long a) const {
  long k = 1, x = a;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

long FiniteGroup::element_by_name(const std::string& s) const {
  for (long i = 0; i < n_; ++i)
    if (element_names_[i] == s) return i;
  fail_usage("no element named '" + s + "' in " + name_);
}

bool FiniteGroup::is_abelian() const {
  if (abelian_ < 0) {
    abelian_ = 1;
    for (long a = 0; a < n_ && abelian_; ++a)
      for (long b = a + 1; b < n_; ++b)
        if (mul(a, b) != mul(b, a)) {
          abelian_ = 0;
          break;
        }
  }
  return abelian_ == 1;
}

const std::vector<long>& FiniteGroup::center() const {
  if (center_.empty()) {
    for (long a = 0; a < n_; ++a) {
      bool central = true;
      for (long b = 0; b < n_ && central; ++b)
        if (mul(a, b) != mul(b, a)) central = false;
      if (central) center_.push_back(a);
    }
  }
  return center_;
}

const std::vector<long>& FiniteGroup::commutator_subgroup() const {
  if (commutator_.empty()) {
    std::vector<long> comms;
    for (long a = 0; a < n_; ++a)
      for (long b = 0; b < n_; ++b)
        comms.push_back(mul(mul(inv(a), inv(b)), mul(a, b)));
    commutator_ = closure(*this, comms);
  }
  return commutator_;
}

const std::vector<std::vector<long>>& FiniteGroup::conjugacy_classes() const {
  if (classes_.empty()) {
    std::vector<bool> seen(n_, false);
    for (long a = 0; a < n_; ++a) {
      if (seen[a]) continue;
      std::set<long> orbit;
      for (long g = 0; g < n_; ++g) orbit.insert(conjugate(g, a));
      std::vector<long> cls(orbit.begin(), orbit.end());
      for (long x : cls) seen[x] = true;
      classes_.push_back(std::move(cls));
    }
  }
  return classes_;
}

bool FiniteGroup::is_nilpotent() const {
  if (nilpotent_ < 0) {
    // Lower central series; nilpotent iff it reaches the trivial subgroup.
    std::vector<long> gamma(n_);
    std::iota(gamma.begin(), gamma.end(), 0);
    while (true) {
      std::vector<long> comms;
      for (long g = 0; g < n_; ++g)
        for (long x : gamma)
          comms.push_back(mul(mul(inv(g), inv(x)), mul(g, x)));
      std::vector<long> next = closure(*this, comms);
      if (next == gamma) break;
      gamma = std::move(next);
    }
    nilpotent_ = gamma.size() == 1 ? 1 : 0;
  }
  return nilpotent_ == 1;
}

// --- Constructions ---------------------------------------------------------

GroupPtr cyclic_group(long n) {
  if (n < 1) fail_domain("cyclic group order must be positive");
  std::vector<long> table(n * n);
  std::vector<std::string> names(n);
  for (long i = 0; i < n; ++i) {
    names[i] = pow_name("g", i);
    for (long j = 0; j < n; ++j) table[i * n + j] = (i + j) % n;
  }
  return FiniteGroup::unchecked("C" + std::to_string(n), std::move(table),
                                std::move(names));
}

GroupPtr metacyclic_group(long m, long k, long t, long r,
                          const std::string& name) {
  if (m < 1 || k < 1) fail_domain("metacyclic parameters out of range");
  r %= m;
  if (r < 0) r += m;
  t %= m;
  if (t < 0) t += m;
  // r^k = 1 (mod m) makes conjugation by b^k trivial; t(r-1) = 0 (mod m)
  // makes a^t = b^k consistent with it.
  long rk = 1;
  for (long i = 0; i < k; ++i) rk = (rk * r) % m;
  if (m > 1 && std::gcd(r, m) != 1)
    fail_domain("metacyclic twist must be invertible");
  if (rk != 1 % m) fail_domain("metacyclic twist order does not divide k");
  if ((t * (r - 1)) % m != 0) fail_domain("metacyclic kernel relation fails");
  long n = m * k;
  auto id = [&](long i, long j) { return i + m * j; };
  std::vector<long> table(n * n);
  std::vector<std::string> names(n);
  // precompute r^j mod m
  std::vector<long> rpow(k);
  rpow[0] = 1 % m;
  for (long j = 1; j < k; ++j) rpow[j] = (rpow[j - 1] * r) % m;
  for (long i1 = 0; i1 < m; ++i1)
    for (long j1 = 0; j1 < k; ++j1) {
      names[id(i1, j1)] = two_gen_name("a", i1, "b", j1);
      for (long i2 = 0; i2 < m; ++i2)
        for (long j2 = 0; j2 < k; ++j2) {
          long i = (i1 + i2 * rpow[j1]) % m;
          long j = j1 + j2;
          if (j >= k) {
            j -= k;
            i = (i + t) % m;
          }
          table[id(i1, j1) * n + id(i2, j2)] = id(i, j);
        }
    }
  return FiniteGroup::unchecked(name, std::move(table), std::move(names));
}

GroupPtr dihedral_group(long n) {
  if (n < 1) fail_domain("dihedral parameter must be positive");
  auto g = metacyclic_group(n, 2, 0, n - 1, "D" + std::to_string(2 * n));
  // rename a->r, b->s
  std::vector<std::string> names(2 * n);
  for (long i = 0; i < n; ++i) {
    names[i] = pow_name("r", i);
    names[n + i] = two_gen_name("r", i, "s", 1);
  }
  std::vector<long> table(4 * n * n);
  for (long x = 0; x < 2 * n; ++x)
    for (long y = 0; y < 2 * n; ++y) table[x * 2 * n + y] = g->mul(x, y);
  return FiniteGroup::unchecked(g->name(), std::move(table), std::move(names));
}

GroupPtr dicyclic_group(long n) {
  if (n < 1) fail_domain("dicyclic parameter must be positive");
  std::string name = "Dic" + std::to_string(4 * n);
  // powers of two give the generalized quaternion groups
  if ((n & (n - 1)) == 0 && n >= 2) name = "Q" + std::to_string(4 * n);
  auto g = metacyclic_group(2 * n, 2, n, 2 * n - 1, name);
  if (n != 2) return g;
  // Quaternion name set: a = i, b = j.
  std::vector<std::string> names{"1", "i", "-1", "-i", "j", "k", "-j", "-k"};
  std::vector<long> table(64);
  for (long x = 0; x < 8; ++x)
    for (long y = 0; y < 8; ++y) table[x * 8 + y] = g->mul(x, y);
  return FiniteGroup::unchecked(g->name(), std::move(table), std::move(names));
}

GroupPtr heisenberg_group(long p) {
  if (p < 2) fail_domain("heisenberg parameter must be at least 2");
  long n = p * p * p;
  auto id = [&](long x, long y, long z) { return x + p * y + p * p * z; };
  std::vector<long> table(n * n);
  std::vector<std::string> names(n);
  for (long x1 = 0; x1 < p; ++x1)
    for (long y1 = 0; y1 < p; ++y1)
      for (long z1 = 0; z1 < p; ++z1) {
        long a = id(x1, y1, z1);
        std::string nm = two_gen_name("x", x1, "y", y1);
        if (z1 > 0) nm = (nm == "e" ? "" : nm + "*") + pow_name("z", z1);
        names[a] = nm;
        for (long x2 = 0; x2 < p; ++x2)
          for (long y2 = 0; y2 < p; ++y2)
            for (long z2 = 0; z2 < p; ++z2)
              table[a * n + id(x2, y2, z2)] =
                  id((x1 + x2) % p, (y1 + y2) % p,
                     (z1 + z2 + x1 * y2) % p);
      }
  return FiniteGroup::unchecked("He" + std::to_string(p), std::move(table),
                                std::move(names));
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
  long na = a->order(), nb = b->order(), n = na * nb;
  auto id = [&](long x, long y) { return x * nb + y; };
  std::vector<long> table(n * n);
  std::vector<std::string> names(n);
  for (long x1 = 0; x1 < na; ++x1)
    for (long y1 = 0; y1 < nb; ++y1) {
      names[id(x1, y1)] =
          "(" + a->element_name(x1) + "," + b->element_name(y1) + ")";
      for (long x2 = 0; x2 < na; ++x2)
        for (long y2 = 0; y2 < nb; ++y2)
          table[id(x1, y1) * n + id(x2, y2)] =
              id(a->mul(x1, x2), b->mul(y1, y2));
    }
  auto g = FiniteGroup::unchecked(a->name() + "x" + b->name(),
                                  std::move(table), std::move(names));
  auto* mg = const_cast<FiniteGroup*>(g.get());
  mg->product_left_ = a;
  mg->product_right_ = b;
  return g;
}

namespace {

std::string cycle_notation(const std::vector<long>& perm) {
  std::ostringstream os;
  std::vector<bool> seen(perm.size(), false);
  bool any = false;
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == (long)i) continue;
    os << "(";
    long j = (long)i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      os << (first ? "" : " ") << j + 1;
      first = false;
      j = perm[j];
    }
    os << ")";
    any = true;
  }
  return any ? os.str() : "e";
}

}  // namespace

GroupPtr permutation_group(long degree,
                           const std::vector<std::vector<long>>& gens,
                           const std::string& name) {
  std::vector<long> identity(degree);
  std::iota(identity.begin(), identity.end(), 0);
  for (const auto& g : gens) {
    if ((long)g.size() != degree) fail_usage("permutation degree mismatch");
    std::vector<bool> seen(degree, false);
    for (long v : g) {
      if (v < 0 || v >= degree || seen[v]) fail_usage("not a permutation");
      seen[v] = true;
    }
  }
  auto compose = [degree](const std::vector<long>& p,
                          const std::vector<long>& q) {
    std::vector<long> out(degree);
    for (long x = 0; x < degree; ++x) out[x] = p[q[x]];
    return out;
  };
  std::vector<std::vector<long>> elems{identity};
  std::map<std::vector<long>, long> index{{identity, 0}};
  for (size_t head = 0; head < elems.size(); ++head)
    for (const auto& g : gens) {
      auto next = compose(elems[head], g);
      if (index.emplace(next, (long)elems.size()).second)
        elems.push_back(std::move(next));
    }
  long n = (long)elems.size();
  std::vector<long> table(n * n);
  std::vector<std::string> names(n);
  for (long i = 0; i < n; ++i) {
    names[i] = cycle_notation(elems[i]);
    for (long j = 0; j < n; ++j) table[i * n + j] = index.at(compose(elems[i], elems[j]));
  }
  return FiniteGroup::unchecked(name, std::move(table), std::move(names));
}

// --- Subgroups ---------------------------------------------------------------

std::vector<long> generating_set(const FiniteGroup& g) {
  std::vector<long> gens;
  std::vector<long> have{0};
  for (long x = 1; x < g.order(); ++x) {
    if (std::binary_search(have.begin(), have.end(), x)) continue;
    gens.push_back(x);
    have = closure(g, gens);
  }
  return gens;
}

std::vector<long> closure(const FiniteGroup& g, std::vector<long> seed) {
  std::vector<bool> in(g.order(), false);
  in[0] = true;
  std::vector<long> elems{0};
  for (long s : seed)
    if (!in[s]) {
      in[s] = true;
      elems.push_back(s);
    }
  for (size_t head = 0; head < elems.size(); ++head)
    for (size_t k = 0; k < elems.size(); ++k) {
      long p = g.mul(elems[head], elems[k]);
      if (!in[p]) {
        in[p] = true;
        elems.push_back(p);
      }
      p = g.mul(elems[k], elems[head]);
      if (!in[p]) {
        in[p] = true;
        elems.push_back(p);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

bool is_subgroup(const FiniteGroup& g, const std::vector<long>& elems) {
  if (elems.empty() || elems[0] != 0) return false;
  std::vector<bool> in(g.order(), false);
  for (long e : elems) {
    if (e < 0 || e >= g.order()) return false;
    in[e] = true;
  }
  for (long a : elems)
    for (long b : elems)
      if (!in[g.mul(a, b)]) return false;
  return true;
}

bool is_normal(const FiniteGroup& g, const std::vector<long>& elems) {
  std::vector<bool> in(g.order(), false);
  for (long e : elems) in[e] = true;
  for (long x = 0; x < g.order(); ++x)
    for (long h : elems)
      if (!in[g.conjugate(x, h)]) return false;
  return true;
}

std::vector<std::vector<long>> all_subgroups(const FiniteGroup& g) {
  std::set<std::vector<long>> seen;
  std::vector<std::vector<long>> queue{{0}};
  seen.insert(queue[0]);
  for (size_t head = 0; head < queue.size(); ++head) {
    std::vector<long> current = queue[head];  // copy: queue may reallocate
    std::vector<bool> in(g.order(), false);
    for (long e : current) in[e] = true;
    for (long x = 1; x < g.order(); ++x) {
      if (in[x]) continue;
      std::vector<long> ext = current;
      ext.push_back(x);
      std::vector<long> sub = closure(g, ext);
      if (seen.insert(sub).second) queue.push_back(std::move(sub));
    }
  }
  std::vector<std::vector<long>> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<std::vector<long>> normal_subgroups(const FiniteGroup& g) {
  std::vector<std::vector<long>> out;
  for (auto& s : all_subgroups(g))
    if (is_normal(g, s)) out.push_back(std::move(s));
  return out;
}

std::vector<long> left_coset_reps(const FiniteGroup& g,
                                  const std::vector<long>& sub) {
  std::vector<bool> seen(g.order(), false);
  std::vector<long> reps;
  for (long x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    reps.push_back(x);
    for (long h : sub) seen[g.mul(x, h)] = true;
  }
  return reps;
}

SubgroupGroup subgroup_group(const GroupPtr& g, const std::vector<long>& elems,
                             const std::string& name) {
  if (!is_subgroup(*g, elems)) fail_domain("element set is not a subgroup");
  long m = (long)elems.size();
  SubgroupGroup out;
  out.parent = g;
  out.to_parent = elems;
  out.from_parent.assign(g->order(), -1);
  for (long i = 0; i < m; ++i) out.from_parent[elems[i]] = i;
  std::vector<long> table(m * m);
  std::vector<std::string> names(m);
  for (long i = 0; i < m; ++i) {
    names[i] = g->element_name(elems[i]);
    for (long j = 0; j < m; ++j)
      table[i * m + j] = out.from_parent[g->mul(elems[i], elems[j])];
  }
  out.group = FiniteGroup::unchecked(name, std::move(table), std::move(names));
  return out;
}

Quotient quotient_group(const GroupPtr& g, const std::vector<long>& normal_sub,
                        const std::string& name) {
  if (!is_subgroup(*g, normal_sub) || !is_normal(*g, normal_sub))
    fail_domain("quotient requires a normal subgroup");
  long n = g->order();
  Quotient out;
  out.coset_of.assign(n, -1);
  for (long x = 0; x < n; ++x) {
    if (out.coset_of[x] >= 0) continue;
    long q = (long)out.rep_of.size();
    out.rep_of.push_back(x);
    for (long h : normal_sub) out.coset_of[g->mul(x, h)] = q;
  }
  long m = (long)out.rep_of.size();
  std::vector<long> table(m * m);
  std::vector<std::string> names(m);
  for (long i = 0; i < m; ++i) {
    names[i] = "[" + g->element_name(out.rep_of[i]) + "]";
    for (long j = 0; j < m; ++j)
      table[i * m + j] = out.coset_of[g->mul(out.rep_of[i], out.rep_of[j])];
  }
  out.group = FiniteGroup::unchecked(name, std::move(table), std::move(names));
  return out;
}

Quotient abelianization(const GroupPtr& g) {
  return quotient_group(g, g->commutator_subgroup(), g->name() + "_ab");
}

// --- Chains -------------------------------------------------------------------

NormalChain make_chain(const GroupPtr& g,
                       std::vector<std::vector<long>> levels) {
  if (levels.size() < 2) fail_domain("chain needs at least two levels");
  for (auto& lv : levels) {
    std::sort(lv.begin(), lv.end());
    lv.erase(std::unique(lv.begin(), lv.end()), lv.end());
    if (lv.empty() || lv.front() < 0 || lv.back() >= g->order())
      fail_domain("chain level contains out-of-range element ids");
  }
  if (levels.front() != std::vector<long>{0})
    fail_domain("chain must start at the trivial subgroup");
  if ((long)levels.back().size() != g->order())
    fail_domain("chain must end at the whole group");
  for (size_t k = 0; k < levels.size(); ++k) {
    if (!is_subgroup(*g, levels[k]))
      fail_domain("chain level " + std::to_string(k) + " is not a subgroup");
    if (!is_normal(*g, levels[k]))
      fail_domain("chain level " + std::to_string(k) + " is not normal");
    if (k > 0) {
      if (levels[k].size() <= levels[k - 1].size() ||
          !std::includes(levels[k].begin(), levels[k].end(),
                         levels[k - 1].begin(), levels[k - 1].end()))
        fail_domain("chain levels must strictly ascend");
    }
  }
  auto normals = normal_subgroups(*g);
  for (size_t k = 0; k + 1 < levels.size(); ++k)
    for (const auto& mid : normals)
      if (mid.size() > levels[k].size() && mid.size() < levels[k + 1].size() &&
          std::includes(levels[k + 1].begin(), levels[k + 1].end(),
                        mid.begin(), mid.end()) &&
          std::includes(mid.begin(), mid.end(), levels[k].begin(),
                        levels[k].end()))
        fail_domain("chain is not saturated: a normal subgroup of order " +
                    std::to_string(mid.size()) + " fits between levels " +
                    std::to_string(k) + " and " + std::to_string(k + 1));
  NormalChain chain;
  chain.group = g;
  chain.levels = std::move(levels);
  return chain;
}

std::vector<NormalChain> maximal_normal_chains(const GroupPtr& g) {
  auto normals = normal_subgroups(*g);
  // Saturated descending walks G = N_0 > N_1 > ... > {e} in the lattice of
  // normal subgroups; saturation = no normal subgroup strictly between.
  auto strictly_between = [&](const std::vector<long>& lo,
                              const std::vector<long>& hi) {
    for (const auto& mid : normals) {
      if (mid.size() <= lo.size() || mid.size() >= hi.size()) continue;
      if (std::includes(hi.begin(), hi.end(), mid.begin(), mid.end()) &&
          std::includes(mid.begin(), mid.end(), lo.begin(), lo.end()))
        return true;
    }
    return false;
  };
  std::vector<NormalChain> out;
  std::vector<std::vector<long>> stack;
  std::vector<long> whole(g->order());
  std::iota(whole.begin(), whole.end(), 0);
  stack.push_back(whole);
  // DFS over covers, emitting each complete chain in lattice order.
  std::function<void()> dfs = [&]() {
    const std::vector<long> top = stack.back();  // copy: stack reallocates
    if (top.size() == 1) {
      NormalChain chain;
      chain.group = g;
      chain.levels.assign(stack.rbegin(), stack.rend());
      out.push_back(std::move(chain));
      return;
    }
    for (const auto& nxt : normals) {
      if (nxt.size() >= top.size()) continue;
      if (!std::includes(top.begin(), top.end(), nxt.begin(), nxt.end()))
        continue;
      if (strictly_between(nxt, top)) continue;
      stack.push_back(nxt);
      dfs();
      stack.pop_back();
    }
  };
  dfs();
  return out;
}

std::vector<NormalChain> maximal_normal_chains_through(
    const GroupPtr& g, const std::vector<long>& through) {
  std::vector<NormalChain> out;
  for (auto& chain : maximal_normal_chains(g))
    for (const auto& level : chain.levels)
      if (level == through) {
        out.push_back(std::move(chain));
        break;
      }
  return out;
}

}  // namespace glrep
