#include "gliderrep/rep.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gliderrep/error.hpp"

namespace glrep {

CharacterVector::CharacterVector(GroupPtr group,
                                 std::vector<CycNumber> class_values)
    : group_(std::move(group)), values_(std::move(class_values)) {
  const auto& classes = group_->conjugacy_classes();
  if (values_.size() != classes.size())
    fail_domain("class value count does not match class count");
  class_of_.assign(group_->order(), -1);
  for (size_t c = 0; c < classes.size(); ++c)
    for (long x : classes[c]) class_of_[x] = (long)c;
}

const CycNumber& CharacterVector::at_element(long g) const {
  return values_[class_of_[g]];
}

long CharacterVector::degree() const {
  return rat_to_long(at_element(0).rational_part());
}

int CharacterVector::cmp(const CharacterVector& o) const {
  if (group_.get() != o.group_.get())
    fail_domain("character comparison across distinct groups");
  for (size_t c = 0; c < values_.size(); ++c) {
    int r = values_[c].cmp(o.values_[c]);
    if (r != 0) return r;
  }
  return 0;
}

Rat inner_product(const CharacterVector& a, const CharacterVector& b) {
  if (a.group().get() != b.group().get())
    fail_domain("inner product across distinct groups");
  const auto& classes = a.group()->conjugacy_classes();
  CycNumber acc;
  for (size_t c = 0; c < classes.size(); ++c)
    acc += CycNumber((long)classes[c].size()) * a.at_class((long)c) *
           b.at_class((long)c).conj();
  acc /= CycNumber(a.group()->order());
  if (!acc.is_rational())
    fail_domain("inner product of non-characters is irrational");
  return acc.rational_part();
}

Representation Representation::create(GroupPtr group,
                                      std::vector<CycMatrix> matrices,
                                      std::string label) {
  long n = group->order();
  if ((long)matrices.size() != n)
    fail_domain("representation needs one matrix per element");
  long d = matrices[0].rows();
  if (d < 1) fail_domain("representation degree must be positive");
  for (const auto& m : matrices)
    if (m.rows() != d || m.cols() != d)
      fail_domain("representation matrices must share a square shape");
  if (matrices[0] != CycMatrix::identity(d))
    fail_domain("identity element must map to the identity matrix");
  // Multiplicativity on gens x G extends to all pairs by induction on word
  // length.
  for (long s : generating_set(*group))
    for (long h = 0; h < n; ++h)
      if (matrices[group->mul(s, h)] != matrices[s] * matrices[h])
        fail_domain("matrices do not define a homomorphism");
  Representation out;
  out.group_ = std::move(group);
  out.matrices_ = std::move(matrices);
  out.label_ = std::move(label);
  return out;
}

Representation Representation::trivial(GroupPtr group) {
  std::vector<CycMatrix> mats(group->order(), CycMatrix::identity(1));
  return create(std::move(group), std::move(mats), "triv");
}

const CharacterVector& Representation::character() const {
  if (!character_) {
    const auto& classes = group_->conjugacy_classes();
    std::vector<CycNumber> vals;
    vals.reserve(classes.size());
    for (const auto& cls : classes) vals.push_back(matrices_[cls[0]].trace());
    character_ = std::make_shared<CharacterVector>(group_, std::move(vals));
  }
  return *character_;
}

bool Representation::is_irreducible() const {
  return inner_product(character(), character()) == 1;
}

namespace {

void peel_abelian(const GroupPtr& g, const std::vector<long>& elems,
                  std::vector<long>& gens, std::vector<long>& orders) {
  if (elems.size() == 1) return;
  auto sg = subgroup_group(g, elems, "peel");
  long best_ord = 1, best = 0;
  for (long x = 0; x < sg.group->order(); ++x) {
    long ord = sg.group->element_order(x);
    if (ord > best_ord) {
      best_ord = ord;
      best = x;
    }
  }
  gens.push_back(sg.to_parent[best]);
  orders.push_back(best_ord);
  std::vector<long> cyc = closure(*sg.group, {best});
  if ((long)cyc.size() == sg.group->order()) return;  // cyclic: done
  for (const auto& b : all_subgroups(*sg.group)) {
    if ((long)b.size() * best_ord != sg.group->order()) continue;
    std::vector<long> meet;
    std::set_intersection(b.begin(), b.end(), cyc.begin(), cyc.end(),
                          std::back_inserter(meet));
    if (meet.size() != 1) continue;
    std::vector<long> b_parent;
    for (long x : b) b_parent.push_back(sg.to_parent[x]);
    std::sort(b_parent.begin(), b_parent.end());
    peel_abelian(g, b_parent, gens, orders);
    return;
  }
  fail_domain("abelian decomposition found no complement");
}

}  // namespace

AbelianBasis abelian_basis(const GroupPtr& abelian) {
  if (!abelian->is_abelian()) fail_domain("abelian basis of non-abelian group");
  AbelianBasis out;
  std::vector<long> whole(abelian->order());
  std::iota(whole.begin(), whole.end(), 0);
  peel_abelian(abelian, whole, out.gens, out.orders);
  out.dlog.assign(abelian->order(), {});
  long total = 1;
  for (long o : out.orders) total *= o;
  if (total != abelian->order()) fail_domain("abelian basis order mismatch");
  std::vector<char> hit(abelian->order(), 0);
  for (long idx = 0; idx < total; ++idx) {
    long rest = idx, x = 0;
    std::vector<long> tuple(out.gens.size());
    for (size_t t = 0; t < out.gens.size(); ++t) {
      tuple[t] = rest % out.orders[t];
      rest /= out.orders[t];
      for (long k = 0; k < tuple[t]; ++k) x = abelian->mul(x, out.gens[t]);
    }
    if (hit[x]) fail_domain("abelian basis is not a direct decomposition");
    hit[x] = 1;
    out.dlog[x] = std::move(tuple);
  }
  return out;
}

std::vector<Representation> linear_characters(const GroupPtr& g) {
  Quotient ab = abelianization(g);
  AbelianBasis basis = abelian_basis(ab.group);
  long count = ab.group->order();
  std::vector<Representation> out;
  out.reserve(count);
  for (long idx = 0; idx < count; ++idx) {
    long rest = idx;
    std::vector<long> k(basis.gens.size());
    for (size_t t = 0; t < basis.gens.size(); ++t) {
      k[t] = rest % basis.orders[t];
      rest /= basis.orders[t];
    }
    // value on each abelianization element, then pulled back along cosets
    std::vector<CycNumber> val(count, CycNumber(1));
    for (long x = 0; x < count; ++x)
      for (size_t t = 0; t < basis.gens.size(); ++t)
        val[x] *= CycNumber::zeta(basis.orders[t],
                                  (k[t] * basis.dlog[x][t]) % basis.orders[t]);
    std::vector<CycMatrix> mats(g->order(), CycMatrix(1, 1));
    for (long x = 0; x < g->order(); ++x)
      mats[x].at(0, 0) = val[ab.coset_of[x]];
    out.push_back(Representation::create(
        g, std::move(mats), "lin" + std::to_string(idx + 1)));
  }
  return out;
}

Representation induce(const Representation& rep, const SubgroupGroup& h,
                      const GroupPtr& g) {
  if (h.parent.get() != g.get() || rep.group().get() != h.group.get())
    fail_domain("induction endpoints do not match the subgroup embedding");
  std::vector<long> reps = left_coset_reps(*g, h.to_parent);
  long m = (long)reps.size(), d = rep.degree();
  std::vector<CycMatrix> mats;
  mats.reserve(g->order());
  for (long x = 0; x < g->order(); ++x) {
    CycMatrix big(m * d, m * d);
    for (long i = 0; i < m; ++i)
      for (long j = 0; j < m; ++j) {
        long y = g->mul(g->mul(g->inv(reps[i]), x), reps[j]);
        long local = h.from_parent[y];
        if (local < 0) continue;
        const CycMatrix& block = rep.matrix(local);
        for (long r = 0; r < d; ++r)
          for (long c = 0; c < d; ++c)
            big.at(i * d + r, j * d + c) = block.at(r, c);
      }
    mats.push_back(std::move(big));
  }
  return Representation::create(g, std::move(mats),
                                "Ind(" + rep.label() + ")");
}

CharacterVector induced_character(const CharacterVector& chi,
                                  const SubgroupGroup& h, const GroupPtr& g) {
  if (h.parent.get() != g.get() || chi.group().get() != h.group.get())
    fail_domain("induction endpoints do not match the subgroup embedding");
  std::vector<long> reps = left_coset_reps(*g, h.to_parent);
  const auto& classes = g->conjugacy_classes();
  std::vector<CycNumber> vals;
  vals.reserve(classes.size());
  for (const auto& cls : classes) {
    CycNumber acc;
    for (long t : reps) {
      long y = g->mul(g->mul(g->inv(t), cls[0]), t);
      long local = h.from_parent[y];
      if (local >= 0) acc += chi.at_element(local);
    }
    vals.push_back(std::move(acc));
  }
  return CharacterVector(g, std::move(vals));
}

std::vector<long> CharacterTable::degrees() const {
  std::vector<long> out;
  out.reserve(irreps.size());
  for (const auto& r : irreps) out.push_back(r.degree());
  return out;
}

long CharacterTable::index_of(const CharacterVector& chi) const {
  for (size_t i = 0; i < irreps.size(); ++i)
    if (irreps[i].character() == chi) return (long)i;
  return -1;
}

namespace {

CharacterTable build_character_table(const GroupPtr& g);

std::map<const FiniteGroup*, std::unique_ptr<CharacterTable>>& table_cache() {
  static std::map<const FiniteGroup*, std::unique_ptr<CharacterTable>> cache;
  return cache;
}

void finalize_table(CharacterTable& table, long linear_count) {
  // Linear characters stay in odometer order; the rest sort by degree with
  // value-lexicographic ties.
  std::sort(table.irreps.begin() + linear_count, table.irreps.end(),
            [](const Representation& a, const Representation& b) {
              if (a.degree() != b.degree()) return a.degree() < b.degree();
              return a.character().cmp(b.character()) < 0;
            });
  for (size_t i = 0; i < table.irreps.size(); ++i)
    table.irreps[i].set_label("chi" + std::to_string(i + 1));
}

CharacterTable tensor_table(const GroupPtr& g) {
  const CharacterTable& ta = character_table(g->product_left());
  const CharacterTable& tb = character_table(g->product_right());
  long nb = g->product_right()->order();
  CharacterTable table;
  table.group = g;
  for (const auto& ra : ta.irreps)
    for (const auto& rb : tb.irreps) {
      std::vector<CycMatrix> mats;
      mats.reserve(g->order());
      for (long x = 0; x < g->order(); ++x)
        mats.push_back(tensor_product(ra.matrix(x / nb), rb.matrix(x % nb)));
      table.irreps.push_back(Representation::create(
          g, std::move(mats), ra.label() + "*" + rb.label()));
    }
  // Reorder the linear block to the odometer order of the product group.
  auto lins = linear_characters(g);
  std::vector<Representation> ordered;
  for (const auto& lin : lins) {
    long at = table.index_of(lin.character());
    if (at < 0) fail_domain("product linear character missing");
    ordered.push_back(std::move(table.irreps[at]));
    table.irreps.erase(table.irreps.begin() + at);
  }
  for (auto& r : table.irreps) ordered.push_back(std::move(r));
  table.irreps = std::move(ordered);
  finalize_table(table, (long)lins.size());
  return table;
}

CharacterTable build_character_table(const GroupPtr& g) {
  if (g->product_left()) return tensor_table(g);
  CharacterTable table;
  table.group = g;
  long target = g->order(), sum = 0;
  for (auto& lin : linear_characters(g)) {
    table.irreps.push_back(std::move(lin));
    ++sum;
  }
  long linear_count = (long)table.irreps.size();
  if (sum < target) {
    auto subs = all_subgroups(*g);
    // Largest subgroups first; the whole group only reproduces the linear
    // characters already present.
    for (auto it = subs.rbegin(); it != subs.rend() && sum < target; ++it) {
      if ((long)it->size() == g->order()) continue;
      auto h = subgroup_group(g, *it, "H");
      auto lins = linear_characters(h.group);
      for (const auto& lin : lins) {
        if (sum >= target) break;
        CharacterVector chi = induced_character(lin.character(), h, g);
        if (inner_product(chi, chi) != 1) continue;
        bool known = false;
        for (const auto& r : table.irreps)
          if (r.character() == chi) {
            known = true;
            break;
          }
        if (known) continue;
        Representation rep = induce(lin, h, g);
        sum += rep.degree() * rep.degree();
        table.irreps.push_back(std::move(rep));
      }
    }
  }
  if (sum != target)
    fail_unsupported("character table incomplete for " + g->name() +
                     ": degree-square sum " + std::to_string(sum) + " of " +
                     std::to_string(target) +
                     " (monomial search exhausted; group unsupported)");
  finalize_table(table, linear_count);
  return table;
}

}  // namespace

const CharacterTable& character_table(const GroupPtr& g) {
  auto& cache = table_cache();
  auto it = cache.find(g.get());
  if (it == cache.end()) {
    auto table = std::make_unique<CharacterTable>(build_character_table(g));
    it = cache.emplace(g.get(), std::move(table)).first;
  }
  return *it->second;
}

Representation restrict_to(const Representation& rep, const SubgroupGroup& h) {
  if (rep.group().get() != h.parent.get())
    fail_domain("subgroup does not live in the representation's group");
  std::vector<CycMatrix> mats;
  mats.reserve(h.group->order());
  for (long local = 0; local < h.group->order(); ++local)
    mats.push_back(rep.matrix(h.to_parent[local]));
  return Representation::create(h.group, std::move(mats),
                                "Res(" + rep.label() + ")");
}

std::vector<long> restriction_multiplicities(const CharacterVector& chi,
                                             const SubgroupGroup& h) {
  if (chi.group().get() != h.parent.get())
    fail_domain("character is not over the subgroup's parent");
  const auto& classes = h.group->conjugacy_classes();
  std::vector<CycNumber> vals;
  vals.reserve(classes.size());
  for (const auto& cls : classes)
    vals.push_back(chi.at_element(h.to_parent[cls[0]]));
  CharacterVector res(h.group, std::move(vals));
  const CharacterTable& table = character_table(h.group);
  std::vector<long> mult;
  mult.reserve(table.irreps.size());
  for (const auto& irr : table.irreps)
    mult.push_back(rat_to_long(inner_product(res, irr.character())));
  return mult;
}

std::vector<long> restriction_multiplicities(const Representation& rep,
                                             const SubgroupGroup& h) {
  return restriction_multiplicities(rep.character(), h);
}

CharacterVector conjugate_character(const CharacterVector& chi,
                                    const SubgroupGroup& h, long g) {
  if (chi.group().get() != h.group.get())
    fail_domain("character is not over the given subgroup");
  if (!is_normal(*h.parent, h.to_parent))
    fail_domain("conjugate character requires a normal subgroup");
  const auto& parent = *h.parent;
  const auto& classes = h.group->conjugacy_classes();
  std::vector<CycNumber> vals;
  vals.reserve(classes.size());
  for (const auto& cls : classes) {
    long px = h.to_parent[cls[0]];
    long py = parent.mul(parent.mul(parent.inv(g), px), g);
    vals.push_back(chi.at_element(h.from_parent[py]));
  }
  return CharacterVector(h.group, std::move(vals));
}

std::vector<long> inertia_group(const CharacterVector& chi,
                                const SubgroupGroup& h) {
  std::vector<long> out;
  for (long g = 0; g < h.parent->order(); ++g)
    if (conjugate_character(chi, h, g) == chi) out.push_back(g);
  return out;
}

}  // namespace glrep
