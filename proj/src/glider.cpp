#include "gliderrep/glider.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "gliderrep/error.hpp"

namespace glrep {

ChainContext make_context(const NormalChain& chain) {
  ChainContext ctx;
  ctx.chain = chain;
  long d = (long)chain.levels.size() - 1;
  for (long i = 0; i < d; ++i)
    ctx.levels.push_back(
        subgroup_group(chain.group, chain.levels[i],
                       chain.group->name() + "_G" + std::to_string(i)));
  SubgroupGroup top;
  top.parent = chain.group;
  top.group = chain.group;
  top.to_parent.resize(chain.group->order());
  std::iota(top.to_parent.begin(), top.to_parent.end(), 0);
  top.from_parent = top.to_parent;
  ctx.levels.push_back(std::move(top));
  return ctx;
}

// --- GeneralizedCharacter ----------------------------------------------------

GeneralizedCharacter::GeneralizedCharacter(
    GroupPtr group, long length, long ambient_dim, std::vector<long> layers,
    std::vector<std::vector<CycNumber>> traces)
    : group_(std::move(group)),
      d_(length),
      ambient_dim_(ambient_dim),
      layers_(std::move(layers)),
      traces_(std::move(traces)) {}

const CycNumber& GeneralizedCharacter::trace_on_level(long g, long j) const {
  if (j < 0 || j > d_ - layers_[g])
    fail_domain("trace undefined: element lives above that level");
  return traces_[g][j];
}

CycMatrix GeneralizedCharacter::matrix(long g) const {
  CycMatrix m(d_ + 1, d_ + 1);
  long top_row = d_ - layers_[g];
  for (long r = 0; r <= top_row; ++r)
    for (long c = 0; c <= r; ++c)
      m.at(r, c) = (r == d_ && c == d_) ? CycNumber(ambient_dim_)
                                        : traces_[g][std::min(r, d_ - c)];
  return m;
}

bool GeneralizedCharacter::operator==(const GeneralizedCharacter& o) const {
  return group_.get() == o.group_.get() && d_ == o.d_ &&
         ambient_dim_ == o.ambient_dim_ && layers_ == o.layers_ &&
         traces_ == o.traces_;
}

bool GeneralizedCharacter::anti_diagonal_symmetric() const {
  CycMatrix m = matrix(0);
  if (m.at(d_, 0) != CycNumber(1)) return false;
  for (long r = 0; r <= d_; ++r)
    for (long c = 0; c <= d_; ++c)
      if (m.at(r, c) != m.at(d_ - c, d_ - r)) return false;
  return true;
}

// --- Glider ------------------------------------------------------------------

Glider Glider::build(NormalChain chain,
                     std::shared_ptr<const LabeledModule> ambient,
                     CycVector generator) {
  if (!ambient) fail_domain("glider needs an ambient module");
  if (ambient->group().get() != chain.group.get())
    fail_domain("ambient module is not over the chain's top group");
  if ((long)generator.size() != ambient->dimension())
    fail_domain("generator length does not match the ambient dimension");
  long d = (long)chain.levels.size() - 1;
  if (d < 1) fail_domain("chain has no nontrivial levels");

  Glider g;
  g.chain_ = std::move(chain);
  g.ambient_ = std::move(ambient);
  g.generator_ = std::move(generator);
  g.levels_.resize(d + 1);
  g.levels_[0] = Subspace::full(g.ambient_->dimension());
  for (long j = 1; j <= d; ++j)
    g.levels_[j] = orbit_span(*g.ambient_, g.chain_.levels[d - j], g.generator_);
  g.generated_ = cyclic_module(*g.ambient_, g.generator_);
  for (long j = 2; j <= d; ++j)
    if (!g.levels_[j - 1].contains(g.levels_[j]))
      fail_domain("internal: orbit spans do not descend");
  if (!g.generated_.contains(g.levels_[1]))
    fail_domain("internal: generated submodule misses a level");

  bool zero = true;
  for (const auto& c : g.generator_) zero = zero && c.is_zero();
  g.essential_ = zero ? 0 : d;

  long n = g.chain_.group->order();
  std::vector<long> layers(n);
  std::vector<std::vector<CycNumber>> traces(n);
  for (long x = 0; x < n; ++x) {
    long lay = 0;
    while (!std::binary_search(g.chain_.levels[lay].begin(),
                               g.chain_.levels[lay].end(), x))
      ++lay;
    layers[x] = lay;
    const CycMatrix& act = g.ambient_->action(x);
    for (long m = 0; m <= d - lay; ++m)
      traces[x].push_back((m == 0 ? g.generated_ : g.levels_[m]).trace_of(act));
  }
  g.character_ = GeneralizedCharacter(g.chain_.group, d,
                                      g.ambient_->dimension(),
                                      std::move(layers), std::move(traces));
  return g;
}

const Subspace& Glider::level(long j) const {
  if (j < 0 || j >= (long)levels_.size()) fail_domain("level out of range");
  return levels_[j];
}

std::vector<long> Glider::dimension_vector() const {
  std::vector<long> out;
  for (long j = (long)levels_.size() - 1; j >= 0; --j)
    out.push_back(levels_[j].dim());
  return out;
}

TailCheck Glider::direct_irreducible() const {
  if (essential_ == 0) return {false, "zero generator"};
  TailCheck tail = is_irreducible_tail(*ambient_, generator_);
  if (!tail.ok) return tail;
  if (generated_ != levels_[0])
    return {false, "generated submodule spans " +
                       std::to_string(generated_.dim()) + " of " +
                       std::to_string(ambient_->dimension()) + " dimensions"};
  long d = length();
  for (long i = 1; i < d; ++i) {
    Subspace lhs = subspace_product(*ambient_, chain_.levels[i], levels_[i]);
    Subspace rhs =
        subspace_product(*ambient_, chain_.levels[d - i], levels_[d - i]);
    if (lhs != rhs)
      return {false, "ladder identity fails at level " + std::to_string(i)};
  }
  return {true, ""};
}

Subspace subspace_product(const LabeledModule& m,
                          const std::vector<long>& elems, const Subspace& w) {
  CycMatrix rows((long)elems.size() * w.dim(), m.dimension());
  long at = 0;
  for (long e : elems)
    for (long k = 0; k < w.dim(); ++k)
      rows.set_row(at++, m.action(e).apply(w.basis().row(k)));
  return Subspace::span_rows(rows);
}

Subspace largest_submodule_in_tail(const Glider& g) {
  return largest_invariant_subspace(g.ambient(), g.level(g.length()));
}

// --- Enumeration ---------------------------------------------------------

std::vector<Glider> enumerate_gliders(
    const NormalChain& chain,
    const std::optional<std::vector<long>>& dim_filter) {
  ChainContext ctx = make_context(chain);
  long d = (long)chain.levels.size() - 1;
  const CharacterTable& table = character_table(chain.group);
  std::vector<Glider> out;
  std::vector<GeneralizedCharacter> seen;
  for (const auto& irr : table.irreps) {
    auto mod = std::make_shared<const LabeledModule>(
        chain.group,
        std::vector<std::pair<Representation, long>>{{irr, 1}});
    // joint isotypic pieces across the proper levels
    std::vector<Subspace> pieces{Subspace::full(irr.degree())};
    for (long i = 1; i < d; ++i) {
      std::vector<Subspace> parts = isotypic_components(*mod, ctx.levels[i]);
      std::vector<Subspace> next;
      for (const auto& p : pieces)
        for (const auto& q : parts) {
          Subspace meet = p.intersect(q);
          if (meet.dim() > 0) next.push_back(std::move(meet));
        }
      pieces = std::move(next);
    }
    long k = (long)pieces.size();
    for (long mask = 1; mask < (1L << k); ++mask) {
      CycVector a(mod->dimension());
      for (long t = 0; t < k; ++t) {
        if (!(mask & (1L << t))) continue;
        CycVector lead = pieces[t].basis().row(0);
        for (size_t i = 0; i < a.size(); ++i) a[i] += lead[i];
      }
      Glider g = Glider::build(chain, mod, std::move(a));
      bool dup = false;
      for (const auto& c : seen) dup = dup || c == g.character();
      if (dup) continue;
      seen.push_back(g.character());
      if (!dim_filter || g.dimension_vector() == *dim_filter)
        out.push_back(std::move(g));
    }
  }
  return out;
}

// --- Chain comparison ------------------------------------------------------

namespace {

// Sorted distinct trace values over elements of the proper middle layers.
std::vector<CycNumber> middle_values(const Glider& g) {
  std::vector<CycNumber> vals;
  long d = g.length();
  const GeneralizedCharacter& chi = g.character();
  for (long x = 0; x < g.chain().group->order(); ++x) {
    long lay = chi.layer(x);
    if (lay < 1 || lay > d - 1) continue;
    for (long m = 0; m <= d - lay; ++m)
      vals.push_back(chi.trace_on_level(x, m));
  }
  std::sort(vals.begin(), vals.end(),
            [](const CycNumber& a, const CycNumber& b) { return a.cmp(b) < 0; });
  vals.erase(std::unique(vals.begin(), vals.end(),
                         [](const CycNumber& a, const CycNumber& b) {
                           return a.cmp(b) == 0;
                         }),
             vals.end());
  return vals;
}

std::vector<std::vector<std::string>> value_signature(
    const std::vector<Glider>& gliders,
    std::map<std::string, CycNumber>* pool) {
  std::vector<std::vector<std::string>> sig;
  for (const auto& g : gliders) {
    std::vector<std::string> set;
    for (const auto& v : middle_values(g)) {
      std::string s = v.str();
      set.push_back(s);
      pool->emplace(std::move(s), v);
    }
    sig.push_back(std::move(set));
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

}  // namespace

DistinguishReport distinguish_chains(const NormalChain& a,
                                     const NormalChain& b) {
  if (a.levels.size() != b.levels.size())
    fail_domain("chains have different lengths");
  std::map<std::string, CycNumber> pool;
  auto sig_a = value_signature(enumerate_gliders(a), &pool);
  auto sig_b = value_signature(enumerate_gliders(b), &pool);
  DistinguishReport report;
  if (sig_a == sig_b) {
    report.detail =
        "indistinguishable: identical multisets of middle-layer trace value "
        "sets";
    return report;
  }
  report.distinguishable = true;
  std::set<std::string> union_a, union_b;
  for (const auto& s : sig_a) union_a.insert(s.begin(), s.end());
  for (const auto& s : sig_b) union_b.insert(s.begin(), s.end());
  // witness: a value on one side only, the highest root-of-unity order first
  long best_order = -1;
  bool best_in_a = false;
  for (const auto& [s, v] : pool) {
    bool in_a = union_a.count(s) > 0, in_b = union_b.count(s) > 0;
    if (in_a == in_b) continue;
    long ord = v.root_of_unity_order();
    if (ord > best_order) {
      best_order = ord;
      report.witness = s;
      best_in_a = in_a;
    }
  }
  if (!report.witness.empty()) {
    report.witness_order = best_order;
    report.detail = "distinguished: middle-layer traces include " +
                    report.witness + " only for the " +
                    (best_in_a ? "first" : "second") + " chain (" +
                    a.group->name() + " vs " + b.group->name() + ")";
    if (best_order > 0)
      report.detail +=
          "; the value is a root of unity of order " + std::to_string(best_order);
  } else {
    report.detail =
        "distinguished: middle-layer value sets recur with different "
        "multiplicities (" +
        a.group->name() + " vs " + b.group->name() + ")";
  }
  return report;
}

// --- Restriction -------------------------------------------------------------

Glider restrict_glider(const Glider& g, const NormalChain& sub_chain,
                       const SubgroupGroup& embedding) {
  long d = g.length();
  if ((long)sub_chain.levels.size() - 1 != d)
    fail_domain("subchain length differs from the glider's chain");
  if (embedding.group.get() != sub_chain.group.get())
    fail_domain("embedding does not carry the subchain's group");
  if (embedding.parent.get() != g.chain().group.get())
    fail_domain("embedding does not land in the glider's group");
  for (long i = 0; i <= d; ++i)
    for (long x : sub_chain.levels[i])
      if (!std::binary_search(g.chain().levels[i].begin(),
                              g.chain().levels[i].end(),
                              embedding.to_parent[x]))
        fail_domain("subchain level " + std::to_string(i) +
                    " escapes the chain level");

  long h_order = sub_chain.group->order();
  struct Piece {
    std::vector<CycMatrix> mats;
    long offset;  // original coordinate block start
    long width;
  };
  std::vector<Piece> pieces;
  for (size_t k = 0; k < g.ambient().components().size(); ++k) {
    const auto& [rep, mult] = g.ambient().components()[k];
    long deg = rep.degree();
    std::vector<CycMatrix> mats;
    for (long h = 0; h < h_order; ++h)
      mats.push_back(rep.matrix(embedding.to_parent[h]));
    bool diagonal = true;
    for (const auto& m : mats)
      for (long i = 0; i < deg && diagonal; ++i)
        for (long j = 0; j < deg; ++j)
          if (i != j && !m.at(i, j).is_zero()) {
            diagonal = false;
            break;
          }
    long base = g.ambient().offset_of((long)k);
    if (diagonal) {
      for (long copy = 0; copy < mult; ++copy)
        for (long t = 0; t < deg; ++t) {
          std::vector<CycMatrix> one(h_order, CycMatrix(1, 1));
          for (long h = 0; h < h_order; ++h) one[h].at(0, 0) = mats[h].at(t, t);
          pieces.push_back({std::move(one), base + copy * deg + t, 1});
        }
    } else {
      Representation r = Representation::create(sub_chain.group, mats,
                                                rep.label() + "|");
      if (inner_product(r.character(), r.character()) != Rat(1))
        fail_unsupported(
            "restricted component does not split along the given coordinates");
      for (long copy = 0; copy < mult; ++copy)
        pieces.push_back({mats, base + copy * deg, deg});
    }
  }

  // merge identical realizations; order groups by (degree, character, offset)
  std::vector<long> order(pieces.size());
  std::iota(order.begin(), order.end(), 0);
  auto chr = [&](const Piece& p) {
    CycVector values;
    for (const auto& m : p.mats) values.push_back(m.trace());
    return values;
  };
  std::vector<CycVector> chars;
  for (const auto& p : pieces) chars.push_back(chr(p));
  auto value_cmp = [](const CycVector& a, const CycVector& b) {
    for (size_t i = 0; i < a.size(); ++i) {
      int c = a[i].cmp(b[i]);
      if (c != 0) return c;
    }
    return 0;
  };
  std::stable_sort(order.begin(), order.end(), [&](long x, long y) {
    if (pieces[x].width != pieces[y].width)
      return pieces[x].width < pieces[y].width;
    int c = value_cmp(chars[x], chars[y]);
    if (c != 0) return c < 0;
    return pieces[x].offset < pieces[y].offset;
  });

  std::vector<std::pair<Representation, long>> components;
  CycVector new_gen;
  size_t at = 0;
  long label_count = 0;
  while (at < order.size()) {
    size_t run = at;
    while (run < order.size() &&
           pieces[order[run]].mats == pieces[order[at]].mats)
      ++run;
    // equal characters in different bases cannot be regrouped coordinatewise
    if (run < order.size() &&
        value_cmp(chars[order[run]], chars[order[at]]) == 0)
      fail_unsupported(
          "isomorphic restricted components appear in different bases");
    const Piece& lead = pieces[order[at]];
    Representation rep = Representation::create(
        sub_chain.group, lead.mats,
        "res" + std::to_string(++label_count));
    components.push_back({std::move(rep), (long)(run - at)});
    for (size_t t = at; t < run; ++t) {
      const Piece& p = pieces[order[t]];
      for (long i = 0; i < p.width; ++i)
        new_gen.push_back(g.generator()[p.offset + i]);
    }
    at = run;
  }
  auto mod = std::make_shared<const LabeledModule>(sub_chain.group,
                                                   std::move(components));
  return Glider::build(sub_chain, mod, std::move(new_gen));
}

}  // namespace glrep
