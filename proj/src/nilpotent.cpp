#include "gliderrep/nilpotent.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "gliderrep/error.hpp"

namespace glrep {
namespace {

std::vector<long> all_ids(long n) {
  std::vector<long> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  return ids;
}

CycMatrix kron(const CycMatrix& a, const CycMatrix& b) {
  CycMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i1 = 0; i1 < a.rows(); ++i1)
    for (long j1 = 0; j1 < a.cols(); ++j1)
      for (long i2 = 0; i2 < b.rows(); ++i2)
        for (long j2 = 0; j2 < b.cols(); ++j2)
          out.at(i1 * b.rows() + i2, j1 * b.cols() + j2) =
              a.at(i1, j1) * b.at(i2, j2);
  return out;
}

void validate_factor_chain(const NormalChain& c) {
  const FiniteGroup& g = *c.group;
  if (c.levels.size() < 2) fail_domain("factor chain needs at least one step");
  if (c.levels.front() != std::vector<long>{0})
    fail_domain("factor chain must start at the trivial subgroup");
  if (c.levels.back() != all_ids(g.order()))
    fail_domain("factor chain must end at the full group");
  for (size_t i = 0; i < c.levels.size(); ++i) {
    const auto& lv = c.levels[i];
    if (!std::is_sorted(lv.begin(), lv.end()) ||
        std::adjacent_find(lv.begin(), lv.end()) != lv.end())
      fail_domain("factor chain level ids must be sorted and distinct");
    if (!is_subgroup(g, lv) || !is_normal(g, lv))
      fail_domain("factor chain level is not a normal subgroup");
    if (i > 0 && (lv.size() <= c.levels[i - 1].size() ||
                  !std::includes(lv.begin(), lv.end(), c.levels[i - 1].begin(),
                                 c.levels[i - 1].end())))
      fail_domain("factor chain levels must strictly ascend");
  }
}

void require_over_ladder(const ProductChain& pc, const Glider& m) {
  if (m.chain().group != pc.product || m.chain().levels != pc.ladder.levels)
    fail_domain("glider is not over the product ladder");
  if (m.ambient().group() != pc.product)
    fail_domain("glider ambient is not over the product group");
}

// Value vector of a 1-dimensional component on one embedded factor.
CycVector restriction_values(const ProductChain& pc, const Representation& w,
                             bool g_side) {
  long nh = pc.h_chain.group->order();
  long nf = (g_side ? pc.g_chain.group : pc.h_chain.group)->order();
  CycVector vals;
  vals.reserve(nf);
  for (long k = 0; k < nf; ++k)
    vals.push_back(w.matrix(g_side ? k * nh : k).at(0, 0));
  return vals;
}

// Component index -> index into the list of distinct restriction vectors,
// in first-appearance order.
std::vector<long> restriction_labels(const ProductChain& pc, const Glider& m,
                                     bool g_side,
                                     std::vector<CycVector>* distinct = nullptr) {
  std::vector<CycVector> seen;
  std::vector<long> labels;
  for (const auto& [rep, mult] : m.ambient().components()) {
    CycVector vals = restriction_values(pc, rep, g_side);
    long at = -1;
    for (size_t k = 0; k < seen.size(); ++k)
      if (seen[k] == vals) {
        at = (long)k;
        break;
      }
    if (at < 0) {
      at = (long)seen.size();
      seen.push_back(std::move(vals));
    }
    for (long c = 0; c < mult; ++c) labels.push_back(at);
  }
  if (distinct) *distinct = std::move(seen);
  return labels;
}

// Norm of the restricted character over one factor; for a Kronecker
// component U tensor V this is (dim V)^2 on the G side and (dim U)^2 on the
// H side, giving the copy count of the extracted block.
long restricted_copy_count(const ProductChain& pc, const Representation& w,
                       bool g_side) {
  const GroupPtr& f = g_side ? pc.g_chain.group : pc.h_chain.group;
  long nh = pc.h_chain.group->order();
  std::vector<CycNumber> vals;
  for (const auto& cls : f->conjugacy_classes()) {
    long k = cls.front();
    vals.push_back(w.character().at_element(g_side ? k * nh : k));
  }
  Rat nn = inner_product(CharacterVector(f, vals), CharacterVector(f, vals));
  if (nn.get_den() != 1) fail_domain("restricted character norm not integral");
  mpz_class root = sqrt(nn.get_num());
  if (root * root != nn.get_num())
    fail_domain("component restriction is not a square isotype");
  return root.get_si();
}

bool glider_matches_chain(const Glider& g, const NormalChain& c) {
  return g.chain().group == c.group && g.chain().levels == c.levels;
}

}  // namespace

ProductChain make_product_chain(const GroupPtr& product,
                                const NormalChain& g_chain,
                                const NormalChain& h_chain) {
  const GroupPtr& g = g_chain.group;
  const GroupPtr& h = h_chain.group;
  if (!product || product->product_left() != g ||
      product->product_right() != h)
    fail_domain("product chain needs the direct product of the chain groups");
  long ng = g->order(), nh = h->order();
  if (std::gcd(ng, nh) != 1) fail_domain("factor orders are not coprime");
  validate_factor_chain(g_chain);
  validate_factor_chain(h_chain);

  ProductChain pc;
  pc.product = product;
  std::vector<long> g_ids, h_ids;
  for (long a = 0; a < ng; ++a) g_ids.push_back(a * nh);
  for (long b = 0; b < nh; ++b) h_ids.push_back(b);
  pc.g_factor = subgroup_group(product, g_ids, g->name());
  pc.h_factor = subgroup_group(product, h_ids, h->name());
  pc.g_chain = g_chain;
  pc.h_chain = h_chain;

  long d = std::max(g_chain.length(), h_chain.length());
  std::vector<std::vector<long>> levels;
  for (long i = 0; i <= d; ++i) {
    const auto& ga = g_chain.levels[std::min<long>(i, g_chain.length())];
    const auto& hb = h_chain.levels[std::min<long>(i, h_chain.length())];
    std::vector<long> lv;
    lv.reserve(ga.size() * hb.size());
    for (long a : ga)
      for (long b : hb) lv.push_back(a * nh + b);
    std::sort(lv.begin(), lv.end());
    if (!is_subgroup(*product, lv) || !is_normal(*product, lv))
      fail_domain("combined ladder level is not a normal subgroup");
    levels.push_back(std::move(lv));
  }
  pc.ladder = NormalChain{product, std::move(levels)};
  return pc;
}

Representation tensor_rep(const GroupPtr& product, const Representation& g_rep,
                          const Representation& h_rep) {
  if (!product || product->product_left() != g_rep.group() ||
      product->product_right() != h_rep.group())
    fail_domain("tensor factors must match the direct product");
  long nh = h_rep.group()->order();
  std::vector<CycMatrix> mats;
  mats.reserve(product->order());
  for (long id = 0; id < product->order(); ++id)
    mats.push_back(kron(g_rep.matrix(id / nh), h_rep.matrix(id % nh)));
  return Representation::create(product, std::move(mats),
                                g_rep.label() + "*" + h_rep.label());
}

std::shared_ptr<const LabeledModule> product_module(
    const GroupPtr& product,
    const std::vector<std::tuple<Representation, Representation, long>>&
        parts) {
  std::vector<std::pair<Representation, long>> comps;
  comps.reserve(parts.size());
  for (const auto& [gr, hr, mult] : parts)
    comps.emplace_back(tensor_rep(product, gr, hr), mult);
  return std::make_shared<const LabeledModule>(product, std::move(comps));
}

GliderTriple glider_triple(const ProductChain& pc, const Glider& m) {
  require_over_ladder(pc, m);
  const auto& comps = m.ambient().components();
  for (const auto& [rep, mult] : comps) {
    if (rep.degree() != 1)
      fail_domain("triple counts need 1-dimensional components");
    if (mult != 1)
      fail_domain("triple counts need multiplicity-free components");
  }
  for (size_t i = 0; i < comps.size(); ++i)
    for (size_t j = i + 1; j < comps.size(); ++j)
      if (comps[i].first.character() == comps[j].first.character())
        fail_domain("triple counts need pairwise distinct components");
  TailCheck t = m.direct_irreducible();
  if (!t.ok) fail_domain("triple counts need an irreducible glider: " + t.detail);

  GliderTriple out;
  out.components = (long)comps.size();
  std::vector<CycVector> gd, hd;
  restriction_labels(pc, m, true, &gd);
  restriction_labels(pc, m, false, &hd);
  out.g_classes = (long)gd.size();
  out.h_classes = (long)hd.size();
  return out;
}

Glider tensor_glider(const ProductChain& pc, const Glider& g_part,
                     const Glider& h_part) {
  if (!glider_matches_chain(g_part, pc.g_chain))
    fail_domain("left factor glider is not over the G-factor chain");
  if (!glider_matches_chain(h_part, pc.h_chain))
    fail_domain("right factor glider is not over the H-factor chain");

  const auto& ga = g_part.ambient().components();
  const auto& ha = h_part.ambient().components();
  std::vector<std::pair<Representation, long>> comps;
  for (const auto& [gr, gm] : ga)
    for (const auto& [hr, hm] : ha)
      comps.emplace_back(tensor_rep(pc.product, gr, hr), gm * hm);
  auto amb = std::make_shared<const LabeledModule>(pc.product, std::move(comps));

  const CycVector& u = g_part.generator();
  const CycVector& v = h_part.generator();
  CycVector gen(amb->dimension());
  long at = 0, go = 0;
  for (const auto& [gr, gm] : ga) {
    long p = gr.degree();
    long ho = 0;
    for (const auto& [hr, hm] : ha) {
      long q = hr.degree();
      for (long cg = 0; cg < gm; ++cg)
        for (long ch = 0; ch < hm; ++ch)
          for (long s = 0; s < p; ++s)
            for (long t = 0; t < q; ++t)
              gen[at + (cg * hm + ch) * p * q + s * q + t] =
                  u[go + cg * p + s] * v[ho + ch * q + t];
      at += gm * hm * p * q;
      ho += hm * q;
    }
    go += gm * p;
  }
  return Glider::build(pc.ladder, std::move(amb), std::move(gen));
}

TensorSplit tensor_split(const ProductChain& pc, const Glider& m) {
  TensorSplit out;
  out.triple = glider_triple(pc, m);
  out.decomposable =
      out.triple.components == out.triple.g_classes * out.triple.h_classes;
  if (!out.decomposable) return out;

  auto build_part = [&](bool g_side) {
    const GroupPtr& f = g_side ? pc.g_chain.group : pc.h_chain.group;
    std::vector<CycVector> distinct;
    restriction_labels(pc, m, g_side, &distinct);
    std::vector<std::pair<Representation, long>> comps;
    for (size_t k = 0; k < distinct.size(); ++k) {
      std::vector<CycMatrix> mats;
      mats.reserve(f->order());
      for (long e = 0; e < f->order(); ++e) {
        CycMatrix one(1, 1);
        one.at(0, 0) = distinct[k][e];
        mats.push_back(std::move(one));
      }
      comps.emplace_back(
          Representation::create(f, std::move(mats),
                                 (g_side ? "gpart" : "hpart") +
                                     std::to_string(k)),
          1L);
    }
    auto amb = std::make_shared<const LabeledModule>(f, std::move(comps));
    CycVector ones(amb->dimension(), CycNumber(1));
    return Glider::build(g_side ? pc.g_chain : pc.h_chain, std::move(amb),
                         std::move(ones));
  };
  Glider gp = build_part(true);
  Glider hp = build_part(false);
  Glider re = tensor_glider(pc, gp, hp);
  if (!(re.character() == m.character()))
    fail_domain("tensor reconstruction does not match the glider");
  out.g_part = std::move(gp);
  out.h_part = std::move(hp);
  return out;
}

Glider factor_glider(const ProductChain& pc, const Glider& m, bool g_side) {
  require_over_ladder(pc, m);
  const GroupPtr& f = g_side ? pc.g_chain.group : pc.h_chain.group;
  const NormalChain& side_chain = g_side ? pc.g_chain : pc.h_chain;
  long nf = f->order();
  long nh = pc.h_chain.group->order();
  auto embed = [&](long k) { return g_side ? k * nh : k; };

  struct Piece {
    std::vector<CycMatrix> mats;
    std::string label;
    std::vector<std::vector<long>> copies;  // old coordinates per copy
  };
  std::vector<Piece> pieces;

  const auto& comps = m.ambient().components();
  for (size_t ci = 0; ci < comps.size(); ++ci) {
    const Representation& w = comps[ci].first;
    long mult = comps[ci].second;
    long off = m.ambient().offset_of((long)ci);
    long dw = w.degree();
    long copies = restricted_copy_count(pc, w, g_side);
    if (copies <= 0 || dw % copies != 0)
      fail_domain("component restriction does not split evenly");
    long deg = dw / copies;

    // Extract the factor block and verify the Kronecker structure: on the
    // G side W(g,e) = U(g) (x) I, on the H side W(e,h) = I (x) V(h).
    std::vector<CycMatrix> mats;
    mats.reserve(nf);
    for (long k = 0; k < nf; ++k) {
      const CycMatrix& wm = w.matrix(embed(k));
      CycMatrix u(deg, deg);
      for (long s = 0; s < deg; ++s)
        for (long t = 0; t < deg; ++t)
          u.at(s, t) = g_side ? wm.at(s * copies, t * copies) : wm.at(s, t);
      for (long s = 0; s < deg; ++s)
        for (long t = 0; t < deg; ++t)
          for (long x = 0; x < copies; ++x)
            for (long y = 0; y < copies; ++y) {
              const CycNumber& got =
                  g_side ? wm.at(s * copies + x, t * copies + y)
                         : wm.at(x * deg + s, y * deg + t);
              if (x == y ? !(got == u.at(s, t)) : !got.is_zero())
                fail_domain("component is not in factor coordinates");
            }
      mats.push_back(std::move(u));
    }

    long at = -1;
    for (size_t k = 0; k < pieces.size(); ++k)
      if (pieces[k].mats == mats) {
        at = (long)k;
        break;
      }
    if (at < 0) {
      for (const auto& p : pieces)
        if (p.mats[0].rows() == deg) {
          CharacterVector a = Representation::create(f, p.mats, "a").character();
          CharacterVector b = Representation::create(f, mats, "b").character();
          if (a == b)
            fail_domain("isomorphic factor blocks in mismatched coordinates");
        }
      at = (long)pieces.size();
      pieces.push_back(
          {std::move(mats), w.label() + (g_side ? "|G" : "|H"), {}});
    }
    for (long c = 0; c < mult; ++c)
      for (long x = 0; x < copies; ++x) {
        std::vector<long> coords(deg);
        for (long s = 0; s < deg; ++s)
          coords[s] = off + c * dw + (g_side ? s * copies + x : x * deg + s);
        pieces[at].copies.push_back(std::move(coords));
      }
  }

  std::vector<std::pair<Representation, long>> side_comps;
  CycVector gen;
  for (auto& p : pieces) {
    side_comps.emplace_back(
        Representation::create(f, std::move(p.mats), p.label),
        (long)p.copies.size());
    for (const auto& coords : p.copies)
      for (long old : coords) gen.push_back(m.generator()[old]);
  }
  auto amb = std::make_shared<const LabeledModule>(f, std::move(side_comps));
  return Glider::build(side_chain, std::move(amb), std::move(gen));
}

namespace {

}  // namespace

ExclusionReport component_exclusion_check(const ProductChain& pc,
                                          const Glider& m) {
  require_over_ladder(pc, m);
  TailCheck t = m.direct_irreducible();
  if (!t.ok)
    fail_domain("exclusion laws need an irreducible glider: " + t.detail);

  ExclusionReport out;
  struct Info {
    long du, dv, mult;
    std::string label;
  };
  std::vector<Info> infos;
  for (const auto& [rep, mult] : m.ambient().components()) {
    long dv = restricted_copy_count(pc, rep, true);
    long du = restricted_copy_count(pc, rep, false);
    if (du * dv != rep.degree())
      fail_domain("component does not factor over the product");
    infos.push_back({du, dv, mult, rep.label()});
    if (du == 1 && dv == 1)
      ++out.linear_count;
    else if (dv == 1)
      ++out.g_heavy_count;
    else if (du == 1)
      ++out.h_heavy_count;
    else
      ++out.mixed_count;
  }

  Glider gs = factor_glider(pc, m, true);
  Glider hs = factor_glider(pc, m, false);
  out.g_irreducible = gs.direct_irreducible().ok;
  out.h_irreducible = hs.direct_irreducible().ok;

  if (out.h_irreducible)
    for (const auto& i : infos) {
      if (i.du > 1 && i.dv == 1)
        out.violations.push_back("H-side irreducibility admits the G-heavy component " + i.label);
      if (i.du > 1 && i.dv > 1 && i.mult * i.du > i.dv)
        out.violations.push_back("mixed component " + i.label + " exceeds the H-side multiplicity bound");
    }
  if (out.g_irreducible)
    for (const auto& i : infos) {
      if (i.dv > 1 && i.du == 1)
        out.violations.push_back("G-side irreducibility admits the H-heavy component " + i.label);
      if (i.du > 1 && i.dv > 1 && i.mult * i.dv > i.du)
        out.violations.push_back("mixed component " + i.label + " exceeds the G-side multiplicity bound");
    }

  bool all_linear = out.linear_count == (long)infos.size();
  bool mult_free = true;
  for (const auto& i : infos) mult_free = mult_free && i.mult == 1;
  std::vector<long> gl = restriction_labels(pc, m, true);
  std::vector<long> hl = restriction_labels(pc, m, false);
  auto pairwise_distinct = [](const std::vector<long>& v) {
    std::set<long> s(v.begin(), v.end());
    return s.size() == v.size();
  };
  bool separated = all_linear && mult_free && pairwise_distinct(gl) &&
                   pairwise_distinct(hl);
  if ((out.g_irreducible && out.h_irreducible) != separated)
    out.violations.push_back(
        "two-sided irreducibility disagrees with distinct linear components");
  return out;
}

namespace {

void check(std::vector<std::string>& violations, bool ok, std::string what) {
  if (!ok) violations.push_back(std::move(what));
}

void abelian_suite(const GroupPtr& g, const GroupPtr& h,
                   ProductSuiteReport& rep) {
  GroupPtr gh = direct_product(g, h);
  std::vector<Representation> g_lin = linear_characters(g);
  std::vector<Representation> h_lin = linear_characters(h);
  long gn = (long)g_lin.size(), hn = (long)h_lin.size();
  long n = gn * hn;
  if (n > 16)
    fail_unsupported("character grid too large for exhaustive enumeration");
  rep.notes.push_back(
      "generator family: nonempty subsets of the product characters, "
      "sum-of-basis generators");

  std::vector<Representation> grid;
  grid.reserve(n);
  for (long i = 0; i < gn; ++i)
    for (long j = 0; j < hn; ++j)
      grid.push_back(tensor_rep(gh, g_lin[i], h_lin[j]));

  for (const NormalChain& gc : maximal_normal_chains(g))
    for (const NormalChain& hc : maximal_normal_chains(h)) {
      ++rep.chain_pairs;
      ProductChain pc = make_product_chain(gh, gc, hc);
      for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
        std::vector<std::pair<Representation, long>> comps;
        std::set<long> gset, hset;
        for (long k = 0; k < n; ++k)
          if (mask >> k & 1) {
            comps.emplace_back(grid[k], 1L);
            gset.insert(k / hn);
            hset.insert(k % hn);
          }
        long a = (long)comps.size();
        long b = (long)gset.size(), c = (long)hset.size();
        auto amb = std::make_shared<const LabeledModule>(gh, std::move(comps));
        CycVector ones(amb->dimension(), CycNumber(1));
        Glider m = Glider::build(pc.ladder, std::move(amb), std::move(ones));
        if (!m.direct_irreducible().ok) {
          ++rep.skipped;
          continue;
        }
        ++rep.instances_checked;
        std::string tag = " (chain pair " + std::to_string(rep.chain_pairs) +
                          ", mask " + std::to_string(mask) + ")";
        try {
          GliderTriple t = glider_triple(pc, m);
          check(rep.violations,
                t.components == a && t.g_classes == b && t.h_classes == c,
                "triple disagrees with the subset labels" + tag);
          check(rep.violations,
                std::max(b, c) <= a && a <= b * c,
                "triple bounds fail" + tag);
          // the components fill the full b x c label grid exactly when
          // a = b * c, since distinct components have distinct label pairs
          TensorSplit split = tensor_split(pc, m);
          check(rep.violations, split.decomposable == (a == b * c),
                "split verdict disagrees with the counts" + tag);
          if (split.decomposable) {
            ++rep.decomposable_count;
            check(rep.violations,
                  split.g_part && split.g_part->direct_irreducible().ok &&
                      split.h_part && split.h_part->direct_irreducible().ok,
                  "split produced a reducible factor" + tag);
            Glider re = tensor_glider(pc, *split.g_part, *split.h_part);
            check(rep.violations, re.direct_irreducible().ok,
                  "tensor of irreducible factors is reducible" + tag);
            check(rep.violations, re.character() == m.character(),
                  "reconstruction character mismatch" + tag);
          }
          ExclusionReport ex = component_exclusion_check(pc, m);
          check(rep.violations, ex.violations.empty(),
                ex.violations.empty() ? "" : ex.violations.front() + tag);
          check(rep.violations,
                (ex.g_irreducible && ex.h_irreducible) == (b == a && c == a),
                "factor irreducibility disagrees with the distinct "
                "restriction counts" + tag);
        } catch (const Error& e) {
          rep.violations.push_back(std::string("instance error: ") + e.what() +
                                   tag);
        }
      }
    }
}

// Index-p lift of the characters of an abelian maximal normal subgroup of a
// group of order p^3: each character either induces a degree-p simple or
// extends to exactly p linear characters, never both.
void lift_dichotomy(const GroupPtr& f, ProductSuiteReport& rep) {
  long p = 0;
  for (long q = 2; q * q * q <= f->order(); ++q)
    if (q * q * q == f->order()) p = q;
  if (p == 0 || f->is_abelian()) return;
  NormalChain chain = maximal_normal_chains(f).front();
  SubgroupGroup a =
      subgroup_group(f, chain.levels[chain.length() - 1], f->name() + "|max");
  if (!a.group->is_abelian()) {
    rep.notes.push_back("maximal subgroup of " + f->name() +
                        " not abelian; lift dichotomy skipped");
    return;
  }
  std::vector<Representation> f_lin = linear_characters(f);
  long induced_ct = 0, extend_ct = 0;
  for (const Representation& lam : linear_characters(a.group)) {
    CharacterVector ind = induced_character(lam.character(), a, f);
    Rat nn = inner_product(ind, ind);
    long ext = 0;
    for (const Representation& mu : f_lin) {
      bool same = true;
      for (long k = 0; k < a.group->order() && same; ++k)
        same = mu.character().at_element(a.to_parent[k]) ==
               lam.character().at_element(k);
      if (same) ++ext;
    }
    if (nn == 1 && ext == 0)
      ++induced_ct;
    else if (nn == p && ext == p)
      ++extend_ct;
    else
      rep.violations.push_back("lift dichotomy fails on " + f->name());
  }
  rep.notes.push_back("lift dichotomy on " + f->name() + ": " +
                      std::to_string(induced_ct) + " induce simples, " +
                      std::to_string(extend_ct) + " extend to " +
                      std::to_string(p) + " linear lifts");
}

void counterexample_suite(const GroupPtr& g, const GroupPtr& h,
                          ProductSuiteReport& rep) {
  GroupPtr gh = direct_product(g, h);
  NormalChain gc{g, {{0}, all_ids(g->order())}};
  NormalChain hc{h, {{0}, all_ids(h->order())}};
  ProductChain pc = make_product_chain(gh, gc, hc);
  rep.chain_pairs = 1;

  // one Kronecker component of degree > 1 from the nonabelian factor,
  // a linear character from the other
  auto first_heavy = [](const GroupPtr& f) {
    for (const Representation& r : character_table(f).irreps)
      if (r.degree() > 1) return r;
    fail_domain("no higher-dimensional component available");
  };
  auto some_linear = [](const GroupPtr& f) {
    std::vector<Representation> lin = linear_characters(f);
    return lin[lin.size() > 1 ? 1 : 0];
  };
  Representation left = g->is_abelian() ? some_linear(g) : first_heavy(g);
  Representation right = g->is_abelian() ? first_heavy(h) : some_linear(h);
  long p = std::max(left.degree(), right.degree());

  auto amb = product_module(gh, {{left, right, 2}});
  CycVector gen(amb->dimension());
  gen[0] = CycNumber(1);      // first basis vector of the first copy
  gen[p + 1] = CycNumber(1);  // second basis vector of the second copy
  Glider m = Glider::build(pc.ladder, amb, std::move(gen));
  rep.instances_checked = 1;

  check(rep.violations, m.direct_irreducible().ok,
        "stock witness is not irreducible");
  bool refused = false;
  try {
    glider_triple(pc, m);
  } catch (const Error&) {
    refused = true;
  }
  check(rep.violations, refused,
        "triple accepted a higher-dimensional component");
  rep.notes.push_back("triple count refuses the degree-" + std::to_string(p) +
                      " component, as specified");

  // the tensor of two irreducible factor gliders reconstructs the witness
  // even though a = 2 while b = c = 1
  std::vector<std::pair<Representation, long>> heavy_comps, light_comps;
  bool heavy_left = !g->is_abelian();
  heavy_comps.emplace_back(heavy_left ? left : right, 2L);
  light_comps.emplace_back(heavy_left ? right : left, 1L);
  auto heavy_amb = std::make_shared<const LabeledModule>(
      heavy_left ? g : h, std::move(heavy_comps));
  auto light_amb = std::make_shared<const LabeledModule>(
      heavy_left ? h : g, std::move(light_comps));
  CycVector heavy_gen(heavy_amb->dimension());
  heavy_gen[0] = CycNumber(1);
  heavy_gen[p + 1] = CycNumber(1);
  CycVector light_gen(light_amb->dimension(), CycNumber(1));
  Glider heavy_part = Glider::build(heavy_left ? pc.g_chain : pc.h_chain,
                                    heavy_amb, std::move(heavy_gen));
  Glider light_part = Glider::build(heavy_left ? pc.h_chain : pc.g_chain,
                                    light_amb, std::move(light_gen));
  check(rep.violations, heavy_part.direct_irreducible().ok,
        "multiplicity-two factor with independent columns is not irreducible");
  check(rep.violations, light_part.direct_irreducible().ok,
        "linear factor is not irreducible");
  Glider re = heavy_left ? tensor_glider(pc, heavy_part, light_part)
                         : tensor_glider(pc, light_part, heavy_part);
  check(rep.violations, re.character() == m.character(),
        "tensor of the irreducible factors does not reconstruct the witness");
  rep.notes.push_back(
      "irreducible glider with counts a=2 b=1 c=1 is a tensor of irreducible "
      "factors although a != b*c");

  // the single-copy factorization of the same ambient forces a
  // multiplicity-two co-factor, which is never irreducible: any generator
  // spans at most one of its two 1-dimensional copies' worth of rank
  std::vector<std::pair<Representation, long>> single_comps, double_comps;
  single_comps.emplace_back(heavy_left ? left : right, 1L);
  double_comps.emplace_back(heavy_left ? right : left, 2L);
  auto single_amb = std::make_shared<const LabeledModule>(
      heavy_left ? g : h, std::move(single_comps));
  auto double_amb = std::make_shared<const LabeledModule>(
      heavy_left ? h : g, std::move(double_comps));
  Glider single_part =
      Glider::build(heavy_left ? pc.g_chain : pc.h_chain, single_amb,
                    CycVector(single_amb->dimension(), CycNumber(1)));
  Glider double_part =
      Glider::build(heavy_left ? pc.h_chain : pc.g_chain, double_amb,
                    CycVector(double_amb->dimension(), CycNumber(1)));
  check(rep.violations, single_part.direct_irreducible().ok,
        "single-copy factor is not irreducible");
  check(rep.violations, !double_part.direct_irreducible().ok,
        "multiplicity-two linear co-factor passed as irreducible");
  rep.notes.push_back(
      "single-copy factorization forces a multiplicity-two co-factor, never "
      "irreducible");

  ExclusionReport ex = component_exclusion_check(pc, m);
  for (const std::string& v : ex.violations)
    rep.violations.push_back("witness exclusion: " + v);
  check(rep.violations,
        ex.g_irreducible == heavy_left && ex.h_irreducible == !heavy_left,
        "witness restricts irreducibly only over the heavy factor");

  lift_dichotomy(g, rep);
  lift_dichotomy(h, rep);
}

}  // namespace

ProductSuiteReport product_glider_suite(const GroupPtr& g, const GroupPtr& h) {
  if (std::gcd(g->order(), h->order()) != 1)
    fail_domain("factor orders are not coprime");
  ProductSuiteReport rep;
  rep.abelian = g->is_abelian() && h->is_abelian();
  if (rep.abelian)
    abelian_suite(g, h, rep);
  else
    counterexample_suite(g, h, rep);
  return rep;
}

}  // namespace glrep
