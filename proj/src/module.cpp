#include "gliderrep/module.hpp"

#include <algorithm>
#include <numeric>

#include "gliderrep/error.hpp"

namespace glrep {

LabeledModule::LabeledModule(
    GroupPtr group, std::vector<std::pair<Representation, long>> components)
    : group_(std::move(group)), components_(std::move(components)) {
  for (const auto& [rep, mult] : components_) {
    if (rep.group().get() != group_.get())
      fail_domain("module component over a different group");
    if (mult < 1) fail_domain("component multiplicity must be positive");
    offsets_.push_back(dimension_);
    dimension_ += rep.degree() * mult;
  }
  have_action_.assign(group_->order(), 0);
  action_.resize(group_->order());
}

const CycMatrix& LabeledModule::action(long g) const {
  if (g < 0 || g >= group_->order()) fail_domain("element id out of range");
  if (!have_action_[g]) {
    CycMatrix m(dimension_, dimension_);
    long at = 0;
    for (const auto& [rep, mult] : components_) {
      const CycMatrix& block = rep.matrix(g);
      long deg = rep.degree();
      for (long copy = 0; copy < mult; ++copy, at += deg)
        for (long i = 0; i < deg; ++i)
          for (long j = 0; j < deg; ++j) m.at(at + i, at + j) = block.at(i, j);
    }
    action_[g] = std::move(m);
    have_action_[g] = 1;
  }
  return action_[g];
}

CharacterVector LabeledModule::character() const {
  long classes = (long)group_->conjugacy_classes().size();
  std::vector<CycNumber> values(classes);
  for (long c = 0; c < classes; ++c)
    for (const auto& [rep, mult] : components_)
      values[c] += rep.character().at_class(c) * CycNumber(mult);
  return CharacterVector(group_, std::move(values));
}

Subspace orbit_span(const LabeledModule& m, const std::vector<long>& elems,
                    const CycVector& a) {
  if ((long)a.size() != m.dimension())
    fail_domain("vector length does not match the module dimension");
  CycMatrix rows((long)elems.size(), m.dimension());
  for (size_t k = 0; k < elems.size(); ++k)
    rows.set_row((long)k, m.action(elems[k]).apply(a));
  return Subspace::span_rows(rows);
}

Subspace cyclic_module(const LabeledModule& m, const CycVector& a) {
  std::vector<long> all(m.group()->order());
  std::iota(all.begin(), all.end(), 0);
  return orbit_span(m, all, a);
}

long annihilator_dim(const LabeledModule& m, const CycVector& a) {
  return m.group()->order() - cyclic_module(m, a).dim();
}

TailCheck is_irreducible_tail(const LabeledModule& m, const CycVector& a) {
  if ((long)a.size() != m.dimension())
    fail_domain("vector length does not match the module dimension");
  for (size_t k = 0; k < m.components().size(); ++k) {
    const auto& [rep, mult] = m.components()[k];
    long deg = rep.degree();
    if (mult > deg)
      return {false, "component " + rep.label() + ": multiplicity " +
                         std::to_string(mult) + " exceeds degree " +
                         std::to_string(deg)};
    CycMatrix blocks(mult, deg);
    for (long copy = 0; copy < mult; ++copy)
      for (long j = 0; j < deg; ++j)
        blocks.at(copy, j) = a[m.offset_of((long)k) + copy * deg + j];
    long r = rank(blocks);
    if (r < mult)
      return {false, "component " + rep.label() + ": generator blocks span " +
                         std::to_string(r) + " of " + std::to_string(mult) +
                         " copies"};
  }
  return {true, ""};
}

Subspace largest_invariant_subspace(const LabeledModule& m, Subspace w) {
  auto gens = generating_set(*m.group());
  for (bool shrunk = true; shrunk;) {
    shrunk = false;
    for (long s : gens) {
      Subspace next = w.intersect(w.image_under(m.action(m.group()->inv(s))));
      if (next.dim() < w.dim()) {
        w = std::move(next);
        shrunk = true;
      }
    }
  }
  return w;
}

std::vector<Subspace> isotypic_components(const LabeledModule& m,
                                          const SubgroupGroup& h) {
  if (h.parent.get() != m.group().get())
    fail_domain("subgroup does not live in the module's group");
  const CharacterTable& table = character_table(h.group);
  long order = h.group->order();
  std::vector<Subspace> out;
  for (const auto& irr : table.irreps) {
    const CharacterVector& chi = irr.character();
    CycMatrix p(m.dimension(), m.dimension());
    for (long x = 0; x < order; ++x) {
      CycNumber weight = chi.at_element(x).conj() * CycNumber(irr.degree());
      p.add_scaled(m.action(h.to_parent[x]), weight);
    }
    p = p.scaled(CycNumber(Rat(1, order)));
    out.push_back(Subspace::full(m.dimension()).image_under(p));
  }
  return out;
}

}  // namespace glrep
