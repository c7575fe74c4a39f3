#include "gliderrep/clifford.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <utility>

#include "gliderrep/error.hpp"
#include "gliderrep/glider.hpp"

namespace glrep {
namespace {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// p when n is a nontrivial power of the prime p, otherwise 0.
long prime_power_base(long n) {
  if (n < 2) return 0;
  long p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  return n == 1 ? p : 0;
}

std::vector<long> all_ids(long n) {
  std::vector<long> v(n);
  for (long i = 0; i < n; ++i) v[i] = i;
  return v;
}

std::vector<long> parent_ids(const SubgroupGroup& s) {
  std::vector<long> v = s.to_parent;
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<long> sorted_intersection(const std::vector<long>& a,
                                      const std::vector<long>& b) {
  std::vector<long> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

bool subset(const std::vector<long>& a, const std::vector<long>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool member(const std::vector<long>& sorted, long x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

// Character of the level's action on the submodule it generates from the
// block; that span is stable under the level, so projected traces are valid.
CharacterVector generated_character(const BuildingBlock& b,
                                    const SubgroupGroup& level) {
  Subspace w = subspace_product(*b.ambient, level.to_parent, b.space);
  const auto& classes = level.group->conjugacy_classes();
  std::vector<CycNumber> values;
  values.reserve(classes.size());
  for (const auto& cls : classes)
    values.push_back(w.trace_of(b.ambient->action(level.to_parent[cls[0]])));
  return CharacterVector(level.group, std::move(values));
}

}  // namespace

ChainSquare make_square(const GroupPtr& top, const std::vector<long>& h_hi,
                        const std::vector<long>& g_lo) {
  if (!top) fail_domain("square needs an ambient group");
  const long n = top->order();
  auto checked = [&](std::vector<long> v, const char* which) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (!is_subgroup(*top, v))
      fail_domain(std::string(which) + " is not a subgroup");
    if (!is_normal(*top, v))
      fail_domain(std::string(which) + " is not normal in the ambient group");
    if ((long)v.size() == n || !is_prime(n / (long)v.size()))
      fail_domain(std::string(which) + " must have prime index");
    return v;
  };
  ChainSquare sq;
  sq.top = top;
  auto hv = checked(h_hi, "h_hi");
  auto gv = checked(g_lo, "g_lo");
  if (hv == gv) fail_domain("the two upper levels coincide");
  auto bv = sorted_intersection(hv, gv);
  // Distinct prime-index normal levels always generate the whole group, so
  // |h_hi| * |g_lo| / |base| = |top|; record it rather than assume it.
  sq.maximal = (long)hv.size() * (long)gv.size() == n * (long)bv.size();
  sq.base = subgroup_group(top, bv, top->name() + "|base");
  sq.h_hi = subgroup_group(top, hv, top->name() + "|h");
  sq.g_lo = subgroup_group(top, gv, top->name() + "|g");
  return sq;
}

std::vector<ChainSquare> enumerate_squares(const GroupPtr& top) {
  if (!top) fail_domain("square enumeration needs a group");
  const long n = top->order();
  std::vector<std::vector<long>> levels;
  for (const auto& s : normal_subgroups(*top))
    if ((long)s.size() < n && is_prime(n / (long)s.size())) levels.push_back(s);
  // Squares overlap heavily (every pair of levels shares its intersection
  // with other pairs), so hand out one SubgroupGroup per distinct element
  // set; shared instances keep the per-group caches warm downstream.
  std::map<std::vector<long>, SubgroupGroup> made;
  auto shared = [&](const std::vector<long>& ids,
                    const char* role) -> const SubgroupGroup& {
    auto it = made.find(ids);
    if (it == made.end())
      it = made.emplace(ids, subgroup_group(top, ids, top->name() + role)).first;
    return it->second;
  };
  std::vector<ChainSquare> out;
  for (const auto& h : levels)
    for (const auto& g : levels) {
      if (h == g) continue;
      auto base = sorted_intersection(h, g);
      if ((long)h.size() * (long)g.size() != n * (long)base.size()) continue;
      ChainSquare sq;
      sq.top = top;
      sq.maximal = true;
      sq.base = shared(base, "|base");
      sq.h_hi = shared(h, "|h");
      sq.g_lo = shared(g, "|g");
      out.push_back(std::move(sq));
    }
  return out;
}

BuildingBlock make_block(const ChainSquare& sq,
                         std::shared_ptr<const LabeledModule> ambient,
                         const Subspace& space) {
  if (!ambient || ambient->group() != sq.top)
    fail_domain("block module must live over the square's ambient group");
  if (space.ambient() != ambient->dimension())
    fail_domain("block space has the wrong ambient dimension");
  if (space.dim() == 0) fail_domain("block space is zero");
  for (long x : sq.base.to_parent)
    if (!space.invariant_under(ambient->action(x)))
      fail_domain("block space is not stable under the base level");
  const auto& classes = sq.base.group->conjugacy_classes();
  std::vector<CycNumber> values;
  values.reserve(classes.size());
  for (const auto& cls : classes)
    values.push_back(space.trace_of(ambient->action(sq.base.to_parent[cls[0]])));
  CharacterVector chi(sq.base.group, std::move(values));
  if (inner_product(chi, chi) != Rat(1))
    fail_domain("block restricts reducibly to the base level");
  return BuildingBlock{std::move(ambient), space, std::move(chi)};
}

std::vector<BuildingBlock> block_constituents(
    const ChainSquare& sq, std::shared_ptr<const LabeledModule> ambient) {
  if (!ambient || ambient->group() != sq.top)
    fail_domain("block module must live over the square's ambient group");
  const long dim = ambient->dimension();
  const auto& tbl = character_table(sq.base.group);
  std::vector<BuildingBlock> out;
  long covered = 0;
  for (const auto& r : tbl.irreps) {
    const long f = r.degree();
    // Corner entry of the matrix-coefficient projector: its image meets each
    // copy of this constituent in one line, so the rows below seed a full
    // set of independent copies.
    CycMatrix proj(dim, dim);
    for (long k = 0; k < sq.base.group->order(); ++k) {
      const CycNumber c = r.matrix(sq.base.group->inv(k)).at(0, 0);
      proj.add_scaled(ambient->action(sq.base.to_parent[k]), c);
    }
    Subspace image = Subspace::full(dim).image_under(proj);
    for (long i = 0; i < image.dim(); ++i) {
      Subspace s = orbit_span(*ambient, sq.base.to_parent, image.basis().row(i));
      if (s.dim() != f) fail_domain("constituent has the wrong dimension");
      out.push_back(make_block(sq, ambient, s));
      covered += f;
    }
  }
  if (covered != dim) fail_domain("constituents do not cover the module");
  return out;
}

const char* block_class_name(BlockClass c) {
  switch (c) {
    case BlockClass::StabilizerIsGroup: return "stabilizer-group";
    case BlockClass::StabilizerIsLowerG: return "stabilizer-lower-g";
    case BlockClass::StabilizerIsUpperH: return "stabilizer-upper-h";
    case BlockClass::StabilizerIsBase: return "stabilizer-base";
    case BlockClass::MidStabilizerMobile: return "mid-mobile";
    case BlockClass::MidStabilizerStable: return "mid-stable";
    case BlockClass::Unclassified: break;
  }
  return "unclassified";
}

BlockClass classify_block(const ChainSquare& sq, const Pentad& p) {
  if ((long)p.stabilizer.size() == sq.top->order())
    return BlockClass::StabilizerIsGroup;
  if (p.stabilizer == parent_ids(sq.g_lo)) return BlockClass::StabilizerIsLowerG;
  if (p.stabilizer == parent_ids(sq.h_hi)) return BlockClass::StabilizerIsUpperH;
  if (p.stabilizer == parent_ids(sq.base)) return BlockClass::StabilizerIsBase;
  // Strictly between the base and the group, off both chains. The upper
  // level has prime index, so the grown module's inertia is h_hi or top.
  if (p.h_grown == parent_ids(sq.h_hi)) return BlockClass::MidStabilizerMobile;
  if ((long)p.h_grown.size() == sq.top->order())
    return BlockClass::MidStabilizerStable;
  return BlockClass::Unclassified;
}

Pentad block_pentad(const ChainSquare& sq, const BuildingBlock& b) {
  if (b.character.group() != sq.base.group)
    fail_domain("block belongs to a different square");
  Pentad p;
  p.stabilizer = inertia_group(b.character, sq.base);
  p.h_prime = sorted_intersection(p.stabilizer, parent_ids(sq.h_hi));
  p.g_prime = sorted_intersection(p.stabilizer, parent_ids(sq.g_lo));
  p.g_grown = inertia_group(generated_character(b, sq.g_lo), sq.g_lo);
  p.h_grown = inertia_group(generated_character(b, sq.h_hi), sq.h_hi);
  p.cls = classify_block(sq, p);
  return p;
}

long irrep_count_of_degree(const GroupPtr& g, long degree) {
  long count = 0;
  for (long d : character_table(g).degrees())
    if (d == degree) ++count;
  return count;
}

std::vector<CharacterVector> coset_translates(const ChainSquare& sq,
                                              const CharacterVector& chi) {
  if (chi.group() != sq.base.group)
    fail_domain("translate character belongs to a different square");
  std::vector<long> local_base;
  local_base.reserve(sq.base.to_parent.size());
  for (long x : sq.base.to_parent) local_base.push_back(sq.h_hi.from_parent[x]);
  std::sort(local_base.begin(), local_base.end());
  const auto reps = left_coset_reps(*sq.h_hi.group, local_base);
  const auto& classes = sq.base.group->conjugacy_classes();
  std::vector<CharacterVector> out;
  out.reserve(reps.size());
  for (long t : reps) {
    const long tp = sq.h_hi.to_parent[t];
    std::vector<CycNumber> values;
    values.reserve(classes.size());
    for (const auto& cls : classes) {
      const long x = sq.base.to_parent[cls[0]];
      values.push_back(
          chi.at_element(sq.base.from_parent[sq.top->conjugate(tp, x)]));
    }
    out.emplace_back(sq.base.group, std::move(values));
  }
  return out;
}

long matched_upper_module_count(
    const ChainSquare& sq, const std::vector<CharacterVector>& translates) {
  if (translates.empty()) return 0;
  long want_degree = 0;
  for (const auto& t : translates) want_degree += t.degree();
  const long base_order = sq.base.group->order();
  long count = 0;
  for (const auto& r : character_table(sq.h_hi.group).irreps) {
    const CharacterVector theta = r.character();
    if (theta.degree() != want_degree) continue;
    bool each_once = true;
    for (const auto& tr : translates) {
      CycNumber s(0);
      for (long k = 0; k < base_order; ++k) {
        const long x = sq.base.to_parent[k];
        s += theta.at_element(sq.h_hi.from_parent[x]) *
             tr.at_element(k).conj();
      }
      if (!(s == CycNumber(base_order))) {
        each_once = false;
        break;
      }
    }
    if (each_once) ++count;
  }
  return count;
}

long generated_module_multiplicity(const ChainSquare& sq,
                                   const BuildingBlock& b) {
  Subspace w =
      subspace_product(*b.ambient, all_ids(sq.top->order()), b.space);
  const auto& classes = sq.base.group->conjugacy_classes();
  std::vector<CycNumber> values;
  values.reserve(classes.size());
  for (const auto& cls : classes)
    values.push_back(w.trace_of(b.ambient->action(sq.base.to_parent[cls[0]])));
  Rat m = inner_product(CharacterVector(sq.base.group, std::move(values)),
                        b.character);
  if (m.get_den() != 1) fail_domain("block multiplicity is not integral");
  return m.get_num().get_si();
}

SquareReport verify_square(const ChainSquare& sq,
                           const std::vector<BuildingBlock>& blocks) {
  if (!sq.maximal) fail_domain("square does not cover its ambient group");
  const long n = sq.top->order();
  const auto base_ids = parent_ids(sq.base);
  const auto hhi_ids = parent_ids(sq.h_hi);
  const auto glo_ids = parent_ids(sq.g_lo);
  auto center_ids = sq.top->center();
  std::sort(center_ids.begin(), center_ids.end());
  const bool central_base = subset(base_ids, center_ids);
  const long p = prime_power_base(n);

  // Square-wide facts needed only when a mid-stabilizer block shows up.
  bool complement_noted = false;
  std::optional<bool> quotient_ok, complement_ok;
  auto quotient_is_p2_elementary = [&] {
    if (!quotient_ok) {
      bool ok = n == (long)base_ids.size() * p * p;
      for (long x = 0; ok && x < n; ++x) {
        long xp = 0;
        for (long i = 0; i < p; ++i) xp = sq.top->mul(xp, x);
        ok = member(base_ids, xp);
      }
      quotient_ok = ok;
    }
    return *quotient_ok;
  };
  auto noncentralizing_complement_exists = [&] {
    if (!complement_ok) {
      bool found = false;
      for (const auto& k : all_subgroups(*sq.top)) {
        if ((long)k.size() != p * p) continue;
        if (sorted_intersection(k, base_ids).size() != 1) continue;
        bool elementary = true;
        for (long x : k)
          if (x != 0 && sq.top->element_order(x) != p) elementary = false;
        if (!elementary) continue;
        bool moves = false;
        for (long x : k)
          for (long h : base_ids)
            if (sq.top->mul(x, h) != sq.top->mul(h, x)) moves = true;
        if (moves) {
          found = true;
          break;
        }
      }
      complement_ok = found;
    }
    return *complement_ok;
  };

  SquareReport report;
  for (size_t bi = 0; bi < blocks.size(); ++bi) {
    const auto& b = blocks[bi];
    auto complain = [&](const std::string& what) {
      report.violations.push_back("block " + std::to_string(bi) + ": " + what);
    };
    Pentad pt = block_pentad(sq, b);
    report.classes.push_back(pt.cls);
    ++report.blocks_checked;

    if (!subset(base_ids, pt.h_prime) || !subset(pt.h_prime, hhi_ids))
      complain("h_prime escapes [base, h_hi]");
    if (!subset(base_ids, pt.g_prime) || !subset(pt.g_prime, glo_ids))
      complain("g_prime escapes [base, g_lo]");
    if (!subset(base_ids, pt.stabilizer))
      complain("stabilizer does not contain the base");
    if (!subset(glo_ids, pt.g_grown))
      complain("g-grown inertia does not contain g_lo");
    if (!subset(hhi_ids, pt.h_grown))
      complain("h-grown inertia does not contain h_hi");

    bool product_inside = true;
    for (long a : pt.h_prime)
      for (long c : pt.g_prime)
        if (!member(pt.stabilizer, sq.top->mul(a, c))) product_inside = false;
    if (!product_inside)
      complain("h_prime * g_prime escapes the stabilizer");

    const bool st_glo = pt.stabilizer == glo_ids;
    const bool st_hhi = pt.stabilizer == hhi_ids;
    const bool st_top = (long)pt.stabilizer.size() == n;
    if (st_glo != (pt.g_prime == glo_ids && pt.h_prime == base_ids))
      complain("landing-spot law fails at g_lo");
    if (st_hhi != (pt.g_prime == base_ids && pt.h_prime == hhi_ids))
      complain("landing-spot law fails at h_hi");
    if (st_top != (pt.g_prime == glo_ids && pt.h_prime == hhi_ids))
      complain("landing-spot law fails at the top");

    if (central_base && pt.cls != BlockClass::StabilizerIsGroup)
      complain("central base must be stabilized by the whole group");

    if (pt.cls == BlockClass::StabilizerIsBase) {
      if (pt.h_grown != hhi_ids)
        complain("base-stabilizer block must grow inertia exactly h_hi");
      if (pt.g_grown != glo_ids)
        complain("base-stabilizer block must grow inertia exactly g_lo");
    }

    const bool mid = pt.cls == BlockClass::MidStabilizerMobile ||
                     pt.cls == BlockClass::MidStabilizerStable;
    if (mid && p != 0) {
      if (!quotient_is_p2_elementary())
        complain("mid stabilizer without an elementary p^2 quotient");
      bool witness = false;
      for (long x : pt.stabilizer)
        if (!member(hhi_ids, x) && !member(glo_ids, x)) witness = true;
      if (!witness)
        complain("stabilizer has no generator avoiding both chains");
      if (!noncentralizing_complement_exists() && !complement_noted) {
        report.notes.push_back(
            "no noncentralizing elementary complement of order p^2 splits "
            "the group over the base");
        complement_noted = true;
      }
      if ((long)base_ids.size() == p)
        complain("a base of prime order cannot carry a mid stabilizer");
      if (pt.cls == BlockClass::MidStabilizerMobile) {
        if (irrep_count_of_degree(sq.base.group, b.space.dim()) < p)
          complain("fewer than p base irreducibles of the block degree");
        const auto translates = coset_translates(sq, b.character);
        for (size_t i = 0; i < translates.size(); ++i)
          for (size_t j = i + 1; j < translates.size(); ++j)
            if (translates[i].values() == translates[j].values())
              complain("translates collide on a mobile block");
        if (matched_upper_module_count(sq, translates) < p)
          complain("fewer than p upper modules built from the translates");
        const long mult = generated_module_multiplicity(sq, b);
        if ((n / (long)pt.stabilizer.size()) * mult !=
            n / (long)base_ids.size())
          complain("index identity fails");
      }
    }
  }
  return report;
}

SquareReport verify_square(const ChainSquare& sq) {
  std::vector<std::pair<Representation, long>> components;
  for (const auto& r : character_table(sq.top).irreps)
    components.emplace_back(r, 1);
  auto omega =
      std::make_shared<LabeledModule>(sq.top, std::move(components));
  return verify_square(sq, block_constituents(sq, omega));
}

}  // namespace glrep
