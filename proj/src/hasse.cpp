#include "gliderrep/hasse.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gliderrep/error.hpp"

namespace glrep {

namespace {

std::string row_letter(long row) {
  static const char* letters = "VWXYZ";
  if (row <= 5) return std::string(1, letters[row - 1]);
  return "L" + std::to_string(row) + "_";
}

long find_root(std::vector<long>& up, long x) {
  while (up[x] != x) x = up[x] = up[up[x]];
  return x;
}

}  // namespace

ChainHasse build_hasse(const NormalChain& chain) {
  long d = chain.length();
  if (d < 1) fail_domain("chain has no nontrivial levels");
  ChainHasse out;
  out.chain = chain;

  long n = chain.group->order();
  // Row k displays chain level d-k; the trivial subgroup is not drawn.
  std::vector<GroupPtr> row_group(d);
  std::vector<std::vector<long>> from_top(d);  // whole-group id -> row id
  std::vector<SubgroupGroup> emb(d);           // emb[k]: row k inside row k-1
  row_group[0] = chain.group;
  from_top[0].resize(n);
  std::iota(from_top[0].begin(), from_top[0].end(), 0);
  for (long k = 1; k < d; ++k) {
    const auto& elems = chain.levels[d - k];
    std::vector<long> local;
    for (long e : elems) local.push_back(from_top[k - 1][e]);
    std::sort(local.begin(), local.end());
    emb[k] = subgroup_group(row_group[k - 1], local,
                            chain.group->name() + "_row" + std::to_string(k));
    row_group[k] = emb[k].group;
    from_top[k].assign(n, -1);
    for (long e : elems)
      from_top[k][e] = emb[k].from_parent[from_top[k - 1][e]];
  }

  std::vector<long> row_start(d);
  std::vector<std::vector<long>> display;  // row -> display pos -> table index
  for (long k = 0; k < d; ++k) {
    const CharacterTable& table = character_table(row_group[k]);
    long count = (long)table.irreps.size();
    row_start[k] = (long)out.nodes.size();
    std::vector<long> order(count);
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::string> labels(count);
    if (k == 0) {
      long linear = 0;
      while (linear < count && table.irreps[linear].degree() == 1) ++linear;
      for (long i = 0; i < count; ++i)
        labels[i] = i < linear ? "T" + std::to_string(i + 1)
                   : count - linear == 1
                       ? "U"
                       : "U" + std::to_string(i - linear + 1);
    } else {
      // Sort below the top row: strongest parent first, then parent
      // positions, then character values.
      const CharacterTable& upper = character_table(row_group[k - 1]);
      std::vector<std::vector<long>> mult(upper.irreps.size());
      for (size_t i = 0; i < upper.irreps.size(); ++i)
        mult[i] = restriction_multiplicities(upper.irreps[i], emb[k]);
      std::vector<long> max_deg(count, 0);
      std::vector<std::vector<long>> parents(count);
      const auto& prev = display.back();
      for (long p = 0; p < (long)prev.size(); ++p) {
        long i = prev[p];
        for (long j = 0; j < count; ++j)
          if (mult[i][j] > 0) {
            parents[j].push_back(p);
            max_deg[j] = std::max(max_deg[j], upper.irreps[i].degree());
          }
      }
      std::stable_sort(order.begin(), order.end(), [&](long a, long b) {
        if (max_deg[a] != max_deg[b]) return max_deg[a] > max_deg[b];
        if (parents[a] != parents[b]) return parents[a] < parents[b];
        return table.irreps[a].character().cmp(table.irreps[b].character()) <
               0;
      });
      if (count == 2) {
        labels[0] = "T";  // table puts the trivial character first
        labels[1] = "S";
      } else {
        for (long p = 0; p < count; ++p)
          labels[order[p]] = row_letter(k) + std::to_string(p + 1);
      }
      // Edges into this row, upper display order then lower display order.
      for (long p = 0; p < (long)prev.size(); ++p)
        for (long q = 0; q < count; ++q) {
          long m = mult[prev[p]][order[q]];
          if (m > 0)
            out.edges.push_back(
                {row_start[k - 1] + p, row_start[k] + q, m});
        }
    }
    for (long p = 0; p < count; ++p)
      out.nodes.push_back(
          {k, order[p], labels[order[p]], table.irreps[order[p]].degree()});
    display.push_back(std::move(order));
  }

  std::vector<long> up(out.nodes.size());
  std::iota(up.begin(), up.end(), 0);
  for (const auto& e : out.edges)
    up[find_root(up, e.upper)] = find_root(up, e.lower);
  out.component_of.assign(out.nodes.size(), -1);
  for (size_t v = 0; v < out.nodes.size(); ++v) {
    long r = find_root(up, (long)v);
    if (out.component_of[r] < 0) out.component_of[r] = out.component_count++;
    out.component_of[v] = out.component_of[r];
  }
  return out;
}

long ChainHasse::node_by_label(const std::string& label) const {
  for (size_t v = 0; v < nodes.size(); ++v)
    if (nodes[v].label == label) return (long)v;
  fail_usage("no node labelled '" + label + "'");
}

std::vector<std::string> ChainHasse::neighbor_labels(
    const std::string& label) const {
  long v = node_by_label(label);
  std::vector<std::string> out;
  for (const auto& e : edges) {
    if (e.upper == v) out.push_back(nodes[e.lower].label);
    if (e.lower == v) out.push_back(nodes[e.upper].label);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string ChainHasse::to_dot() const {
  std::ostringstream os;
  os << "graph hasse {\n  rankdir=TB;\n  node [shape=plaintext];\n";
  long rows = nodes.empty() ? 0 : nodes.back().level + 1;
  for (long k = 0; k < rows; ++k) {
    os << "  { rank=same;";
    for (const auto& nd : nodes)
      if (nd.level == k) os << " \"" << nd.label << "\";";
    os << " }\n";
  }
  for (const auto& e : edges) {
    os << "  \"" << nodes[e.upper].label << "\" -- \"" << nodes[e.lower].label
       << "\"";
    if (e.multiplicity > 1) os << " [label=\"" << e.multiplicity << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace glrep
