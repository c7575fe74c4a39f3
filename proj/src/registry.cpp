#include "gliderrep/registry.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "gliderrep/error.hpp"

namespace glrep {

namespace {

long parse_suffix(const std::string& name, size_t prefix_len) {
  if (name.size() <= prefix_len) fail_usage("group name '" + name + "' lacks an order");
  long v = 0;
  for (size_t i = prefix_len; i < name.size(); ++i) {
    if (!isdigit((unsigned char)name[i]))
      fail_usage("unrecognized group name '" + name + "'");
    v = v * 10 + (name[i] - '0');
  }
  return v;
}

GroupPtr base_group(const std::string& name) {
  if (name == "V4") {
    auto g = direct_product(cyclic_group(2), cyclic_group(2));
    return FiniteGroup::unchecked(
        "V4", [&] {
          std::vector<long> t(16);
          for (long i = 0; i < 4; ++i)
            for (long j = 0; j < 4; ++j) t[i * 4 + j] = g->mul(i, j);
          return t;
        }(),
        {"e", "a", "b", "ab"});
  }
  if (name == "A4")
    return permutation_group(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}, "A4");
  if (name == "He3") return heisenberg_group(3);
  if (name == "SD16") return metacyclic_group(8, 2, 0, 3, "SD16");
  if (name == "SD32") return metacyclic_group(16, 2, 0, 7, "SD32");
  if (name == "M16") return metacyclic_group(8, 2, 0, 5, "M16");
  if (name == "M32") return metacyclic_group(16, 2, 0, 9, "M32");
  if (name == "M27") return metacyclic_group(9, 3, 0, 4, "M27");
  if (name == "C4sC4") return metacyclic_group(4, 4, 0, 3, "C4sC4");
  if (name.rfind("Dic", 0) == 0) {
    long n = parse_suffix(name, 3);
    if (n % 4 != 0) fail_usage("dicyclic order must be divisible by 4");
    return dicyclic_group(n / 4);
  }
  if (name[0] == 'Q' && name.size() > 1 && isdigit((unsigned char)name[1])) {
    long n = parse_suffix(name, 1);
    if (n % 4 != 0 || (n & (n - 1)) != 0 || n < 8)
      fail_usage("quaternion group order must be a power of two, at least 8");
    return dicyclic_group(n / 4);
  }
  if (name[0] == 'D' && name.size() > 1 && isdigit((unsigned char)name[1])) {
    long n = parse_suffix(name, 1);
    if (n % 2 != 0 || n < 2) fail_usage("dihedral order must be even");
    return dihedral_group(n / 2);
  }
  if (name[0] == 'C' && name.size() > 1 && isdigit((unsigned char)name[1]))
    return cyclic_group(parse_suffix(name, 1));
  fail_usage("unrecognized group name '" + name + "'");
}

}  // namespace

GroupPtr named_group(const std::string& name) {
  if (name.empty()) fail_usage("empty group name");
  GroupPtr acc;
  size_t start = 0;
  while (start <= name.size()) {
    size_t split = name.find('x', start);
    std::string part =
        name.substr(start, split == std::string::npos ? split : split - start);
    if (part.empty()) fail_usage("malformed product name '" + name + "'");
    GroupPtr g = base_group(part);
    acc = acc ? direct_product(acc, g) : g;
    if (split == std::string::npos) break;
    start = split + 1;
  }
  return acc;
}

const std::vector<std::string>& builtin_group_catalog() {
  static const std::vector<std::string> catalog = {
      // cyclic
      "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12",
      "C13", "C14", "C15", "C16", "C27", "C32", "C64",
      // abelian 2-groups as products
      "V4", "C4xC2", "C2xC2xC2", "C8xC2", "C4xC4", "C4xC2xC2", "C2xC2xC2xC2",
      "C16xC2", "C8xC4", "C8xC2xC2", "C4xC4xC2", "C4xC2xC2xC2",
      "C2xC2xC2xC2xC2",
      // abelian 3-groups
      "C3xC3", "C9xC3", "C3xC3xC3",
      // nonabelian 2-groups
      "D8", "Q8", "D16", "Q16", "SD16", "M16", "C4sC4", "D8xC2", "Q8xC2",
      "D32", "Q32", "SD32", "M32", "D16xC2", "Q16xC2", "SD16xC2", "M16xC2",
      "D8xC4", "Q8xC4", "C4sC4xC2", "D8xC2xC2", "Q8xC2xC2",
      // nonabelian 3-groups
      "He3", "M27",
      // mixed-order
      "D6", "D10", "D12", "Dic12", "A4", "C2xC6", "C6xC3", "Q8xC3", "D8xC3",
      "C4xC3", "He3xC2",
  };
  return catalog;
}

std::vector<GroupPtr> builtin_groups(long max_order) {
  std::vector<GroupPtr> out;
  for (const auto& name : builtin_group_catalog()) {
    GroupPtr g = named_group(name);
    if (g->order() <= max_order) out.push_back(std::move(g));
  }
  return out;
}

std::vector<GroupPtr> builtin_p_groups(long p, long max_order) {
  std::vector<GroupPtr> out;
  for (auto& g : builtin_groups(max_order)) {
    long n = g->order();
    while (n % p == 0) n /= p;
    if (n == 1 && g->order() > 1) out.push_back(std::move(g));
  }
  return out;
}

NormalChain named_chain(const std::string& shorthand) {
  NormalChain chain;
  if (shorthand == "q8i" || shorthand == "q8j") {
    chain.group = named_group("Q8");
    chain.levels = {{0},
                    {0, 2},
                    shorthand == "q8i" ? std::vector<long>{0, 1, 2, 3}
                                       : std::vector<long>{0, 2, 4, 6},
                    {0, 1, 2, 3, 4, 5, 6, 7}};
  } else if (shorthand == "d8v4" || shorthand == "d8c4") {
    chain.group = named_group("D8");
    chain.levels = {{0},
                    {0, 2},
                    shorthand == "d8v4" ? std::vector<long>{0, 2, 4, 6}
                                        : std::vector<long>{0, 1, 2, 3},
                    {0, 1, 2, 3, 4, 5, 6, 7}};
  } else if (shorthand == "c4") {
    chain.group = named_group("C4");
    chain.levels = {{0}, {0, 2}, {0, 1, 2, 3}};
  } else {
    fail_usage("unknown chain shorthand '" + shorthand + "'");
  }
  return make_chain(chain.group, std::move(chain.levels));
}

}  // namespace glrep
