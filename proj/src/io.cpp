#include "gliderrep/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "json.hpp"

#include "gliderrep/error.hpp"
#include "gliderrep/glider.hpp"
#include "gliderrep/registry.hpp"
#include "gliderrep/rep.hpp"

namespace glrep {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<long> parse_ids(const std::string& text) {
  std::vector<long> ids;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    std::istringstream words(tok);
    std::string w;
    while (words >> w) {
      size_t used = 0;
      long id = 0;
      try {
        id = std::stol(w, &used);
      } catch (const std::exception&) {
        fail_usage("bad element id '" + w + "' in chain spec");
      }
      if (used != w.size()) fail_usage("bad element id '" + w + "' in chain spec");
      ids.push_back(id);
    }
  }
  return ids;
}

}  // namespace

std::string group_to_json(const GroupPtr& g) {
  ordered_json j;
  j["name"] = g->name();
  j["order"] = g->order();
  auto table = ordered_json::array();
  for (long a = 0; a < g->order(); ++a) {
    auto row = ordered_json::array();
    for (long b = 0; b < g->order(); ++b) row.push_back(g->mul(a, b));
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  auto names = ordered_json::array();
  for (long a = 0; a < g->order(); ++a) names.push_back(g->element_name(a));
  j["elements"] = std::move(names);
  return j.dump(2) + "\n";
}

GroupPtr group_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    fail_usage(std::string("group file is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("name") || !j.contains("order") ||
      !j.contains("table"))
    fail_usage("group file needs the fields name, order and table");
  std::string name = j["name"].get<std::string>();
  long n = j["order"].get<long>();
  const auto& rows = j["table"];
  if (!rows.is_array() || (long)rows.size() != n)
    fail_usage("group table must have one row per element");
  std::vector<long> table;
  table.reserve(n * n);
  for (const auto& row : rows) {
    if (!row.is_array() || (long)row.size() != n)
      fail_usage("group table rows must have one id per element");
    for (const auto& v : row) table.push_back(v.get<long>());
  }
  std::vector<std::string> names;
  if (j.contains("elements")) {
    for (const auto& v : j["elements"]) names.push_back(v.get<std::string>());
    if ((long)names.size() != n)
      fail_usage("element name list does not match the order");
  }
  return FiniteGroup::from_table(name, std::move(table), std::move(names));
}

std::string chain_to_json(const NormalChain& chain) {
  ordered_json j = ordered_json::array();
  for (const auto& level : chain.levels) j.push_back(level);
  return j.dump() + "\n";
}

NormalChain chain_from_json(const GroupPtr& g, const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    fail_usage(std::string("chain file is not valid JSON: ") + e.what());
  }
  if (!j.is_array()) fail_usage("chain file must be an array of id arrays");
  std::vector<std::vector<long>> levels;
  for (const auto& level : j) {
    if (!level.is_array()) fail_usage("chain levels must be id arrays");
    levels.push_back(level.get<std::vector<long>>());
  }
  return make_chain(g, std::move(levels));
}

NormalChain parse_chain_spec(const std::optional<GroupPtr>& g,
                             const std::string& spec) {
  if (spec.empty()) fail_usage("empty chain spec");
  if (spec[0] == '[') {
    if (!g) fail_usage("a JSON chain spec needs a group");
    return chain_from_json(*g, spec);
  }
  bool generator_form = spec.find(';') != std::string::npos;
  if (!generator_form)
    generator_form = spec.find_first_not_of("0123456789, ") == std::string::npos;
  if (generator_form) {
    if (!g) fail_usage("a generator chain spec needs a group");
    std::vector<std::vector<long>> levels;
    std::string part;
    std::istringstream in(spec);
    while (std::getline(in, part, ';')) {
      std::vector<long> ids = parse_ids(part);
      for (long id : ids)
        if (id < 0 || id >= (*g)->order())
          fail_usage("element id " + std::to_string(id) +
                     " outside the group in chain spec");
      levels.push_back(closure(**g, std::move(ids)));
    }
    if (levels.empty()) fail_usage("empty chain spec");
    if (levels.front().size() != 1) levels.insert(levels.begin(), {0});
    if ((long)levels.back().size() != (*g)->order()) {
      std::vector<long> full((*g)->order());
      for (long i = 0; i < (*g)->order(); ++i) full[i] = i;
      levels.push_back(std::move(full));
    }
    return make_chain(*g, std::move(levels));
  }
  NormalChain chain = named_chain(spec);
  if (g && (*g)->name() != chain.group->name())
    fail_usage("chain '" + spec + "' belongs to " + chain.group->name() +
               ", not " + (*g)->name());
  return chain;
}

std::string character_table_csv(const GroupPtr& g) {
  const CharacterTable& table = character_table(g);
  const auto& classes = g->conjugacy_classes();
  std::ostringstream out;
  out << "label,degree";
  for (const auto& cls : classes) out << ',' << csv_field(g->element_name(cls[0]));
  out << "\nsize,";
  for (const auto& cls : classes) out << ',' << cls.size();
  out << '\n';
  for (const auto& rep : table.irreps) {
    out << csv_field(rep.label()) << ',' << rep.degree();
    for (size_t c = 0; c < classes.size(); ++c)
      out << ',' << csv_field(rep.character().at_class((long)c).str());
    out << '\n';
  }
  return out.str();
}

std::string glider_table_csv(const NormalChain& chain,
                             const std::optional<std::vector<long>>& dim_filter) {
  std::vector<Glider> gliders = enumerate_gliders(chain, dim_filter);
  const long d = chain.length();
  const auto& classes = chain.group->conjugacy_classes();
  std::ostringstream out;
  out << "glider,dimension_vector,element,layer";
  for (long r = 0; r <= d; ++r)
    for (long c = 0; c <= r; ++c) out << ",t_" << r << '_' << c;
  out << '\n';
  for (size_t gi = 0; gi < gliders.size(); ++gi) {
    const GeneralizedCharacter& chi = gliders[gi].character();
    std::ostringstream dims;
    const std::vector<long> dv = gliders[gi].dimension_vector();
    for (size_t k = 0; k < dv.size(); ++k) dims << (k ? " " : "") << dv[k];
    for (const auto& cls : classes) {
      const long e = cls[0];
      out << gi << ',' << csv_field(dims.str()) << ','
          << csv_field(chain.group->element_name(e)) << ',' << chi.layer(e);
      CycMatrix m = chi.matrix(e);
      for (long r = 0; r <= d; ++r)
        for (long c = 0; c <= r; ++c) out << ',' << csv_field(m.at(r, c).str());
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace glrep
