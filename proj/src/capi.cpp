#include "gliderrep_c.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <sstream>
#include <string>

#include "json.hpp"

#include "gliderrep/clifford.hpp"
#include "gliderrep/error.hpp"
#include "gliderrep/glider.hpp"
#include "gliderrep/hasse.hpp"
#include "gliderrep/io.hpp"
#include "gliderrep/nilpotent.hpp"
#include "gliderrep/registry.hpp"
#include "gliderrep/suites.hpp"

using nlohmann::ordered_json;

struct gr_group {
  glrep::GroupPtr g;
};

struct gr_chain {
  glrep::NormalChain chain;
};

namespace {

thread_local std::string t_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
gr_status guarded(F&& body) {
  try {
    body();
    return GR_OK;
  } catch (const glrep::Error& e) {
    t_last_error = e.what();
    switch (e.kind()) {
      case glrep::ErrorKind::Domain:
        return GR_ERROR_DOMAIN;
      case glrep::ErrorKind::Usage:
        return GR_ERROR_USAGE;
      case glrep::ErrorKind::Unsupported:
        return GR_ERROR_UNSUPPORTED;
    }
    return GR_ERROR_INTERNAL;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return GR_ERROR_INTERNAL;
  }
}

gr_status require(bool ok, const char* what) {
  if (ok) return GR_OK;
  t_last_error = what;
  return GR_ERROR_USAGE;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string tok;
  std::istringstream in(s);
  while (std::getline(in, tok, sep)) out.push_back(tok);
  return out;
}

std::string trimmed(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

glrep::CycNumber parse_scalar(const std::string& token) {
  std::string t = trimmed(token);
  if (t.empty()) glrep::fail_usage("empty scalar in generator spec");
  if (t.find('z') != std::string::npos || t.find("(N=") != std::string::npos)
    return glrep::CycNumber::parse(t);
  return glrep::CycNumber(glrep::rat_parse(t));
}

glrep::CycVector parse_generator(const std::string& spec) {
  glrep::CycVector v;
  for (const std::string& tok : split(spec, ',')) v.push_back(parse_scalar(tok));
  if (v.empty()) glrep::fail_usage("empty generator spec");
  return v;
}

long parse_long(const std::string& text, const char* what) {
  std::string t = trimmed(text);
  size_t used = 0;
  long value = 0;
  try {
    value = std::stol(t, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != t.size() || t.empty())
    glrep::fail_usage(std::string("bad ") + what + " '" + t + "'");
  return value;
}

std::vector<std::pair<glrep::Representation, long>> parse_ambient(
    const glrep::GroupPtr& g, const std::string& spec) {
  const auto& irreps = glrep::character_table(g).irreps;
  std::vector<std::pair<glrep::Representation, long>> parts;
  for (const std::string& tok : split(spec, ',')) {
    std::string t = trimmed(tok);
    if (t.empty()) continue;
    long mult = 1;
    if (auto colon = t.find(':'); colon != std::string::npos) {
      mult = parse_long(t.substr(colon + 1), "multiplicity");
      t = trimmed(t.substr(0, colon));
    }
    const long idx = parse_long(t, "irreducible index");
    if (idx < 0 || idx >= (long)irreps.size())
      glrep::fail_usage("irreducible index " + std::to_string(idx) +
                        " outside the table of " + g->name());
    parts.emplace_back(irreps[idx], mult);
  }
  if (parts.empty()) glrep::fail_usage("empty ambient spec");
  return parts;
}

std::vector<long> parse_level_ids(const glrep::GroupPtr& g,
                                  const std::string& text) {
  std::vector<long> ids;
  for (const std::string& tok : split(text, ',')) {
    std::istringstream words(tok);
    std::string w;
    while (words >> w) {
      long id = parse_long(w, "element id");
      if (id < 0 || id >= g->order())
        glrep::fail_usage("element id " + std::to_string(id) +
                          " outside the group");
      ids.push_back(id);
    }
  }
  return glrep::closure(*g, std::move(ids));
}

glrep::ChainSquare parse_square(const glrep::GroupPtr& g,
                                const std::string& spec) {
  auto parts = split(spec, '|');
  if (parts.size() != 2)
    glrep::fail_usage("square spec must be two levels joined by '|'");
  return glrep::make_square(g, parse_level_ids(g, parts[0]),
                            parse_level_ids(g, parts[1]));
}

ordered_json report_json(const glrep::SuiteReport& r, bool with_timing) {
  ordered_json j;
  j["suite"] = r.suite;
  j["instances_checked"] = r.instances_checked;
  j["violations"] = r.violations;
  j["notes"] = r.notes;
  if (with_timing) j["runtime_ms"] = r.runtime_ms;
  return j;
}

}  // namespace

extern "C" {

const char* gr_last_error(void) { return t_last_error.c_str(); }

void gr_string_free(char* s) { std::free(s); }

gr_status gr_group_named(const char* name, gr_group** out) {
  if (gr_status s = require(name && out, "gr_group_named needs name and out"))
    return s;
  return guarded([&] { *out = new gr_group{glrep::named_group(name)}; });
}

gr_status gr_group_from_json(const char* json, gr_group** out) {
  if (gr_status s =
          require(json && out, "gr_group_from_json needs json and out"))
    return s;
  return guarded([&] { *out = new gr_group{glrep::group_from_json(json)}; });
}

gr_status gr_group_to_json(const gr_group* g, char** out) {
  if (gr_status s = require(g && out, "gr_group_to_json needs a group and out"))
    return s;
  return guarded([&] { *out = dup_string(glrep::group_to_json(g->g)); });
}

long gr_group_order(const gr_group* g) { return g ? g->g->order() : 0; }

const char* gr_group_name(const gr_group* g) {
  return g ? g->g->name().c_str() : "";
}

void gr_group_free(gr_group* g) { delete g; }

gr_status gr_group_catalog(long max_order, char** out) {
  if (gr_status s = require(out != nullptr, "gr_group_catalog needs out"))
    return s;
  return guarded([&] {
    ordered_json names = ordered_json::array();
    for (const glrep::GroupPtr& g : glrep::builtin_groups(max_order))
      names.push_back(g->name());
    *out = dup_string(names.dump());
  });
}

gr_status gr_character_table_csv(const gr_group* g, char** out) {
  if (gr_status s =
          require(g && out, "gr_character_table_csv needs a group and out"))
    return s;
  return guarded([&] { *out = dup_string(glrep::character_table_csv(g->g)); });
}

gr_status gr_chain_parse(const gr_group* g, const char* spec, gr_chain** out) {
  if (gr_status s = require(spec && out, "gr_chain_parse needs spec and out"))
    return s;
  return guarded([&] {
    std::optional<glrep::GroupPtr> group;
    if (g) group = g->g;
    *out = new gr_chain{glrep::parse_chain_spec(group, spec)};
  });
}

gr_status gr_chain_to_json(const gr_chain* c, char** out) {
  if (gr_status s = require(c && out, "gr_chain_to_json needs a chain and out"))
    return s;
  return guarded([&] { *out = dup_string(glrep::chain_to_json(c->chain)); });
}

long gr_chain_length(const gr_chain* c) {
  return c ? c->chain.length() : 0;
}

void gr_chain_free(gr_chain* c) { delete c; }

gr_status gr_hasse_dot(const gr_chain* c, char** out) {
  if (gr_status s = require(c && out, "gr_hasse_dot needs a chain and out"))
    return s;
  return guarded(
      [&] { *out = dup_string(glrep::build_hasse(c->chain).to_dot()); });
}

gr_status gr_hasse_json(const gr_chain* c, char** out) {
  if (gr_status s = require(c && out, "gr_hasse_json needs a chain and out"))
    return s;
  return guarded([&] {
    glrep::ChainHasse h = glrep::build_hasse(c->chain);
    ordered_json j;
    j["group"] = c->chain.group->name();
    j["levels"] = c->chain.length() + 1;
    auto nodes = ordered_json::array();
    for (size_t i = 0; i < h.nodes.size(); ++i) {
      const auto& nd = h.nodes[i];
      nodes.push_back({{"label", nd.label},
                       {"level", nd.level},
                       {"degree", nd.degree},
                       {"component", h.component_of[i]}});
    }
    j["nodes"] = std::move(nodes);
    auto edges = ordered_json::array();
    for (const auto& e : h.edges)
      edges.push_back({{"upper", h.nodes[e.upper].label},
                       {"lower", h.nodes[e.lower].label},
                       {"multiplicity", e.multiplicity}});
    j["edges"] = std::move(edges);
    j["components"] = h.component_count;
    *out = dup_string(j.dump(2) + "\n");
  });
}

gr_status gr_glider_table_csv(const gr_chain* c, const char* dim_filter,
                              char** out) {
  if (gr_status s =
          require(c && out, "gr_glider_table_csv needs a chain and out"))
    return s;
  return guarded([&] {
    std::optional<std::vector<long>> filter;
    if (dim_filter && *dim_filter) {
      std::vector<long> dims;
      for (const std::string& tok : split(dim_filter, ','))
        dims.push_back(parse_long(tok, "dimension"));
      filter = std::move(dims);
    }
    *out = dup_string(glrep::glider_table_csv(c->chain, filter));
  });
}

gr_status gr_glider_build_json(const gr_chain* c, const char* ambient_spec,
                               const char* gen_spec, char** out) {
  if (gr_status s = require(c && ambient_spec && gen_spec && out,
                            "gr_glider_build_json needs chain, ambient, "
                            "generator and out"))
    return s;
  return guarded([&] {
    auto ambient = std::make_shared<glrep::LabeledModule>(
        c->chain.group, parse_ambient(c->chain.group, ambient_spec));
    glrep::Glider m =
        glrep::Glider::build(c->chain, ambient, parse_generator(gen_spec));
    ordered_json j;
    j["group"] = c->chain.group->name();
    auto comps = ordered_json::array();
    for (const auto& [rep, mult] : ambient->components())
      comps.push_back({{"label", rep.label()},
                       {"degree", rep.degree()},
                       {"multiplicity", mult}});
    j["ambient"] = std::move(comps);
    j["dimension_vector"] = m.dimension_vector();
    j["essential_length"] = m.essential_length();
    glrep::TailCheck direct = m.direct_irreducible();
    j["irreducible"] = direct.ok;
    if (!direct.ok) j["detail"] = direct.detail;
    j["anti_diagonal"] = m.anti_diagonal();
    auto table = ordered_json::array();
    const long d = m.length();
    for (const auto& cls : c->chain.group->conjugacy_classes()) {
      glrep::CycMatrix mat = m.character().matrix(cls[0]);
      auto rows = ordered_json::array();
      for (long rr = 0; rr <= d; ++rr) {
        auto row = ordered_json::array();
        for (long cc = 0; cc <= rr; ++cc) row.push_back(mat.at(rr, cc).str());
        rows.push_back(std::move(row));
      }
      table.push_back(
          {{"element", c->chain.group->element_name(cls[0])},
           {"layer", m.character().layer(cls[0])},
           {"traces", std::move(rows)}});
    }
    j["trace_table"] = std::move(table);
    *out = dup_string(j.dump(2) + "\n");
  });
}

gr_status gr_distinguish(const gr_chain* a, const gr_chain* b, char** out) {
  if (gr_status s =
          require(a && b && out, "gr_distinguish needs two chains and out"))
    return s;
  return guarded([&] {
    glrep::DistinguishReport rep =
        glrep::distinguish_chains(a->chain, b->chain);
    ordered_json j;
    j["chain_a"] = a->chain.group->name();
    j["chain_b"] = b->chain.group->name();
    j["distinguishable"] = rep.distinguishable;
    j["detail"] = rep.detail;
    j["witness"] = rep.witness;
    j["witness_order"] = rep.witness_order;
    *out = dup_string(j.dump(2) + "\n");
  });
}

gr_status gr_pentad_json(const gr_group* g, const char* square_spec,
                         const char* block_spec, char** out) {
  if (gr_status s = require(g && square_spec && block_spec && out,
                            "gr_pentad_json needs group, square, block, out"))
    return s;
  return guarded([&] {
    glrep::ChainSquare sq = parse_square(g->g, square_spec);
    auto parts = split(block_spec, ':');
    if (parts.size() != 2)
      glrep::fail_usage("block spec must be 'component:index'");
    const long comp = parse_long(parts[0], "irreducible index");
    const long index = parse_long(parts[1], "block index");
    const auto& irreps = glrep::character_table(g->g).irreps;
    if (comp < 0 || comp >= (long)irreps.size())
      glrep::fail_usage("irreducible index " + std::to_string(comp) +
                        " outside the table");
    auto ambient = std::make_shared<glrep::LabeledModule>(
        g->g, std::vector<std::pair<glrep::Representation, long>>{
                  {irreps[comp], 1}});
    std::vector<glrep::BuildingBlock> blocks =
        glrep::block_constituents(sq, ambient);
    if (index < 0 || index >= (long)blocks.size())
      glrep::fail_domain("component " + std::to_string(comp) + " has " +
                         std::to_string(blocks.size()) + " blocks");
    glrep::Pentad p = glrep::block_pentad(sq, blocks[index]);
    ordered_json j;
    j["group"] = g->g->name();
    j["component"] = irreps[comp].label();
    j["block"] = index;
    j["h_prime"] = p.h_prime;
    j["g_prime"] = p.g_prime;
    j["stabilizer"] = p.stabilizer;
    j["g_grown"] = p.g_grown;
    j["h_grown"] = p.h_grown;
    j["class"] = glrep::block_class_name(p.cls);
    *out = dup_string(j.dump(2) + "\n");
  });
}

gr_status gr_square_verify_json(const gr_group* g, const char* square_spec,
                                char** out) {
  if (gr_status s = require(g && square_spec && out,
                            "gr_square_verify_json needs group, square, out"))
    return s;
  return guarded([&] {
    glrep::SquareReport rep = glrep::verify_square(parse_square(g->g, square_spec));
    ordered_json j;
    j["group"] = g->g->name();
    j["blocks_checked"] = rep.blocks_checked;
    auto classes = ordered_json::array();
    for (auto c : rep.classes) classes.push_back(glrep::block_class_name(c));
    j["classes"] = std::move(classes);
    j["violations"] = rep.violations;
    j["notes"] = rep.notes;
    *out = dup_string(j.dump(2) + "\n");
  });
}

gr_status gr_product_triple_json(const char* product, const char* glider_json,
                                 char** out) {
  if (gr_status s = require(product && glider_json && out,
                            "gr_product_triple_json needs product, glider, out"))
    return s;
  return guarded([&] {
    glrep::GroupPtr gh = glrep::named_group(product);
    if (!gh->product_left() || !gh->product_right())
      glrep::fail_usage("'" + std::string(product) +
                        "' is not a direct product name");
    const glrep::GroupPtr g = gh->product_left();
    const glrep::GroupPtr h = gh->product_right();
    ordered_json spec;
    try {
      spec = ordered_json::parse(glider_json);
    } catch (const std::exception& e) {
      glrep::fail_usage(std::string("glider spec is not valid JSON: ") +
                        e.what());
    }
    if (!spec.is_object() || !spec.contains("cells") || !spec.contains("gen"))
      glrep::fail_usage("glider spec needs 'cells' and 'gen'");

    auto pick_chain = [&](const char* key, const glrep::GroupPtr& factor) {
      if (spec.contains(key))
        return glrep::parse_chain_spec(factor,
                                       spec[key].get<std::string>());
      return glrep::maximal_normal_chains(factor).front();
    };
    glrep::ProductChain pc = glrep::make_product_chain(
        gh, pick_chain("p_chain", g), pick_chain("q_chain", h));

    const auto& g_irreps = glrep::character_table(g).irreps;
    const auto& h_irreps = glrep::character_table(h).irreps;
    std::vector<std::tuple<glrep::Representation, glrep::Representation, long>>
        parts;
    for (const auto& cell : spec["cells"]) {
      if (!cell.is_array() || cell.size() < 2 || cell.size() > 3)
        glrep::fail_usage("cells must be [g_irrep, h_irrep] or "
                          "[g_irrep, h_irrep, mult]");
      const long gi = cell[0].get<long>(), hi = cell[1].get<long>();
      const long mult = cell.size() == 3 ? cell[2].get<long>() : 1;
      if (gi < 0 || gi >= (long)g_irreps.size() || hi < 0 ||
          hi >= (long)h_irreps.size())
        glrep::fail_usage("cell indices outside the factor tables");
      parts.emplace_back(g_irreps[gi], h_irreps[hi], mult);
    }
    auto ambient = glrep::product_module(gh, parts);
    glrep::CycVector gen;
    for (const auto& v : spec["gen"]) {
      if (v.is_string())
        gen.push_back(parse_scalar(v.get<std::string>()));
      else
        gen.push_back(glrep::CycNumber(v.get<long>()));
    }
    glrep::Glider m = glrep::Glider::build(pc.ladder, ambient, std::move(gen));

    glrep::TensorSplit ts = glrep::tensor_split(pc, m);
    ordered_json j;
    j["product"] = gh->name();
    j["components"] = ts.triple.components;
    j["g_classes"] = ts.triple.g_classes;
    j["h_classes"] = ts.triple.h_classes;
    j["decomposable"] = ts.decomposable;
    if (ts.decomposable) {
      j["g_part_components"] = (long)ts.g_part->ambient().components().size();
      j["h_part_components"] = (long)ts.h_part->ambient().components().size();
    }
    *out = dup_string(j.dump(2) + "\n");
  });
}

gr_status gr_product_suite_json(const char* p_name, const char* q_name,
                                char** out) {
  if (gr_status s = require(p_name && q_name && out,
                            "gr_product_suite_json needs two factors and out"))
    return s;
  return guarded([&] {
    glrep::ProductSuiteReport rep = glrep::product_glider_suite(
        glrep::named_group(p_name), glrep::named_group(q_name));
    ordered_json j;
    j["factors"] = std::string(p_name) + "x" + q_name;
    j["abelian"] = rep.abelian;
    j["chain_pairs"] = rep.chain_pairs;
    j["instances_checked"] = rep.instances_checked;
    j["skipped"] = rep.skipped;
    j["decomposable"] = rep.decomposable_count;
    j["violations"] = rep.violations;
    j["notes"] = rep.notes;
    *out = dup_string(j.dump(2) + "\n");
  });
}

gr_status gr_suite_names(char** out) {
  if (gr_status s = require(out != nullptr, "gr_suite_names needs out"))
    return s;
  return guarded([&] {
    ordered_json names = glrep::suite_names();
    *out = dup_string(names.dump());
  });
}

gr_status gr_run_suite(const char* suite, long max_order, unsigned long seed,
                       int with_timing, char** out) {
  if (gr_status s = require(suite && out, "gr_run_suite needs a suite and out"))
    return s;
  return guarded([&] {
    glrep::SuiteOptions opt;
    opt.max_order = max_order;
    opt.seed = seed;
    glrep::SuiteReport rep = glrep::run_suite(suite, opt);
    *out = dup_string(report_json(rep, with_timing != 0).dump(2) + "\n");
  });
}

}  // extern "C"
