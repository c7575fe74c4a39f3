// Command line front end; all algebra goes through the C boundary in
// gliderrep_c.h so the binary doubles as a smoke test of the shared library.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gliderrep_c.h"

namespace {

using nlohmann::ordered_json;

// Owning wrapper for strings handed out by the library.
struct OwnedStr {
  char* p = nullptr;
  ~OwnedStr() { gr_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct OwnedGroup {
  gr_group* p = nullptr;
  ~OwnedGroup() { gr_group_free(p); }
};

struct OwnedChain {
  gr_chain* p = nullptr;
  ~OwnedChain() { gr_chain_free(p); }
};

int exit_code_for(gr_status st) { return st == GR_ERROR_USAGE ? 2 : 1; }

// Structured error on the error stream, exit code 1 (domain/unsupported)
// or 2 (usage).
int report_error(gr_status st) {
  static const char* kinds[] = {"ok", "domain", "usage", "unsupported",
                                "internal"};
  ordered_json j;
  j["error"] = {{"kind", kinds[st <= 4 ? st : 4]},
                {"message", gr_last_error()}};
  std::cerr << j.dump() << "\n";
  return exit_code_for(st);
}

int write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    ordered_json j;
    j["error"] = {{"kind", "usage"}, {"message", "cannot write " + path}};
    std::cerr << j.dump() << "\n";
    return 2;
  }
  return 0;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  if (!in && !in.eof()) return "";
  return buf.str();
}

// "cyclic:6" and friends are sugar over the registry names.
std::string expand_make_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) return spec;
  const std::string kind = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  long n = 0;
  try {
    n = std::stol(arg);
  } catch (const std::exception&) {
    return spec;
  }
  if (kind == "cyclic") return "C" + std::to_string(n);
  if (kind == "dihedral") return "D" + std::to_string(2 * n);
  if (kind == "dicyclic") return "Dic" + std::to_string(4 * n);
  if (kind == "heisenberg") return "He" + std::to_string(n);
  return spec;
}

// Group from --group (registry name) or --group-file (JSON table).
gr_status open_group(const std::string& name, const std::string& file,
                     OwnedGroup& out) {
  if (!file.empty()) {
    const std::string text = read_file(file);
    if (text.empty()) {
      return gr_group_from_json("", &out.p);  // surfaces a usage error
    }
    return gr_group_from_json(text.c_str(), &out.p);
  }
  return gr_group_named(expand_make_spec(name).c_str(), &out.p);
}

gr_status open_chain(const std::string& group, const std::string& group_file,
                     const std::string& spec, OwnedChain& out) {
  OwnedGroup g;
  if (!group.empty() || !group_file.empty()) {
    if (gr_status st = open_group(group, group_file, g)) return st;
  }
  std::string text = spec;
  if (!spec.empty() && spec[0] == '@') text = read_file(spec.substr(1));
  return gr_chain_parse(g.p, text.c_str(), &out.p);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact glider representation kernel over finite group "
               "algebra filtrations"};
  app.require_subcommand(1);

  long max_order = 64;
  if (const char* env = std::getenv("GLIDERREP_MAX_ORDER")) {
    try {
      max_order = std::stol(env);
    } catch (const std::exception&) {
    }
  }
  unsigned long seed = 0;
  bool timing = false;
  std::string out_path;
  app.add_option("--max-order", max_order,
                 "order cap for built-in sweeps (env GLIDERREP_MAX_ORDER)");
  app.add_option("--seed", seed, "seed for the generic-vector generator");
  app.add_flag("--timing", timing, "include runtime_ms in reports");
  app.add_option("--out", out_path, "output path (default stdout)");

  std::string arg_group, arg_group_file, arg_chain, arg_chain_b;
  std::string arg_make, arg_save, arg_format = "text";
  bool arg_print = false, arg_list = false;

  CLI::App* c_group = app.add_subcommand("group", "build or load a group table");
  c_group->add_option("--make", arg_make,
                      "registry name or cyclic:n / dihedral:n / dicyclic:n / "
                      "heisenberg:p");
  c_group->add_option("--load", arg_group_file, "group table JSON file");
  c_group->add_option("--save", arg_save, "write the table JSON here");
  c_group->add_flag("--print", arg_print, "print the table JSON");
  c_group->add_flag("--list", arg_list, "list registry names under the cap");

  CLI::App* c_chars = app.add_subcommand("chars", "exact character table CSV");
  c_chars->add_option("--group", arg_group, "registry name");
  c_chars->add_option("--group-file", arg_group_file, "group table JSON file");

  CLI::App* c_hasse =
      app.add_subcommand("hasse", "restriction diagram of a chain");
  c_hasse->add_option("--group", arg_group, "registry name");
  c_hasse->add_option("--group-file", arg_group_file, "group table JSON file");
  c_hasse->add_option("--chain", arg_chain, "chain spec")->required();
  c_hasse->add_option("--format", arg_format, "dot|json")->default_str("dot");

  std::string arg_ambient, arg_gen, arg_filter;
  CLI::App* c_glider = app.add_subcommand("glider", "glider operations");
  c_glider->require_subcommand(1);
  CLI::App* c_build = c_glider->add_subcommand("build", "build one glider");
  c_build->add_option("--group", arg_group, "registry name");
  c_build->add_option("--group-file", arg_group_file, "group table JSON file");
  c_build->add_option("--chain", arg_chain, "chain spec")->required();
  c_build->add_option("--ambient", arg_ambient,
                      "irreducible indices, each optionally :mult")
      ->required();
  c_build->add_option("--gen", arg_gen, "generator coordinates")->required();

  CLI::App* c_gentable = app.add_subcommand(
      "gentable", "generalized character tables of the enumerated gliders");
  c_gentable->add_option("--group", arg_group, "registry name");
  c_gentable->add_option("--group-file", arg_group_file, "group JSON file");
  c_gentable->add_option("--chain", arg_chain, "chain spec")->required();
  c_gentable->add_option("--filter", arg_filter,
                         "keep dimension vector (comma list)");

  std::string arg_group_b, arg_group_file_b;
  CLI::App* c_dist = app.add_subcommand(
      "distinguish", "compare the glider character data of two chains");
  c_dist->add_option("--group-a", arg_group, "registry name for chain A");
  c_dist->add_option("--group-file-a", arg_group_file, "group file for A");
  c_dist->add_option("--chain-a", arg_chain, "chain spec A")->required();
  c_dist->add_option("--group-b", arg_group_b, "registry name for chain B");
  c_dist->add_option("--group-file-b", arg_group_file_b, "group file for B");
  c_dist->add_option("--chain-b", arg_chain_b, "chain spec B")->required();
  c_dist->add_option("--format", arg_format, "text|json")->default_str("text");

  std::string arg_square, arg_block;
  CLI::App* c_clifford =
      app.add_subcommand("clifford", "chain square inertia analysis");
  c_clifford->require_subcommand(1);
  CLI::App* c_pentad = c_clifford->add_subcommand(
      "pentad", "five inertia subgroups of one building block");
  c_pentad->add_option("--group", arg_group, "registry name")->required();
  c_pentad->add_option("--square", arg_square, "upper levels 'ids|ids'")
      ->required();
  c_pentad->add_option("--block", arg_block, "component:index")->required();
  CLI::App* c_sq_verify = c_clifford->add_subcommand(
      "verify", "landing-spot laws over built-in squares");
  c_sq_verify->add_option("--square", arg_square,
                          "check one square 'ids|ids' of --group instead");
  c_sq_verify->add_option("--group", arg_group, "registry name");

  std::string arg_cells, arg_p_chain, arg_q_chain, arg_p_group, arg_q_group;
  CLI::App* c_nil =
      app.add_subcommand("nilpotent", "coprime product decomposability");
  c_nil->require_subcommand(1);
  CLI::App* c_triple =
      c_nil->add_subcommand("triple", "triple counts of one product glider");
  c_triple->add_option("--group", arg_group, "product name like C2xC3")
      ->required();
  c_triple->add_option("--cells", arg_cells,
                       "components g:h or g:h:mult, comma separated")
      ->required();
  c_triple->add_option("--gen", arg_gen, "generator coordinates")->required();
  c_triple->add_option("--p-chain", arg_p_chain, "left factor chain spec");
  c_triple->add_option("--q-chain", arg_q_chain, "right factor chain spec");
  CLI::App* c_nil_verify = c_nil->add_subcommand(
      "verify", "decomposability counting suite over one factor pair");
  c_nil_verify->add_option("--p-group", arg_p_group, "left factor")->required();
  c_nil_verify->add_option("--q-group", arg_q_group, "right factor")
      ->required();

  std::string arg_suite;
  CLI::App* c_verify = app.add_subcommand("verify", "run a verification suite");
  c_verify->add_option("--suite", arg_suite, "suite name, or 'all'")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << e.what() << "\n";
    return 2;
  }

  gr_status st = GR_OK;
  std::string output;

  if (*c_group) {
    if (arg_list) {
      OwnedStr s;
      if ((st = gr_group_catalog(max_order, &s.p))) return report_error(st);
      output = s.str() + "\n";
    } else if (!arg_make.empty() || !arg_group_file.empty()) {
      OwnedGroup g;
      if ((st = open_group(arg_make, arg_group_file, g)))
        return report_error(st);
      OwnedStr s;
      if ((st = gr_group_to_json(g.p, &s.p))) return report_error(st);
      if (!arg_save.empty()) {
        if (int rc = write_output(s.str(), arg_save)) return rc;
        if (arg_print) output = s.str();
      } else {
        output = s.str();  // nothing else to do with it
      }
    } else {
      std::cerr << "group needs --make, --load or --list\n";
      return 2;
    }
  } else if (*c_chars) {
    OwnedGroup g;
    if ((st = open_group(arg_group, arg_group_file, g)))
      return report_error(st);
    OwnedStr s;
    if ((st = gr_character_table_csv(g.p, &s.p))) return report_error(st);
    output = s.str();
  } else if (*c_hasse) {
    OwnedChain chain;
    if ((st = open_chain(arg_group, arg_group_file, arg_chain, chain)))
      return report_error(st);
    OwnedStr s;
    st = arg_format == "json" ? gr_hasse_json(chain.p, &s.p)
                              : gr_hasse_dot(chain.p, &s.p);
    if (st) return report_error(st);
    output = s.str();
  } else if (*c_glider) {
    OwnedChain chain;
    if ((st = open_chain(arg_group, arg_group_file, arg_chain, chain)))
      return report_error(st);
    OwnedStr s;
    if ((st = gr_glider_build_json(chain.p, arg_ambient.c_str(),
                                   arg_gen.c_str(), &s.p)))
      return report_error(st);
    output = s.str();
  } else if (*c_gentable) {
    OwnedChain chain;
    if ((st = open_chain(arg_group, arg_group_file, arg_chain, chain)))
      return report_error(st);
    OwnedStr s;
    if ((st = gr_glider_table_csv(chain.p, arg_filter.c_str(), &s.p)))
      return report_error(st);
    output = s.str();
  } else if (*c_dist) {
    OwnedChain a, b;
    if ((st = open_chain(arg_group, arg_group_file, arg_chain, a)))
      return report_error(st);
    if ((st = open_chain(arg_group_b, arg_group_file_b, arg_chain_b, b)))
      return report_error(st);
    OwnedStr s;
    if ((st = gr_distinguish(a.p, b.p, &s.p))) return report_error(st);
    if (arg_format == "json") {
      output = s.str();
    } else {
      ordered_json j = ordered_json::parse(s.str());
      std::ostringstream text;
      text << j["detail"].get<std::string>() << "\n";
      if (j["distinguishable"].get<bool>())
        text << "witness value " << j["witness"].get<std::string>()
             << " of multiplicative order " << j["witness_order"] << "\n";
      output = text.str();
    }
  } else if (*c_clifford) {
    OwnedGroup g;
    if (*c_pentad) {
      if ((st = open_group(arg_group, "", g))) return report_error(st);
      OwnedStr s;
      if ((st = gr_pentad_json(g.p, arg_square.c_str(), arg_block.c_str(),
                               &s.p)))
        return report_error(st);
      output = s.str();
    } else if (!arg_square.empty()) {
      if ((st = open_group(arg_group, "", g))) return report_error(st);
      OwnedStr s;
      if ((st = gr_square_verify_json(g.p, arg_square.c_str(), &s.p)))
        return report_error(st);
      output = s.str();
    } else {
      OwnedStr s;
      if ((st = gr_run_suite("chain-squares", max_order, seed, timing, &s.p)))
        return report_error(st);
      output = s.str();
    }
  } else if (*c_nil) {
    OwnedStr s;
    if (*c_triple) {
      ordered_json spec;
      auto cells = ordered_json::array();
      std::istringstream in(arg_cells);
      std::string tok;
      while (std::getline(in, tok, ',')) {
        auto cell = ordered_json::array();
        std::istringstream fields(tok);
        std::string f;
        while (std::getline(fields, f, ':')) {
          try {
            cell.push_back(std::stol(f));
          } catch (const std::exception&) {
            std::cerr << "bad cell field '" << f << "'\n";
            return 2;
          }
        }
        cells.push_back(std::move(cell));
      }
      spec["cells"] = std::move(cells);
      auto gen = ordered_json::array();
      std::istringstream gin(arg_gen);
      while (std::getline(gin, tok, ',')) gen.push_back(tok);
      spec["gen"] = std::move(gen);
      if (!arg_p_chain.empty()) spec["p_chain"] = arg_p_chain;
      if (!arg_q_chain.empty()) spec["q_chain"] = arg_q_chain;
      if ((st = gr_product_triple_json(arg_group.c_str(), spec.dump().c_str(),
                                       &s.p)))
        return report_error(st);
    } else {
      if ((st = gr_product_suite_json(arg_p_group.c_str(), arg_q_group.c_str(),
                                      &s.p)))
        return report_error(st);
    }
    output = s.str();
  } else if (*c_verify) {
    if (arg_suite == "all") {
      OwnedStr names;
      if ((st = gr_suite_names(&names.p))) return report_error(st);
      ordered_json all = ordered_json::array();
      for (const auto& name : ordered_json::parse(names.str())) {
        OwnedStr s;
        if ((st = gr_run_suite(name.get<std::string>().c_str(), max_order,
                               seed, timing, &s.p)))
          return report_error(st);
        all.push_back(ordered_json::parse(s.str()));
      }
      output = all.dump(2) + "\n";
    } else {
      OwnedStr s;
      if ((st = gr_run_suite(arg_suite.c_str(), max_order, seed, timing,
                             &s.p)))
        return report_error(st);
      output = s.str();
    }
  }

  return write_output(output, out_path);
}
