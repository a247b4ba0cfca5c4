#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "rep12/base.hpp"
#include "rep12/graph.hpp"
#include "rep12/grid.hpp"
#include "rep12/io.hpp"
#include "rep12/models.hpp"
#include "rep12/oracle.hpp"
#include "rep12/patterns.hpp"
#include "rep12/recognition.hpp"
#include "rep12/word.hpp"

namespace rep12::cli {

namespace detail {

inline PatternWord parse_pattern_word(const std::string& s) {
  PatternWord u;
  for (char c : s) {
    if (c != '1' && c != '2')
      throw InvalidInput("pattern word must consist of the digits 1 and 2");
    u.push_back(c - '0');
  }
  check_pattern_word(u);
  return u;
}

inline PatternFamily family_by_name(const std::string& name) {
  if (name == "i3j4q4") return i3j4q4_patterns();
  if (name == "j4q4") return j4q4_patterns();
  throw InvalidInput("unknown pattern family: " + name);
}

// Vertex positions for each label name in an ordering string like "2 1 3".
inline Labeling parse_ordering(const std::string& text, const LabeledGraph& g) {
  std::istringstream ss(text);
  int n = g.graph.n();
  std::vector<int> vertex_of(n + 1, -1);
  for (int v = 0; v < n; ++v) vertex_of[g.labels[v]] = v;
  std::vector<int> order;
  std::string token;
  while (ss >> token) {
    int name = 0;
    try {
      std::size_t used = 0;
      name = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw InvalidInput("ordering: expected a vertex label, got '" + token + "'");
    }
    if (name < 1 || name > n || vertex_of[name] < 0)
      throw InvalidInput("ordering: unknown vertex label " + token);
    order.push_back(vertex_of[name]);
  }
  if (static_cast<int>(order.size()) != n)
    throw InvalidInput("ordering: must list every vertex exactly once");
  return labeling_from_order(order);
}

inline std::string format_point(const std::pair<int, int>& p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

inline void print_witness(std::ostream& out, const Witness& w,
                          const std::vector<int>* names,
                          const GridGraph* grid) {
  out << "witness: " << w.kind;
  if (!w.detail.empty()) out << " (" << w.detail << ")";
  if (!w.vertices.empty()) {
    out << ":";
    for (int v : w.vertices) {
      out << " ";
      if (grid)
        out << format_point(grid->cells[v]);
      else
        out << (*names)[v];
    }
  }
  out << "\n";
}

inline void emit_model(const Certificate& cert, const std::vector<int>& names,
                       const std::string& path) {
  nlohmann::ordered_json j;
  if (std::holds_alternative<IntervalModel>(cert.model))
    j = io::interval_model_json(std::get<IntervalModel>(cert.model), names);
  else
    j = io::triangle_model_json(std::get<TriangleModel>(cert.model), names);
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write file: " + path);
  out << j.dump(2) << "\n";
}

inline int report_decision(std::ostream& out, const Decision& d,
                           const std::vector<int>& names,
                           const GridGraph* grid,
                           const std::string& emit_path) {
  if (!d.representable) {
    out << "NO\n";
    print_witness(out, *d.witness, &names, grid);
    return 1;
  }
  out << "YES\n";
  out << "labeling: " << io::format_labeling(names, d.certificate->labels)
      << "\n";
  out << "word: " << io::format_word(d.certificate->word) << "\n";
  if (!emit_path.empty()) emit_model(*d.certificate, names, emit_path);
  return 0;
}

}  // namespace detail

// Entry point shared by the binary and the tests.  Exit codes: 0 for a
// positive answer, 1 for a negative answer (a witness is printed), 2 for
// usage or input errors.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"12-representability toolkit"};
  app.require_subcommand(1);

  std::string graph_path, word_path, model_path, emit_path, ordering_text;
  std::string u_text = "12", family_name, suite_name;
  bool x_first = false, bipartite = false, grid_mode = false, tree_mode = false;
  int max_n = -1;

  CLI::App* verify = app.add_subcommand(
      "verify", "Check that a word 12-represents a labeled graph");
  verify->add_option("--graph", graph_path, "graph file")->required();
  verify->add_option("--word", word_path, "word file")->required();
  verify->add_option("--u", u_text, "pattern word over {1,2}");

  CLI::App* match = app.add_subcommand(
      "match", "Find the first factor of a word matching a pattern word");
  match->add_option("--word", word_path, "word file")->required();
  match->add_option("--u", u_text, "pattern word over {1,2}");

  CLI::App* search = app.add_subcommand(
      "label-search", "Search for a pattern-free labeling of a graph");
  search->add_option("--graph", graph_path, "graph file")->required();
  search->add_option("--family", family_name, "forbidden family")
      ->required()
      ->check(CLI::IsMember({"i3j4q4", "j4q4"}));
  search->add_flag("--x-first", x_first,
                   "require class-X endpoints of edges to come first");

  CLI::App* model_check = app.add_subcommand(
      "model-check", "Validate a geometric model against a graph");
  model_check->add_option("--graph", graph_path, "graph file")->required();
  model_check->add_option("--model", model_path, "model JSON file")->required();

  CLI::App* convert = app.add_subcommand(
      "convert", "Read a word and labeling off a geometric model");
  convert->add_option("--model", model_path, "model JSON file")->required();

  CLI::App* build = app.add_subcommand(
      "build-model", "Realize a vertex ordering as a geometric model");
  build->add_option("--graph", graph_path, "graph file")->required();
  build->add_option("--ordering", ordering_text, "vertex labels in order")
      ->required();
  build->add_flag("--bipartite", bipartite,
                  "build an interval containment model instead of a "
                  "simple-triangle model of the complement");

  CLI::App* recognize = app.add_subcommand(
      "recognize", "Decide 12-representability and emit a certificate");
  recognize->add_option("--graph", graph_path, "graph or grid file")
      ->required();
  auto* f_bip = recognize->add_flag("--bipartite", bipartite,
                                    "use the interval containment route");
  auto* f_grid = recognize->add_flag("--grid", grid_mode,
                                     "treat the input as a grid point file");
  auto* f_tree = recognize->add_flag("--tree", tree_mode,
                                     "use the tree characterization");
  f_bip->excludes(f_grid)->excludes(f_tree);
  f_grid->excludes(f_tree);
  recognize->add_option("--emit-model", emit_path,
                        "write the certificate model to this JSON file");

  CLI::App* oracle = app.add_subcommand(
      "oracle", "Run brute-force agreement suites");
  oracle->add_option("--suite", suite_name, "agreement suite")
      ->required()
      ->check(CLI::IsMember({"small", "bipartite", "trees", "grid"}));
  oracle->add_option("--max-n", max_n, "override the suite size bound");

  std::vector<const char*> argv;
  argv.push_back("rep12");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      LabeledGraph g = io::read_graph_file(graph_path);
      Word w = io::read_word_file(word_path);
      auto bad = find_represent_violation(w, g, detail::parse_pattern_word(u_text));
      if (!bad) {
        out << "YES\n";
        return 0;
      }
      out << "NO " << bad->first << " " << bad->second << "\n";
      return 1;
    }

    if (match->parsed()) {
      Word w = io::read_word_file(word_path);
      auto at = find_match(w, detail::parse_pattern_word(u_text));
      if (at) {
        out << "MATCH " << *at + 1 << "\n";
        return 0;
      }
      out << "NONE\n";
      return 1;
    }

    if (search->parsed()) {
      LabeledGraph g = io::read_graph_file(graph_path);
      PatternFamily family = detail::family_by_name(family_name);
      std::optional<std::vector<int>> cls;
      if (x_first) {
        cls = bipartition(g.graph);
        if (!cls) throw InvalidInput("graph is not bipartite");
      }
      auto sigma = find_pattern_free_ordering(g.graph, family,
                                              cls ? &*cls : nullptr, x_first);
      if (!sigma) {
        out << "NONE\n";
        return 1;
      }
      out << io::format_labeling(g.labels, *sigma) << "\n";
      return 0;
    }

    if (model_check->parsed()) {
      LabeledGraph g = io::read_graph_file(graph_path);
      io::ParsedModel pm = io::read_model_file(model_path);
      int n = g.graph.n();
      if (static_cast<int>(pm.keys.size()) != n ||
          pm.keys != identity_labeling(n))
        throw InvalidInput("model keys do not match the graph's labels");
      std::optional<std::pair<int, int>> bad;
      if (std::holds_alternative<IntervalModel>(pm.model)) {
        const auto& parsed = std::get<IntervalModel>(pm.model);
        IntervalModel m;
        m.lo.resize(n);
        m.hi.resize(n);
        m.cls.resize(n);
        for (int v = 0; v < n; ++v) {
          int at = g.labels[v] - 1;  // keys are 1..n in ascending order
          m.lo[v] = parsed.lo[at];
          m.hi[v] = parsed.hi[at];
          m.cls[v] = parsed.cls[at];
        }
        bad = validate_icb(g.graph, m);
      } else {
        const auto& parsed = std::get<TriangleModel>(pm.model);
        TriangleModel m;
        m.apex.resize(n);
        m.lo.resize(n);
        m.hi.resize(n);
        for (int v = 0; v < n; ++v) {
          int at = g.labels[v] - 1;
          m.apex[v] = parsed.apex[at];
          m.lo[v] = parsed.lo[at];
          m.hi[v] = parsed.hi[at];
        }
        bad = validate_triangle(g.graph, m);
      }
      if (!bad) {
        out << "VALID\n";
        return 0;
      }
      out << "INVALID " << g.labels[bad->first] << " " << g.labels[bad->second]
          << "\n";
      return 1;
    }

    if (convert->parsed()) {
      io::ParsedModel pm = io::read_model_file(model_path);
      Representant rep;
      if (std::holds_alternative<IntervalModel>(pm.model))
        rep = icb_to_representant(std::get<IntervalModel>(pm.model));
      else
        rep = triangle_to_representant(std::get<TriangleModel>(pm.model));
      out << "labeling: " << io::format_labeling(pm.keys, rep.labels) << "\n";
      out << "word: " << io::format_word(rep.word) << "\n";
      return 0;
    }

    if (build->parsed()) {
      LabeledGraph g = io::read_graph_file(graph_path);
      Labeling sigma = detail::parse_ordering(ordering_text, g);
      try {
        nlohmann::ordered_json j;
        if (bipartite) {
          auto cls = bipartition(g.graph);
          if (!cls) throw InvalidInput("graph is not bipartite");
          IntervalModel m = ordering_to_icb_model(g.graph, *cls, sigma);
          j = io::interval_model_json(m, g.labels);
        } else {
          TriangleModel m = ordering_to_triangle_model(g.graph, sigma);
          j = io::triangle_model_json(m, g.labels);
        }
        out << j.dump(2) << "\n";
        return 0;
      } catch (const OrderingNotPatternFree&) {
        out << "NONE: ordering not pattern-free\n";
        return 1;
      }
    }

    if (recognize->parsed()) {
      if (grid_mode) {
        GridGraph gg = io::read_grid_file(graph_path);
        Decision d = grid_12_representable(gg);
        return detail::report_decision(out, d, identity_labeling(gg.graph.n()),
                                       &gg, emit_path);
      }
      LabeledGraph g = io::read_graph_file(graph_path);
      Decision d = tree_mode     ? tree_12_representable(g.graph)
                   : bipartite   ? is_12_representable_bipartite(g.graph)
                                 : is_12_representable(g.graph);
      return detail::report_decision(out, d, g.labels, nullptr, emit_path);
    }

    if (oracle->parsed()) {
      auto results = cross_validate(suite_name, max_n);
      bool ok = true;
      std::string first;
      for (const auto& r : results) {
        out << r.name << ": cases=" << r.cases << " failures=" << r.failures
            << "\n";
        if (r.failures > 0 && first.empty()) first = r.first_failure;
        ok = ok && r.failures == 0;
      }
      if (!ok) {
        out << "FAIL: " << first << "\n";
        return 1;
      }
      out << "OK\n";
      return 0;
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace rep12::cli
