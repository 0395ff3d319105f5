#pragma once

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cdg/cdg.hpp"

namespace cdg::cli {

enum ExitCode : int { kOk = 0, kVerdictFail = 1, kUsage = 2 };

struct InputOptions {
  std::string graph;  // inline graph6 (or edge list)
  std::string file;
  std::size_t max_vertices = 1024;
};

inline void add_input_options(CLI::App* cmd, InputOptions& in) {
  auto* g = cmd->add_option("-g,--graph", in.graph, "inline graph6 string");
  auto* f = cmd->add_option("-f,--file", in.file, "graph6 or edge-list file (default: standard input)");
  g->excludes(f);
  cmd->add_option("--max-n", in.max_vertices, "largest vertex count accepted from input")
      ->capture_default_str();
}

inline Graph read_graph(const InputOptions& opts, std::istream& in) {
  std::string text;
  if (!opts.graph.empty()) {
    text = opts.graph;
  } else if (!opts.file.empty()) {
    std::ifstream file(opts.file, std::ios::binary);
    if (!file) throw InputError("cannot read " + opts.file);
    text.assign(std::istreambuf_iterator<char>(file), {});
  } else {
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return decode_graph_auto(text, opts.max_vertices);
}

inline EulerianMode parse_mode(const std::string& s) {
  return s == "even-only" ? EulerianMode::even_only : EulerianMode::standard;
}

inline void emit_graph(std::ostream& out, const Graph& g, const std::string& format) {
  if (format == "edgelist") {
    out << encode_edge_list(g);
  } else {
    out << encode_graph6(g) << "\n";
  }
}

// Parses `args` (without the program name) and runs one subcommand. Output
// goes to `out`, diagnostics to `err`. Returns 0 on success, 1 when `check`
// finds the graph not admissible, 2 on usage or input errors.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Necessary-condition checks and constructions for character degree graphs of solvable groups",
               "cdg"};
  app.require_subcommand(1, 1);

  InputOptions input;
  std::string format = "text";
  std::string eulerian = "standard";
  const auto text_formats = CLI::IsMember({"text", "json"});
  const auto graph_formats = CLI::IsMember({"graph6", "edgelist"});
  const auto eulerian_modes = CLI::IsMember({"standard", "even-only"});

  auto* check = app.add_subcommand("check", "run the necessary-condition battery on one graph");
  add_input_options(check, input);
  check->add_option("--format", format, "text or json")->check(text_formats);
  check->add_option("--eulerian", eulerian, "standard or even-only")->check(eulerian_modes);

  auto* lewis = app.add_subcommand("lewis", "diameter-3 partition report");
  add_input_options(lewis, input);
  lewis->add_option("--format", format, "text or json")->check(text_formats);
  lewis->add_option("--eulerian", eulerian, "standard or even-only")->check(eulerian_modes);

  std::string kind;
  std::size_t n = 0;
  std::string left;
  std::string right;
  std::string graph_format = "graph6";
  auto* construct = app.add_subcommand("construct", "build a complete graph, the six-vertex seed, or a direct product");
  construct->add_option("kind", kind, "complete | seed | product")
      ->required()
      ->check(CLI::IsMember({"complete", "seed", "product"}));
  construct->add_option("--n", n, "order of the complete graph");
  construct->add_option("--left", left, "left factor (graph6 or edge list)");
  construct->add_option("--right", right, "right factor (graph6 or edge list)");
  construct->add_option("--format,--emit", graph_format, "graph6 or edgelist")->check(graph_formats);

  auto* family = app.add_subcommand("family", "odd-degree non-regular family member on n vertices");
  family->add_option("--n", n, "even vertex count >= 6")->required();
  family->add_option("--format,--emit", graph_format, "graph6 or edgelist")->check(graph_formats);

  std::string filter = "none";
  std::string emit;
  bool summary = false;
  unsigned threads = 1;
  auto* enumerate = app.add_subcommand("enumerate", "exhaustive non-isomorphic graphs on n <= 9 vertices");
  enumerate->add_option("--n", n, "vertex count")->required();
  enumerate->add_option("--filter", filter, "none, admissible, or all-odd (admissible with all degrees odd)")
      ->check(CLI::IsMember({"none", "admissible", "all-odd"}));
  enumerate->add_option("--emit", emit, "graph6, edgelist, or json")
      ->check(CLI::IsMember({"graph6", "edgelist", "json"}));
  enumerate->add_flag("--summary", summary, "print the verification summary as JSON");
  enumerate->add_option("--threads", threads, "worker threads")->check(CLI::Range(1U, 256U));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (check->parsed()) {
      const Graph g = read_graph(input, in);
      const auto report = run_battery(g);
      const auto mode = parse_mode(eulerian);
      if (format == "json") {
        out << report::check_json(g, report, mode).dump(2) << "\n";
      } else {
        out << report::check_text(g, report, mode);
      }
      return report.admissible() ? kOk : kVerdictFail;
    }
    if (lewis->parsed()) {
      const Graph g = read_graph(input, in);
      const auto mode = parse_mode(eulerian);
      if (format == "json") {
        out << report::lewis_json(g, mode).dump(2) << "\n";
      } else if (auto a = analyze_lewis(g, mode)) {
        out << report::lewis_text(*a);
      } else {
        out << "not applicable: graph is not connected with diameter exactly 3\n";
      }
      return kOk;
    }
    if (construct->parsed()) {
      Graph g;
      if (kind == "complete") {
        g = complete_graph(n);
      } else if (kind == "seed") {
        g = seed_graph();
      } else {
        if (left.empty() || right.empty()) throw InputError("product needs --left and --right");
        g = direct_product(decode_graph_auto(left), decode_graph_auto(right));
      }
      emit_graph(out, g, graph_format);
      return kOk;
    }
    if (family->parsed()) {
      emit_graph(out, odd_family(FamilySpec(n)), graph_format);
      return kOk;
    }
    if (enumerate->parsed()) {
      if (emit.empty() && !summary) emit = "graph6";
      if (!emit.empty()) {
        for (const auto& g : enumerate_nonisomorphic(n, threads)) {
          const bool admissible = run_battery(g).admissible();
          const bool odd = all_degrees_odd(g);
          if (filter == "admissible" && !admissible) continue;
          if (filter == "all-odd" && !(admissible && odd)) continue;
          if (emit == "json") {
            out << report::Json{{"graph", encode_graph6(g)}, {"admissible", admissible}, {"all_odd", odd}}.dump()
                << "\n";
          } else {
            emit_graph(out, g, emit);
          }
        }
      }
      if (summary) out << report::to_json(verify_odd_degree_results(n, threads)).dump(2) << "\n";
      return kOk;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace cdg::cli
