#include "geodetic/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "geodetic/decomposition.hpp"
#include "geodetic/generators.hpp"
#include "geodetic/io.hpp"
#include "geodetic/metric.hpp"
#include "geodetic/reduction_3dm.hpp"

namespace geodetic {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw GraphError("cannot write " + path);
  out << content;
}

std::vector<int> parse_id_list(const std::string& text) {
  std::vector<int> ids;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    const int value = std::stoi(item, &pos);
    if (pos != item.size()) throw GraphError("bad vertex id \"" + item + "\"");
    ids.push_back(value);
  }
  return ids;
}

std::string join_ids(const std::vector<int>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(ids[i]);
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"geodetic set solver toolkit"};
  app.require_subcommand(1);

  std::string input, output, labels_path, set_text, algo_name = "auto",
                                                    spec_path, kind;
  int cap = -1;
  int threads = 1;
  bool with_witness = false;
  int gen_n = 1, gen_m = 0, gen_fen = 0;
  double gen_p2 = 0.0;
  bool unplanted = false;
  std::uint64_t seed = 0;

  CLI::App* solve = app.add_subcommand("solve", "compute a minimum geodetic set");
  solve->add_option("--input", input, "digraph JSON file")->required();
  solve->add_option("--algo", algo_name, "auto|exact|ditree|fen");
  solve->add_option("--cap", cap, "report cap-exceeded beyond this size");
  solve->add_flag("--witness", with_witness, "print the witness ids");
  solve->add_option("--threads", threads, "enumeration workers");

  CLI::App* verify = app.add_subcommand("verify", "test whether a set is geodetic");
  verify->add_option("--input", input, "digraph JSON file")->required();
  verify->add_option("--set", set_text, "comma-separated vertex ids")->required();

  CLI::App* reduce = app.add_subcommand(
      "reduce3dm", "build the hard digraph of a matching instance");
  reduce->add_option("--input", input, "3DM JSON file")->required();
  reduce->add_option("--out", output, "digraph JSON output")->required();
  reduce->add_option("--labels", labels_path, "role-label sidecar output");

  CLI::App* gen = app.add_subcommand("gen", "generate a seeded instance");
  gen->add_option("kind", kind, "ditree|oriented-tree|oriented-fen|dag|3dm")
      ->required();
  gen->add_option("--n", gen_n, "size parameter")->required();
  gen->add_option("--m", gen_m, "triple count (3dm, dag)");
  gen->add_option("--fen", gen_fen, "feedback edge number (oriented-fen)");
  gen->add_option("--p2", gen_p2, "2-cycle probability (ditree)");
  gen->add_flag("--unplanted", unplanted, "skip the planted matching (3dm)");
  gen->add_option("--seed", seed, "64-bit seed")->required();
  gen->add_option("--out", output, "output file")->required();

  CLI::App* stats = app.add_subcommand("stats", "decomposition summary");
  stats->add_option("--input", input, "digraph JSON file")->required();

  CLI::App* bench = app.add_subcommand("bench", "run a generator x algorithm matrix");
  bench->add_option("--spec", spec_path, "bench spec JSON")->required();
  bench->add_option("--out", output, "CSV output")->required();
  bench->add_option("--threads", threads, "enumeration workers");

  std::vector<const char*> argv;
  argv.push_back("geodetic");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (solve->parsed()) {
      const auto algo = algorithm_from_name(algo_name);
      if (!algo) throw GraphError("unknown algorithm \"" + algo_name + "\"");
      const Digraph d = parse_digraph(read_file(input));
      std::optional<int> size_cap;
      if (solve->count("--cap") > 0) size_cap = cap;
      const SolveResult r = solve_dispatch(d, *algo, size_cap, {threads});
      if (r.cap_exceeded) {
        out << "cap-exceeded " << *size_cap << "\n";
        return 0;
      }
      out << "size " << r.size << "\n";
      if (with_witness) out << "witness " << join_ids(r.witness.elements()) << "\n";
      return 0;
    }

    if (verify->parsed()) {
      const Digraph d = parse_digraph(read_file(input));
      const VertexSet s(parse_id_list(set_text));
      for (int v : s) {
        if (v < 0 || v >= d.vertex_count()) {
          throw IndexOutOfRangeError(v, d.vertex_count());
        }
      }
      if (is_geodetic(d, s)) {
        out << "geodetic\n";
        return 0;
      }
      out << "not-geodetic\n";
      return 2;
    }

    if (reduce->parsed()) {
      const ThreeDMInstance inst = parse_3dm(read_file(input));
      const ReductionOutput r = reduce_3dm(inst);
      out << "k " << r.k << "\n";
      out << "lambda " << r.lambda << "\n";
      out << "vertices " << r.digraph.vertex_count() << "\n";
      out << "arcs " << r.digraph.arc_count() << "\n";
      write_file(output, serialize_digraph(r.digraph));
      if (!labels_path.empty()) {
        write_file(labels_path, serialize_reduction_labels(r));
      }
      return 0;
    }

    if (gen->parsed()) {
      if (kind == "3dm") {
        const ThreeDMInstance inst = gen_3dm(gen_n, gen_m, !unplanted, seed);
        write_file(output, serialize_3dm(inst));
        out << "generated 3dm n=" << gen_n << " m=" << gen_m << "\n";
        return 0;
      }
      GenSpec spec;
      if (kind == "ditree") {
        spec.kind = GenKind::ditree;
      } else if (kind == "oriented-tree") {
        spec.kind = GenKind::oriented_tree;
      } else if (kind == "oriented-fen") {
        spec.kind = GenKind::oriented_fen;
      } else if (kind == "dag") {
        spec.kind = GenKind::dag;
      } else {
        throw GraphError("unknown kind \"" + kind + "\"");
      }
      spec.n = gen_n;
      spec.m = gen_m;
      spec.fen = gen_fen;
      spec.p2 = gen_p2;
      spec.seed = seed;
      const Digraph d = generate_digraph(spec);
      write_file(output, serialize_digraph(d));
      out << "generated " << kind << " n=" << d.vertex_count()
          << " arcs=" << d.arc_count() << "\n";
      return 0;
    }

    if (stats->parsed()) {
      const Digraph d = parse_digraph(read_file(input));
      const Decomposition dec = decompose(d);
      int by_class[4] = {0, 0, 0, 0};
      for (const CorePath& p : dec.core_paths) {
        ++by_class[static_cast<int>(p.cls)];
      }
      out << "n " << d.vertex_count() << "\n";
      out << "arcs " << d.arc_count() << "\n";
      out << "components " << dec.fen_per_component.size() << "\n";
      out << "fen_total " << dec.fen_total << "\n";
      out << "core_vertices " << dec.core_vertices.size() << "\n";
      out << "core_paths " << dec.core_paths.size()
          << " dipath=" << by_class[0] << " one_extremal=" << by_class[1]
          << " two_extremals=" << by_class[2]
          << " many_extremals=" << by_class[3] << "\n";
      out << "hanging_trees " << dec.hanging_trees.size() << "\n";
      out << "bare_cycles " << dec.bare_cycle_components.size() << "\n";
      if (d.find_two_cycle()) {
        out << "candidates n/a (2-cycle present)\n";
      } else {
        out << "candidates " << extract_candidates(d, dec).size() << "\n";
      }
      return 0;
    }

    if (bench->parsed()) {
      const auto records = run_bench(read_file(spec_path), {threads});
      write_file(output, bench_csv(records));
      out << "wrote " << records.size() << " records\n";
      return 0;
    }
  } catch (const GraphError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand\n";
  return 1;
}

}  // namespace geodetic
