#include "geodetic/io.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include <json.hpp>

#include "geodetic/generators.hpp"
#include "geodetic/solver_ditree.hpp"
#include "geodetic/solver_exact.hpp"
#include "geodetic/solver_fen.hpp"

namespace geodetic {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("malformed JSON document");
  return doc;
}

void reject_unknown_fields(const json& doc,
                           const std::vector<std::string>& known) {
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw ParseError("unknown field \"" + key + "\"");
    }
  }
}

int require_int(const json& doc, const std::string& field) {
  if (!doc.contains(field)) throw ParseError("missing field \"" + field + "\"");
  if (!doc[field].is_number_integer()) {
    throw ParseError("field \"" + field + "\" must be an integer");
  }
  return doc[field].get<int>();
}

}  // namespace

Digraph parse_digraph(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("top level must be an object");
  reject_unknown_fields(doc, {"n", "arcs"});
  const int n = require_int(doc, "n");
  if (!doc.contains("arcs") || !doc["arcs"].is_array()) {
    throw ParseError("field \"arcs\" must be an array");
  }
  std::vector<Arc> arcs;
  std::size_t index = 0;
  for (const auto& entry : doc["arcs"]) {
    if (!entry.is_array() || entry.size() != 2 ||
        !entry[0].is_number_integer() || !entry[1].is_number_integer()) {
      throw ParseError("arcs[" + std::to_string(index) +
                       "] must be a [tail, head] integer pair");
    }
    arcs.push_back({entry[0].get<int>(), entry[1].get<int>()});
    ++index;
  }
  try {
    return Digraph(n, std::move(arcs));
  } catch (const GraphError& e) {
    throw ParseError(e.what());
  }
}

std::string serialize_digraph(const Digraph& d) {
  std::vector<Arc> arcs = d.arcs();
  std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) {
    return std::pair(x.tail, x.head) < std::pair(y.tail, y.head);
  });
  json doc;
  doc["n"] = d.vertex_count();
  auto& list = doc["arcs"] = json::array();
  for (const Arc& a : arcs) list.push_back(json::array({a.tail, a.head}));
  return doc.dump();
}

ThreeDMInstance parse_3dm(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("top level must be an object");
  reject_unknown_fields(doc, {"n", "triples"});
  ThreeDMInstance inst;
  inst.n = require_int(doc, "n");
  if (!doc.contains("triples") || !doc["triples"].is_array()) {
    throw ParseError("field \"triples\" must be an array");
  }
  std::size_t index = 0;
  for (const auto& entry : doc["triples"]) {
    if (!entry.is_array() || entry.size() != 3 ||
        !entry[0].is_number_integer() || !entry[1].is_number_integer() ||
        !entry[2].is_number_integer()) {
      throw ParseError("triples[" + std::to_string(index) +
                       "] must be an [i, j, k] integer triple");
    }
    inst.triples.push_back(
        {entry[0].get<int>(), entry[1].get<int>(), entry[2].get<int>()});
    ++index;
  }
  try {
    validate_instance(inst);
  } catch (const GraphError& e) {
    throw ParseError(e.what());
  }
  return inst;
}

std::string serialize_3dm(const ThreeDMInstance& inst) {
  json doc;
  doc["n"] = inst.n;
  auto& list = doc["triples"] = json::array();
  for (const auto& t : inst.triples) {
    list.push_back(json::array({t[0], t[1], t[2]}));
  }
  return doc.dump();
}

std::string export_dot(const Digraph& d,
                       const std::vector<std::string>* labels) {
  std::ostringstream out;
  out << "digraph G {\n";
  if (labels != nullptr) {
    for (int v = 0; v < d.vertex_count(); ++v) {
      std::string text = v < static_cast<int>(labels->size())
                             ? (*labels)[static_cast<std::size_t>(v)]
                             : std::to_string(v);
      std::string escaped;
      for (char ch : text) {
        if (ch == '"' || ch == '\\') escaped.push_back('\\');
        escaped.push_back(ch);
      }
      out << "  " << v << " [label=\"" << escaped << "\"];\n";
    }
  }
  std::vector<Arc> arcs = d.arcs();
  std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) {
    return std::pair(x.tail, x.head) < std::pair(y.tail, y.head);
  });
  for (const Arc& a : arcs) {
    out << "  " << a.tail << " -> " << a.head << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string serialize_reduction_labels(const ReductionOutput& out) {
  json doc;
  doc["k"] = out.k;
  doc["lambda"] = out.lambda;
  doc["n"] = out.digraph.vertex_count();
  auto& list = doc["labels"] = json::array();
  for (std::size_t v = 0; v < out.labels.size(); ++v) {
    list.push_back(json::array({static_cast<int>(v), out.labels[v]}));
  }
  return doc.dump();
}

std::optional<Algorithm> algorithm_from_name(const std::string& name) {
  if (name == "auto") return Algorithm::automatic;
  if (name == "exact") return Algorithm::exact;
  if (name == "ditree") return Algorithm::ditree;
  if (name == "fen") return Algorithm::fen;
  return std::nullopt;
}

namespace {

SolveResult solve_one_component(const Digraph& sub, Algorithm algo,
                                std::optional<int> cap,
                                const SolveOptions& options) {
  Algorithm chosen = algo;
  if (algo == Algorithm::automatic) {
    if (is_underlying_tree(sub)) {
      chosen = Algorithm::ditree;
    } else if (!sub.find_two_cycle()) {
      chosen = Algorithm::fen;
    } else {
      chosen = Algorithm::exact;
    }
  }
  switch (chosen) {
    case Algorithm::ditree:
      return solve_ditree(sub);
    case Algorithm::fen:
      return solve_fen(sub, options);
    default:
      return solve_exact(sub, cap, options);
  }
}

}  // namespace

SolveResult solve_dispatch(const Digraph& d, Algorithm algo,
                           std::optional<int> size_cap,
                           const SolveOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::vector<int>> comps = underlying_components(d);

  SolveResult total;
  total.algorithm = algo;
  total.size_cap = size_cap;
  total.verified = true;

  // A component's geodetic number is at least its extremal count (and at
  // least 2 on two or more vertices); the cap handed to one component is
  // reduced by what the others are guaranteed to consume.
  std::vector<int> lower_bound(comps.size(), 0);
  int lb_sum = 0;
  if (size_cap) {
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const Digraph sub = induced_subgraph(d, comps[i]);
      const int ext = extremal_vertices(sub).size();
      lower_bound[i] = std::max(ext, comps[i].size() >= 2 ? 2 : 1);
      lb_sum += lower_bound[i];
    }
    if (lb_sum > *size_cap) {
      total.cap_exceeded = true;
      total.verified = false;
      return total;
    }
  }

  std::vector<int> witness;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const Digraph sub = induced_subgraph(d, comps[i]);
    std::optional<int> comp_cap;
    if (size_cap) comp_cap = *size_cap - (lb_sum - lower_bound[i]);
    const SolveResult r = solve_one_component(sub, algo, comp_cap, options);
    total.stats.absorb(r.stats);
    if (r.cap_exceeded) {
      total.cap_exceeded = true;
      total.verified = false;
      return total;
    }
    for (int local : r.witness) {
      witness.push_back(comps[i][static_cast<std::size_t>(local)]);
    }
    total.verified = total.verified && r.verified;
  }
  total.witness = VertexSet(std::move(witness));
  total.size = total.witness.size();
  if (size_cap && total.size > *size_cap) {
    total.cap_exceeded = true;
    total.verified = false;
    total.witness = VertexSet{};
    total.size = 0;
  }
  total.stats.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return total;
}

std::vector<BenchRecord> run_bench(const std::string& spec_text,
                                   const SolveOptions& options) {
  const json doc = parse_json(spec_text);
  if (!doc.is_object() || !doc.contains("runs") || !doc["runs"].is_array()) {
    throw ParseError("bench spec must be {\"runs\": [...]}");
  }
  std::vector<BenchRecord> records;
  for (const auto& run : doc["runs"]) {
    if (!run.is_object()) throw ParseError("each run must be an object");
    reject_unknown_fields(run,
                          {"kind", "n", "m", "fen", "p2", "seeds", "algos"});
    GenSpec spec;
    const std::string kind = run.value("kind", std::string());
    if (kind == "ditree") {
      spec.kind = GenKind::ditree;
    } else if (kind == "oriented_tree") {
      spec.kind = GenKind::oriented_tree;
    } else if (kind == "oriented_fen") {
      spec.kind = GenKind::oriented_fen;
    } else if (kind == "dag") {
      spec.kind = GenKind::dag;
    } else {
      throw ParseError("unknown bench kind \"" + kind + "\"");
    }
    spec.n = require_int(run, "n");
    if (run.contains("m")) spec.m = require_int(run, "m");
    if (run.contains("fen")) spec.fen = require_int(run, "fen");
    if (run.contains("p2")) spec.p2 = run["p2"].get<double>();
    if (!run.contains("seeds") || !run["seeds"].is_array() ||
        !run.contains("algos") || !run["algos"].is_array()) {
      throw ParseError("run needs \"seeds\" and \"algos\" arrays");
    }
    for (const auto& seed_entry : run["seeds"]) {
      spec.seed = seed_entry.get<std::uint64_t>();
      const Digraph d = generate_digraph(spec);
      const int fen = [&] {
        const UndirectedGraph g = underlying_graph(d);
        return static_cast<int>(g.edges.size()) - g.n +
               static_cast<int>(underlying_components(d).size());
      }();
      for (const auto& algo_entry : run["algos"]) {
        const std::string algo_name = algo_entry.get<std::string>();
        const auto algo = algorithm_from_name(algo_name);
        if (!algo) throw ParseError("unknown algorithm \"" + algo_name + "\"");
        const SolveResult r = solve_dispatch(d, *algo, std::nullopt, options);
        BenchRecord rec;
        rec.instance_id =
            kind + "-n" + std::to_string(spec.n) + "-s" + std::to_string(spec.seed);
        rec.kind = kind;
        rec.n = d.vertex_count();
        rec.arcs = d.arc_count();
        rec.fen = fen;
        rec.seed = spec.seed;
        rec.algorithm = algo_name;
        rec.size = r.size;
        rec.elapsed_seconds = r.stats.elapsed_seconds;
        rec.cover_checks = r.stats.cover_checks;
        rec.subsets_examined = r.stats.subsets_examined;
        records.push_back(std::move(rec));
      }
    }
  }
  return records;
}

std::string bench_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << "instance_id,kind,n,arcs,fen,seed,algorithm,size,elapsed_seconds,"
         "cover_checks,subsets_examined\n";
  for (const BenchRecord& r : records) {
    out << r.instance_id << ',' << r.kind << ',' << r.n << ',' << r.arcs << ','
        << r.fen << ',' << r.seed << ',' << r.algorithm << ',' << r.size << ','
        << r.elapsed_seconds << ',' << r.cover_checks << ','
        << r.subsets_examined << '\n';
  }
  return out.str();
}

}  // namespace geodetic
