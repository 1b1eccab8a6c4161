#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kconn/bench.hpp"
#include "kconn/gen.hpp"
#include "kconn/io.hpp"
#include "kconn/oracles.hpp"
#include "kconn/solvers.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw kconn::input_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

kconn::GraphFile graph_from_digraph(const kconn::Digraph& g) {
  kconn::GraphFile f;
  f.n = g.vertex_count();
  f.directed = true;
  for (kconn::EdgeId e = 0; e < static_cast<kconn::EdgeId>(g.edge_slots()); ++e) {
    if (g.edge_alive(e)) f.edges.emplace_back(g.tail(e), g.head(e));
  }
  return f;
}

int run_solve(const std::string& file, const std::string& mode, int k, int delta,
              const std::string& algorithm, const std::string& format, bool stats,
              bool include_singletons) {
  kconn::GraphFile gf = kconn::parse_graph(read_file(file));
  kconn::SolveOptions opts;
  opts.include_singletons = include_singletons;
  opts.delta_override = delta;

  kconn::ComponentReport rep;
  if (algorithm == "fast") {
    if (mode == "2ecs") {
      rep = kconn::max_2ecs(kconn::to_digraph(gf), opts);
    } else if (mode == "2vcs") {
      rep = kconn::max_2vcs(kconn::to_digraph(gf), opts);
    } else if (mode == "kecs") {
      rep = kconn::max_kecs(kconn::to_digraph(gf), k, opts);
    } else if (mode == "kecs-undirected") {
      if (gf.directed) {
        throw kconn::input_error("kecs-undirected needs an undirected (u) graph file");
      }
      rep = kconn::max_kecs_undirected(gf.n, gf.edges, k, opts);
    } else {
      throw kconn::input_error("unknown mode: " + mode);
    }
  } else {
    kconn::Digraph g = kconn::to_digraph(gf);
    kconn::OracleReport orep;
    if (mode == "2ecs") {
      orep = kconn::baseline_2ecs(g);
    } else if (mode == "2vcs") {
      orep = kconn::baseline_2vcs(g);
    } else if (mode == "kecs" || mode == "kecs-undirected") {
      orep = kconn::baseline_kecs(g, k);
    } else {
      throw kconn::input_error("unknown mode: " + mode);
    }
    rep.components = std::move(orep.components);
    rep.mode = mode;
    rep.stats.m0 = g.edge_count();
    rep.stats.edges_scanned = orep.edge_scans;
  }
  std::cout << kconn::emit_report(
      rep, format == "json" ? kconn::ReportFormat::json : kconn::ReportFormat::text,
      stats);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maximal 2-edge-, 2-vertex-, and k-edge-connected subgraphs"};
  app.require_subcommand(0, 1);

  std::string mode = "2ecs", algorithm = "fast", format = "text", file;
  int k = 2, delta = 0;
  bool stats = false, include_singletons = false;
  app.add_option("--mode", mode, "2ecs|2vcs|kecs|kecs-undirected");
  app.add_option("-k,--k", k, "connectivity order for kecs modes");
  app.add_option("--delta", delta, "local-search budget override");
  app.add_option("--algorithm", algorithm)->check(CLI::IsMember({"fast", "baseline"}));
  app.add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--stats", stats, "append solver statistics");
  app.add_flag("--include-singletons", include_singletons,
               "report single-vertex components too");
  app.add_option("file", file, "graph file (\"n m d|u\" header)");

  auto* gen = app.add_subcommand("gen", "emit a generated graph file");
  std::string family = "random-digraph";
  uint64_t seed = 1;
  int g_n = 10, g_cycles = 4, g_len = 10, g_cliques = 2, g_size = 4, g_bridges = 2,
      g_k = 2;
  long long g_m = 30;
  gen->add_option("--family", family, "cycle-chain|random-digraph|planted-cliques|bidirected");
  gen->add_option("--seed", seed);
  gen->add_option("--n", g_n);
  gen->add_option("--m", g_m);
  gen->add_option("--cycles", g_cycles);
  gen->add_option("--len", g_len);
  gen->add_option("--cliques", g_cliques);
  gen->add_option("--size", g_size);
  gen->add_option("--bridges", g_bridges);
  gen->add_option("-k,--k", g_k);

  auto* bench = app.add_subcommand("bench", "run the scaling harness");
  std::string out_csv = "bench.csv";
  kconn::BenchSpec spec;
  std::string families_csv = "cycle-chain";
  std::string sizes_csv = "1000,10000,100000";
  bench->add_option("--out", out_csv, "CSV output path");
  bench->add_option("--families", families_csv, "comma-separated generator families");
  bench->add_option("--sizes", sizes_csv, "comma-separated target edge counts");
  bench->add_option("--mode", spec.mode, "2ecs|2vcs|kecs");
  bench->add_option("-k,--k", spec.k);
  bench->add_option("--seed", spec.seed);
  bench->add_option("--verify-max-m", spec.verify_max_m);
  bool no_baseline = false;
  bench->add_flag("--no-baseline", no_baseline);

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      kconn::Digraph g;
      if (family == "cycle-chain") {
        g = kconn::gen_cycle_chain(g_cycles, g_len);
      } else if (family == "random-digraph") {
        g = kconn::gen_random_digraph(g_n, g_m, seed);
      } else if (family == "planted-cliques") {
        g = kconn::gen_planted_cliques(g_cliques, g_size, g_bridges);
      } else if (family == "bidirected") {
        g = kconn::gen_bidirected(g_n, g_m, seed);
      } else {
        throw kconn::input_error("unknown family: " + family);
      }
      std::cout << kconn::emit_graph_file(graph_from_digraph(g));
      return 0;
    }
    if (bench->parsed()) {
      spec.run_baseline = !no_baseline;
      spec.families.clear();
      spec.sizes.clear();
      {
        std::stringstream fs(families_csv), ss(sizes_csv);
        std::string tok;
        while (std::getline(fs, tok, ',')) {
          if (!tok.empty()) spec.families.push_back(tok);
        }
        while (std::getline(ss, tok, ',')) {
          if (!tok.empty()) spec.sizes.push_back(std::stoll(tok));
        }
      }
      kconn::BenchOutcome outcome = kconn::run_benchmark(spec);
      std::ofstream out(out_csv, std::ios::binary);
      if (!out) throw kconn::input_error("cannot write " + out_csv);
      out << kconn::bench_to_csv(outcome.records);
      if (outcome.diverged) {
        std::cerr << outcome.divergence_note;
        return 3;
      }
      return 0;
    }
    if (file.empty()) {
      std::cerr << "error: no input file (see --help)\n";
      return 1;
    }
    return run_solve(file, mode, k, delta, algorithm, format, stats,
                     include_singletons);
  } catch (const kconn::invariant_error& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return 2;
  } catch (const kconn::input_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
