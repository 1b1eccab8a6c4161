#include "kconn/io.hpp"

#include <sstream>

#include <json.hpp>

namespace kconn {

namespace {

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw input_error("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

GraphFile parse_graph(const std::string& text) {
  GraphFile f;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  long long declared_m = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.resize(hash);
    }
    std::istringstream ls(line);
    if (declared_m < 0) {
      long long n, m;
      std::string flag;
      if (!(ls >> n)) continue;  // blank line before the header
      if (!(ls >> m >> flag) || (flag != "d" && flag != "u")) {
        fail(line_no, "expected header \"n m d|u\"");
      }
      std::string rest;
      if (ls >> rest) fail(line_no, "trailing content after header");
      if (n < 0 || m < 0) fail(line_no, "negative count in header");
      f.n = static_cast<int>(n);
      f.directed = flag == "d";
      declared_m = m;
      continue;
    }
    long long a, b;
    if (!(ls >> a)) continue;  // blank or comment-only line
    if (!(ls >> b)) fail(line_no, "expected \"tail head\"");
    std::string rest;
    if (ls >> rest) fail(line_no, "trailing content after edge");
    if (a < 0 || a >= f.n || b < 0 || b >= f.n) {
      fail(line_no, "vertex id out of range");
    }
    if (static_cast<long long>(f.edges.size()) == declared_m) {
      fail(line_no, "more edges than declared");
    }
    f.edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
  }
  if (declared_m < 0) throw input_error("missing header \"n m d|u\"");
  if (static_cast<long long>(f.edges.size()) != declared_m) {
    throw input_error("declared " + std::to_string(declared_m) + " edges, found " +
                      std::to_string(f.edges.size()));
  }
  return f;
}

Digraph to_digraph(const GraphFile& f) {
  if (f.directed) return from_edge_list(f.n, f.edges);
  std::vector<std::pair<VertexId, VertexId>> dir;
  dir.reserve(f.edges.size() * 2);
  for (const auto& [a, b] : f.edges) {
    dir.emplace_back(a, b);
    dir.emplace_back(b, a);
  }
  return from_edge_list(f.n, dir);
}

std::string emit_graph_file(const GraphFile& f) {
  std::ostringstream out;
  out << f.n << ' ' << f.edges.size() << ' ' << (f.directed ? 'd' : 'u') << '\n';
  for (const auto& [a, b] : f.edges) out << a << ' ' << b << '\n';
  return out.str();
}

std::string emit_report(const ComponentReport& rep, ReportFormat fmt, bool with_stats) {
  if (fmt == ReportFormat::text) {
    std::ostringstream out;
    for (const VertexSet& c : rep.components) {
      for (size_t i = 0; i < c.size(); ++i) {
        if (i) out << ' ';
        out << c[i];
      }
      out << '\n';
    }
    if (with_stats) {
      const SolveStats& s = rep.stats;
      out << "# mode " << rep.mode << '\n'
          << "# m0 " << s.m0 << '\n'
          << "# delta " << s.delta << '\n'
          << "# searches " << s.searches << '\n'
          << "# edges_scanned " << s.edges_scanned << '\n'
          << "# recursion_depth " << s.recursion_depth << '\n'
          << "# splits " << s.splits << '\n'
          << "# aux_peak " << s.aux_peak << '\n'
          << "# worklist_violations " << s.worklist_violations << '\n';
    }
    return out.str();
  }
  nlohmann::ordered_json j;
  j["mode"] = rep.mode;
  j["components"] = rep.components;
  const SolveStats& s = rep.stats;
  j["stats"] = nlohmann::ordered_json{{"m0", s.m0},
                                      {"delta", s.delta},
                                      {"searches", s.searches},
                                      {"edges_scanned", s.edges_scanned},
                                      {"recursion_depth", s.recursion_depth},
                                      {"splits", s.splits},
                                      {"aux_peak", s.aux_peak},
                                      {"worklist_violations", s.worklist_violations}};
  return j.dump(2) + "\n";
}

}  // namespace kconn
