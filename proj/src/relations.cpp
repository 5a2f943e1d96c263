#include "chainscope/relations.hpp"

#include "chainscope/format.hpp"

#include <algorithm>

namespace chainscope {

namespace {

void check_eps(double eps) {
  if (!(eps > 0.0)) throw ArgumentError("eps must be positive");
}

void check_index(const GapMatrix& g, Index v) {
  if (v >= g.size()) {
    throw ArgumentError("index " + std::to_string(v) + " out of range (n = " + std::to_string(g.size()) + ")");
  }
}

std::string describe_missing(double eps, const std::vector<MissingOutEdge>& vertices) {
  std::string msg = "no outgoing edge at eps = " + format_real(eps) + " for vertices";
  std::size_t shown = 0;
  for (const auto& m : vertices) {
    if (shown++ == 8) {
      msg += " ...";
      break;
    }
    msg += " " + std::to_string(m.vertex) + " (needs eps > " + format_real(m.min_outgoing_gap) + ")";
  }
  return msg;
}

double max_required(const std::vector<MissingOutEdge>& vertices) {
  double r = 0.0;
  for (const auto& m : vertices) r = std::max(r, m.min_outgoing_gap);
  return r;
}

void require_out_edges(const GapMatrix& g, double eps) {
  std::vector<MissingOutEdge> missing;
  for (Index a = 0; a < g.size(); ++a) {
    double m = g.min_outgoing(a);
    if (!(m < eps)) missing.push_back({a, m});
  }
  if (!missing.empty()) throw MissingOutEdges(eps, std::move(missing));
}

}  // namespace

MissingOutEdges::MissingOutEdges(double eps, std::vector<MissingOutEdge> vertices)
    : PreconditionError(describe_missing(eps, vertices)),
      vertices_(std::move(vertices)),
      required_eps_(max_required(vertices_)) {}

std::optional<Chain> chain_reaches(const GapMatrix& g, double eps, Index x, Index y) {
  check_eps(eps);
  check_index(g, x);
  check_index(g, y);
  EpsGraph graph(g, eps);
  const Index target[] = {y};
  return shortest_walk(graph, x, target);
}

std::vector<Index> chain_recurrent_set(const GapMatrix& g, double eps) {
  check_eps(eps);
  SccDecomposition scc = decompose(EpsGraph(g, eps));
  std::vector<Index> out;
  for (Index v = 0; v < g.size(); ++v) {
    if (scc.nontrivial[scc.component_of[v]]) out.push_back(v);
  }
  return out;
}

SccDecomposition scc_decomposition(const GapMatrix& g, double eps) {
  check_eps(eps);
  return decompose(EpsGraph(g, eps));
}

SccDecomposition scc_terminal_components(const GapMatrix& g, double eps) {
  check_eps(eps);
  require_out_edges(g, eps);
  return decompose(EpsGraph(g, eps));
}

TerminalReach reach_transitive(const GapMatrix& g, double eps, Index x) {
  check_eps(eps);
  check_index(g, x);
  require_out_edges(g, eps);
  EpsGraph graph(g, eps);
  SccDecomposition scc = decompose(graph);

  // Components reachable from x (x's own included), by BFS over vertices.
  std::vector<bool> seen(g.size(), false);
  std::vector<Index> frontier{x};
  seen[x] = true;
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    for (Index w : graph.successors(frontier[head])) {
      if (!seen[w]) {
        seen[w] = true;
        frontier.push_back(w);
      }
    }
  }
  std::size_t best = kUnreachable;
  for (Index v : frontier) {
    std::size_t c = scc.component_of[v];
    if (scc.terminal[c]) best = std::min(best, c);
  }
  // Out-edges everywhere means every forward-closed reachable set contains a terminal component.
  const std::vector<Index>& members = scc.members.at(best);
  std::optional<Chain> walk = shortest_walk(graph, x, members);
  return {best, members, std::move(*walk)};
}

bool internally_chain_transitive(const GapMatrix& g, double eps, std::span<const Index> M) {
  check_eps(eps);
  if (M.empty()) throw ArgumentError("internal chain transitivity needs a nonempty set");
  for (Index v : M) check_index(g, v);
  EpsGraph graph(g, eps, M);
  SccDecomposition scc = decompose(graph);
  std::size_t c = scc.component_of[M.front()];
  for (Index v : M) {
    if (scc.component_of[v] != c) return false;
  }
  return scc.nontrivial[c];
}

}  // namespace chainscope
