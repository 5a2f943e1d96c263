#include "chainscope/locator.hpp"

#include "chainscope/eps_graph.hpp"
#include "chainscope/errors.hpp"
#include "chainscope/format.hpp"

#include <algorithm>

namespace chainscope {

std::vector<Index> projection(const GapMatrix& g) {
  std::vector<Index> out(g.size());
  for (Index a = 0; a < g.size(); ++a) {
    auto row = g.row(a);
    out[a] = static_cast<Index>(std::min_element(row.begin(), row.end()) - row.begin());
  }
  return out;
}

ProjectedOrbit locate_cr(const GapMatrix& g, Index x0) {
  const std::size_t n = g.size();
  if (x0 >= n) throw ArgumentError("seed index out of range");
  ProjectedOrbit orbit;
  orbit.seed = x0;
  orbit.rho = g.resolution();
  std::vector<std::size_t> first_seen(n, kUnreachable);
  Index a = x0;
  while (first_seen[a] == kUnreachable) {
    first_seen[a] = orbit.steps.size();
    orbit.steps.push_back(a);
    auto row = g.row(a);
    a = static_cast<Index>(std::min_element(row.begin(), row.end()) - row.begin());
  }
  orbit.steps.push_back(a);
  orbit.cycle_start = first_seen[a];
  orbit.cycle.assign(orbit.steps.begin() + static_cast<std::ptrdiff_t>(orbit.cycle_start), orbit.steps.end() - 1);
  for (std::size_t i = 0; i < orbit.cycle.size(); ++i) {
    Index u = orbit.cycle[i];
    Index v = orbit.cycle[(i + 1) % orbit.cycle.size()];
    orbit.eps_star = std::max(orbit.eps_star, g(u, v));
  }
  orbit.artifact = orbit.eps_star > 0.0;
  return orbit;
}

std::vector<LocatedComponent> locate_all_components(const GapMatrix& g, double eps) {
  const double rho = g.resolution();
  if (!(eps > rho)) {
    throw PreconditionError("eps = " + format_real(eps) + " must exceed the projection resolution rho = " +
                            format_real(rho));
  }
  EpsGraph graph(g, eps);
  SccDecomposition scc = decompose(graph);
  std::vector<LocatedComponent> out;
  for (std::size_t c = 0; c < scc.count(); ++c) {
    if (!scc.terminal[c]) continue;
    LocatedComponent lc;
    lc.component = c;
    lc.members = scc.members[c];
    const Index start = lc.members.front();
    const Index target[] = {start};
    lc.witness = *shortest_walk(graph, start, target);
    std::vector<std::size_t> dist = distances_to(graph, lc.members);
    for (Index v = 0; v < g.size(); ++v) {
      if (dist[v] != kUnreachable) lc.basin.push_back(v);
    }
    out.push_back(std::move(lc));
  }
  return out;
}

}  // namespace chainscope
