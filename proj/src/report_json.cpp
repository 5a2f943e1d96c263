#include "report_json.hpp"

#include "chainscope/eps_graph.hpp"
#include "chainscope/format.hpp"
#include "chainscope/nested.hpp"

namespace chainscope::detail {

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json indices_json(const GapMatrix& g, std::span<const Index> indices) {
  Json labels = Json::array();
  for (Index v : indices) labels.push_back(g.label(v));
  return Json{{"indices", std::vector<Index>(indices.begin(), indices.end())}, {"labels", std::move(labels)}};
}

Json chain_json(const GapMatrix& g, const Chain& chain) {
  Json gaps = Json::array();
  for (std::size_t i = 0; i + 1 < chain.points.size(); ++i) gaps.push_back(g(chain.points[i], chain.points[i + 1]));
  Json out = indices_json(g, chain.points);
  out["gaps"] = std::move(gaps);
  return out;
}

Json certificate_json(const GapMatrix&, const Schedule& schedule, const NestedCertificate& cert) {
  Json out;
  out["status"] = to_string(cert.status);
  out["levels"] = std::vector<double>(schedule.levels().begin(), schedule.levels().end());
  Json chains = Json::array();
  if (cert.family) {
    for (const Chain& c : cert.family->chains) chains.push_back(c.points);
  }
  out["chains"] = std::move(chains);
  if (cert.obstruction) {
    out["obstruction"] = Json{{"level", cert.obstruction->level},
                              {"must_visit", cert.obstruction->must_visit},
                              {"reason", cert.obstruction->reason}};
  } else {
    out["obstruction"] = nullptr;
  }
  return out;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string eps_graph_dot(const GapMatrix& g, double eps) {
  EpsGraph graph(g, eps);
  SccDecomposition scc = decompose(graph);
  std::string out = "digraph chainscope {\n  label=" + quoted("eps = " + format_real(eps)) + ";\n";
  out += "  node [style=filled, colorscheme=set312];\n";
  for (Index v = 0; v < g.size(); ++v) {
    std::size_t c = scc.component_of[v];
    out += "  n" + std::to_string(v) + " [label=" + quoted(g.label(v)) + ", fillcolor=" + std::to_string(c % 12 + 1) +
           ", shape=" + (scc.terminal[c] ? "doublecircle" : "circle") + "];\n";
  }
  for (Index a = 0; a < g.size(); ++a) {
    for (Index b : graph.successors(a)) {
      out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + " [label=" + quoted(format_real(g(a, b))) +
             "];\n";
    }
  }
  return out + "}\n";
}

}  // namespace chainscope::detail
