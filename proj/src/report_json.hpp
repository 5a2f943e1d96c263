#pragma once

#include "chainscope/gap_matrix.hpp"
#include "chainscope/nested.hpp"

#include <json.hpp>

#include <string>

namespace chainscope::detail {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

std::string dump(const Json& j);

Json indices_json(const GapMatrix& g, std::span<const Index> indices);
Json chain_json(const GapMatrix& g, const Chain& chain);
Json certificate_json(const GapMatrix& g, const Schedule& schedule, const NestedCertificate& cert);

/// The eps-graph as a Graphviz digraph: nodes filled by component, terminal
/// components drawn as double circles, edges labelled with their gap.
std::string eps_graph_dot(const GapMatrix& g, double eps);

}  // namespace chainscope::detail
