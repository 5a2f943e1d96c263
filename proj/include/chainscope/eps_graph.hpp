#pragma once

#include "chainscope/gap_matrix.hpp"

#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace chainscope {

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// The eps-chain digraph of a gap matrix, {(a, b) : gap(a, b) < eps},
/// optionally induced on a vertex subset. Successor and predecessor lists are
/// sorted by index.
class EpsGraph {
 public:
  EpsGraph(const GapMatrix& g, double eps, std::optional<std::span<const Index>> within = std::nullopt);

  std::size_t size() const noexcept { return allowed_.size(); }
  double eps() const noexcept { return eps_; }
  bool allowed(Index v) const { return allowed_[v]; }

  std::span<const Index> successors(Index v) const {
    return {out_targets_.data() + out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]};
  }
  std::span<const Index> predecessors(Index v) const {
    return {in_sources_.data() + in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]};
  }
  bool has_self_loop(Index v) const;

 private:
  double eps_;
  std::vector<bool> allowed_;
  std::vector<std::size_t> out_offsets_;
  std::vector<Index> out_targets_;
  std::vector<std::size_t> in_offsets_;
  std::vector<Index> in_sources_;
};

/// BFS distance (edge count, zero allowed) from every vertex to the nearest
/// target; kUnreachable where none is reachable.
std::vector<std::size_t> distances_to(const EpsGraph& graph, std::span<const Index> targets);

/// Shortest walk with at least one edge from `from` into `targets`; among
/// shortest walks, the lexicographically smallest sequence of indices.
std::optional<Chain> shortest_walk(const EpsGraph& graph, Index from, std::span<const Index> targets);

/// Strongly connected components of the allowed vertices. Component ids are
/// assigned in order of each component's smallest vertex.
struct SccDecomposition {
  std::vector<std::size_t> component_of;  ///< kUnreachable for vertices outside the graph
  std::vector<std::vector<Index>> members;
  std::vector<std::pair<std::size_t, std::size_t>> condensation_edges;  ///< sorted, acyclic
  std::vector<bool> terminal;    ///< no outgoing condensation edge
  std::vector<bool> nontrivial;  ///< at least one internal edge (self-loops count)

  std::size_t count() const noexcept { return members.size(); }

  /// Topological order of components (sources first, smallest id first among ties).
  std::vector<std::size_t> topological_order() const;

  /// reach[c][c'] is true iff component c reaches c' (reflexive).
  std::vector<std::vector<bool>> reachability() const;
};

SccDecomposition decompose(const EpsGraph& graph);

}  // namespace chainscope
