#pragma once

#include "chainscope/eps_graph.hpp"
#include "chainscope/gap_matrix.hpp"
#include "chainscope/systems.hpp"

#include <optional>
#include <span>
#include <vector>

namespace chainscope {

/// Shortest eps-chain (at least one edge) from x to y, lexicographically
/// smallest among shortest; nullopt if y is not eps-chain reachable from x.
std::optional<Chain> chain_reaches(const GapMatrix& g, double eps, Index x, Index y);

/// Points x with an eps-chain from x back to x: vertices of nontrivial components.
std::vector<Index> chain_recurrent_set(const GapMatrix& g, double eps);

/// A vertex with no outgoing edge at the requested eps, and the gap that an
/// eps would have to exceed to give it one.
struct MissingOutEdge {
  Index vertex;
  double min_outgoing_gap;
};

/// Thrown when an operation needs every vertex to have an out-edge.
class MissingOutEdges : public PreconditionError {
 public:
  MissingOutEdges(double eps, std::vector<MissingOutEdge> vertices);
  const std::vector<MissingOutEdge>& vertices() const noexcept { return vertices_; }
  /// Every eps strictly above this value satisfies the precondition.
  double required_eps() const noexcept { return required_eps_; }

 private:
  std::vector<MissingOutEdge> vertices_;
  double required_eps_;
};

/// SCC structure of the eps-graph with no precondition on out-degrees.
SccDecomposition scc_decomposition(const GapMatrix& g, double eps);

/// SCC structure of the eps-graph. Requires an out-edge at every vertex
/// (throws MissingOutEdges); then at least one terminal component exists and
/// every terminal component is nontrivial.
SccDecomposition scc_terminal_components(const GapMatrix& g, double eps);

struct TerminalReach {
  std::size_t component;
  std::vector<Index> members;
  Chain witness;  ///< eps-chain from x ending at a member of the component
};

/// The lowest-id terminal component reachable from x, with a shortest chain into it.
TerminalReach reach_transitive(const GapMatrix& g, double eps, Index x);

/// True iff every ordered pair (x, y) of M, x == y included, is joined by an
/// eps-chain all of whose points lie in M.
bool internally_chain_transitive(const GapMatrix& g, double eps, std::span<const Index> M);

// ---------------------------------------------------------------------------
// Orbit relations on raw states. The unbounded quantifiers over k are
// truncated at k_max; a negative answer means "not found within budget".
// Iteration stops early at an exact fixed point.

template <class State>
struct OrbitWitness {
  bool found = false;
  std::size_t k = 0;        ///< iterate count at which the condition held
  State z{};                ///< Ñ only: the perturbed point
  bool z_is_image = false;  ///< Ñ only: z = f(x) itself rather than a sample
};

/// x O y: f^k(x) == y exactly for some 1 <= k <= k_max.
template <class State>
OrbitWitness<State> relation_O(const EvaluableSystem<State>& sys, const State& x, const State& y,
                               std::size_t k_max) {
  State cur = x;
  for (std::size_t k = 1; k <= k_max; ++k) {
    State next = sys.eval(cur);
    if (next == y) return {true, k};
    if (next == cur) break;
    cur = std::move(next);
  }
  return {};
}

/// x R y: d(f^k(x), y) < eps for some 1 <= k <= k_max.
template <class State>
OrbitWitness<State> relation_R(const EvaluableSystem<State>& sys, const State& x, const State& y, double eps,
                               std::size_t k_max) {
  State cur = x;
  for (std::size_t k = 1; k <= k_max; ++k) {
    State next = sys.eval(cur);
    if (sys.dist(next, y) < eps) return {true, k};
    if (next == cur) break;
    cur = std::move(next);
  }
  return {};
}

/// x Ñ y: some z with d(f(x), z) < eps has d(f^k(z), y) < eps for some
/// 0 <= k <= k_max. Candidates for z are f(x) itself followed by the samples
/// within eps of f(x). A witness with k >= 1 is preferred over one with k = 0.
template <class State>
OrbitWitness<State> relation_Ntilde(const EvaluableSystem<State>& sys, const State& x, const State& y, double eps,
                                    std::size_t k_max) {
  const State image = sys.eval(x);
  std::optional<OrbitWitness<State>> immediate;
  auto scan = [&](const State& z, bool z_is_image) -> std::optional<OrbitWitness<State>> {
    if (!immediate && sys.dist(z, y) < eps) immediate = OrbitWitness<State>{true, 0, z, z_is_image};
    State cur = z;
    for (std::size_t k = 1; k <= k_max; ++k) {
      State next = sys.eval(cur);
      if (sys.dist(next, y) < eps) return OrbitWitness<State>{true, k, z, z_is_image};
      if (next == cur) break;
      cur = std::move(next);
    }
    return std::nullopt;
  };
  if (auto hit = scan(image, true)) return *hit;
  for (const State& z : sys.samples()) {
    if (z == image || !(sys.dist(image, z) < eps)) continue;
    if (auto hit = scan(z, false)) return *hit;
  }
  if (immediate) return *immediate;
  return {};
}

/// Raw-state pseudo-orbit built from a Ñ witness: x, z, f(z), ..., f^{k-1}(z), y.
/// With k = 0 the sequence degenerates to (x, y).
template <class State>
std::vector<State> ntilde_chain(const EvaluableSystem<State>& sys, const State& x, const State& y,
                                const OrbitWitness<State>& w) {
  std::vector<State> out{x};
  if (w.k >= 1) {
    State cur = w.z;
    out.push_back(cur);
    for (std::size_t i = 1; i < w.k; ++i) {
      cur = sys.eval(cur);
      out.push_back(cur);
    }
  }
  out.push_back(y);
  return out;
}

/// A sequence of raw states is an eps-chain iff it has >= 2 points and
/// d(f(p_i), p_{i+1}) < eps for every consecutive pair.
template <class State>
bool raw_chain_valid(const EvaluableSystem<State>& sys, std::span<const State> points, double eps) {
  if (points.size() < 2) return false;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if (!(sys.dist(sys.eval(points[i]), points[i + 1]) < eps)) return false;
  }
  return true;
}

}  // namespace chainscope
