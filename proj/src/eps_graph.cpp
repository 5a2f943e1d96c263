#include "chainscope/eps_graph.hpp"

#include <algorithm>
#include <deque>
#include <queue>

namespace chainscope {

EpsGraph::EpsGraph(const GapMatrix& g, double eps, std::optional<std::span<const Index>> within)
    : eps_(eps), allowed_(g.size(), !within.has_value()) {
  const std::size_t n = g.size();
  if (within) {
    for (Index v : *within) {
      if (v >= n) throw ArgumentError("vertex " + std::to_string(v) + " out of range");
      allowed_[v] = true;
    }
  }
  out_offsets_.assign(n + 1, 0);
  std::vector<std::size_t> in_degree(n, 0);
  for (Index a = 0; a < n; ++a) {
    out_offsets_[a] = out_targets_.size();
    if (!allowed_[a]) continue;
    auto row = g.row(a);
    for (Index b = 0; b < n; ++b) {
      if (allowed_[b] && row[b] < eps) {
        out_targets_.push_back(b);
        ++in_degree[b];
      }
    }
  }
  out_offsets_[n] = out_targets_.size();

  in_offsets_.assign(n + 1, 0);
  for (Index b = 0; b < n; ++b) in_offsets_[b + 1] = in_offsets_[b] + in_degree[b];
  in_sources_.resize(out_targets_.size());
  std::vector<std::size_t> cursor(in_offsets_.begin(), in_offsets_.end() - 1);
  for (Index a = 0; a < n; ++a) {
    for (Index b : successors(a)) in_sources_[cursor[b]++] = a;
  }
}

bool EpsGraph::has_self_loop(Index v) const {
  auto succ = successors(v);
  return std::binary_search(succ.begin(), succ.end(), v);
}

std::vector<std::size_t> distances_to(const EpsGraph& graph, std::span<const Index> targets) {
  std::vector<std::size_t> dist(graph.size(), kUnreachable);
  std::deque<Index> queue;
  for (Index t : targets) {
    if (graph.allowed(t) && dist[t] != 0) {
      dist[t] = 0;
      queue.push_back(t);
    }
  }
  while (!queue.empty()) {
    Index v = queue.front();
    queue.pop_front();
    for (Index u : graph.predecessors(v)) {
      if (dist[u] == kUnreachable) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

std::optional<Chain> shortest_walk(const EpsGraph& graph, Index from, std::span<const Index> targets) {
  if (from >= graph.size() || !graph.allowed(from)) return std::nullopt;
  const std::vector<std::size_t> dist = distances_to(graph, targets);

  // First step: the walk must take at least one edge even when `from` is a target.
  Index first = kUnreachable;
  std::size_t best = kUnreachable;
  for (Index z : graph.successors(from)) {
    if (dist[z] != kUnreachable && dist[z] < best) {
      best = dist[z];
      first = z;
    }
  }
  if (first == kUnreachable) return std::nullopt;

  Chain walk{{from, first}};
  Index cur = first;
  while (dist[cur] != 0) {
    for (Index z : graph.successors(cur)) {
      if (dist[z] + 1 == dist[cur]) {
        cur = z;
        break;
      }
    }
    walk.points.push_back(cur);
  }
  return walk;
}

std::vector<std::size_t> SccDecomposition::topological_order() const {
  const std::size_t c = count();
  std::vector<std::size_t> indegree(c, 0);
  std::vector<std::vector<std::size_t>> next(c);
  for (auto [a, b] : condensation_edges) {
    next[a].push_back(b);
    ++indegree[b];
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t i = 0; i < c; ++i) {
    if (indegree[i] == 0) ready.push(i);
  }
  std::vector<std::size_t> order;
  order.reserve(c);
  while (!ready.empty()) {
    std::size_t i = ready.top();
    ready.pop();
    order.push_back(i);
    for (std::size_t j : next[i]) {
      if (--indegree[j] == 0) ready.push(j);
    }
  }
  return order;
}

std::vector<std::vector<bool>> SccDecomposition::reachability() const {
  const std::size_t c = count();
  std::vector<std::vector<std::size_t>> next(c);
  for (auto [a, b] : condensation_edges) next[a].push_back(b);
  std::vector<std::vector<bool>> reach(c, std::vector<bool>(c, false));
  // Reverse topological order: successors are complete before their predecessors.
  auto order = topological_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::size_t i = *it;
    reach[i][i] = true;
    for (std::size_t j : next[i]) {
      for (std::size_t k = 0; k < c; ++k) {
        if (reach[j][k]) reach[i][k] = true;
      }
    }
  }
  return reach;
}

SccDecomposition decompose(const EpsGraph& graph) {
  const std::size_t n = graph.size();
  constexpr std::size_t unvisited = kUnreachable;
  std::vector<std::size_t> order_of(n, unvisited);
  std::vector<std::size_t> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Index> stack;
  std::vector<std::size_t> raw_component(n, kUnreachable);
  std::vector<std::vector<Index>> raw_members;
  std::size_t counter = 0;

  // Iterative Tarjan: each frame holds a vertex and the position of the next successor to scan.
  std::vector<std::pair<Index, std::size_t>> frames;
  for (Index root = 0; root < n; ++root) {
    if (!graph.allowed(root) || order_of[root] != unvisited) continue;
    frames.emplace_back(root, 0);
    order_of[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      auto succ = graph.successors(v);
      if (pos < succ.size()) {
        Index w = succ[pos++];
        if (order_of[w] == unvisited) {
          order_of[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], order_of[w]);
        }
        continue;
      }
      Index done = v;
      frames.pop_back();
      if (!frames.empty()) {
        Index parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == order_of[done]) {
        std::vector<Index> component;
        Index w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          raw_component[w] = raw_members.size();
          component.push_back(w);
        } while (w != done);
        std::sort(component.begin(), component.end());
        raw_members.push_back(std::move(component));
      }
    }
  }

  // Renumber by smallest member.
  std::vector<std::size_t> by_min(raw_members.size());
  for (std::size_t i = 0; i < by_min.size(); ++i) by_min[i] = i;
  std::sort(by_min.begin(), by_min.end(),
            [&](std::size_t a, std::size_t b) { return raw_members[a].front() < raw_members[b].front(); });
  std::vector<std::size_t> new_id(raw_members.size());
  SccDecomposition out;
  for (std::size_t i = 0; i < by_min.size(); ++i) {
    new_id[by_min[i]] = i;
    out.members.push_back(std::move(raw_members[by_min[i]]));
  }
  out.component_of.assign(n, kUnreachable);
  for (Index v = 0; v < n; ++v) {
    if (raw_component[v] != kUnreachable) out.component_of[v] = new_id[raw_component[v]];
  }

  const std::size_t c = out.count();
  out.terminal.assign(c, true);
  out.nontrivial.assign(c, false);
  for (Index v = 0; v < n; ++v) {
    if (!graph.allowed(v)) continue;
    std::size_t cv = out.component_of[v];
    for (Index w : graph.successors(v)) {
      std::size_t cw = out.component_of[w];
      if (cv == cw) {
        out.nontrivial[cv] = true;
      } else {
        out.terminal[cv] = false;
        out.condensation_edges.emplace_back(cv, cw);
      }
    }
  }
  std::sort(out.condensation_edges.begin(), out.condensation_edges.end());
  out.condensation_edges.erase(std::unique(out.condensation_edges.begin(), out.condensation_edges.end()),
                               out.condensation_edges.end());
  return out;
}

}  // namespace chainscope
