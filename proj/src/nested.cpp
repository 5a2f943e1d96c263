#include "chainscope/nested.hpp"

#include "chainscope/eps_graph.hpp"
#include "chainscope/errors.hpp"
#include "chainscope/format.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>

namespace chainscope {

namespace {

double parse_real(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ArgumentError("cannot parse schedule value '" + std::string(text) + "'");
  }
  return value;
}

std::vector<Index> point_set(const Chain& c) {
  std::vector<Index> s = c.points;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool subset_of(const std::vector<Index>& a, const std::vector<Index>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

Schedule::Schedule(std::vector<double> levels) : levels_(std::move(levels)) {
  if (levels_.empty()) throw ArgumentError("schedule needs at least one level");
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (!(levels_[i] > 0.0) || !std::isfinite(levels_[i])) throw ArgumentError("schedule levels must be positive");
    if (i > 0 && !(levels_[i] < levels_[i - 1])) {
      throw ArgumentError("schedule must be strictly decreasing (level " + std::to_string(i + 1) + ")");
    }
  }
}

Schedule Schedule::geometric(double first, std::size_t count) {
  if (count == 0) throw ArgumentError("geometric schedule needs count >= 1");
  std::vector<double> levels;
  for (std::size_t i = 0; i < count; ++i) levels.push_back(std::ldexp(first, -static_cast<int>(i)));
  return Schedule(std::move(levels));
}

Schedule Schedule::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  bool geometric_form = text.starts_with("geometric:");
  std::string_view body = geometric_form ? text.substr(10) : text;
  while (!body.empty()) {
    auto comma = body.find(',');
    parts.push_back(body.substr(0, comma));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  if (geometric_form) {
    if (parts.size() != 2) throw ArgumentError("expected geometric:<first>,<count>");
    double count = parse_real(parts[1]);
    if (count < 1 || count != std::floor(count)) throw ArgumentError("geometric count must be a positive integer");
    return geometric(parse_real(parts[0]), static_cast<std::size_t>(count));
  }
  std::vector<double> levels;
  for (auto p : parts) levels.push_back(parse_real(p));
  return Schedule(std::move(levels));
}

std::optional<Chain> covering_walk_feasible(const GapMatrix& g, double eps, Index x, Index y,
                                            std::span<const Index> must_visit,
                                            std::optional<std::span<const Index>> within) {
  if (!(eps > 0.0)) throw ArgumentError("eps must be positive");
  const std::size_t n = g.size();
  if (x >= n || y >= n) throw ArgumentError("endpoint out of range");
  EpsGraph graph(g, eps, within);
  std::vector<Index> required(must_visit.begin(), must_visit.end());
  required.push_back(x);
  required.push_back(y);
  for (Index v : required) {
    if (v >= n) throw ArgumentError("must-visit vertex out of range");
    if (!graph.allowed(v)) return std::nullopt;
  }
  SccDecomposition scc = decompose(graph);

  std::vector<std::size_t> position(scc.count());
  {
    auto order = scc.topological_order();
    for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
  }
  std::vector<std::size_t> comps;
  for (Index v : required) comps.push_back(scc.component_of[v]);
  std::sort(comps.begin(), comps.end(), [&](std::size_t a, std::size_t b) { return position[a] < position[b]; });
  comps.erase(std::unique(comps.begin(), comps.end()), comps.end());

  const std::size_t cx = scc.component_of[x];
  const std::size_t cy = scc.component_of[y];
  if (comps.front() != cx || comps.back() != cy) return std::nullopt;
  if (comps.size() == 1 && !scc.nontrivial[cx]) return std::nullopt;

  std::vector<std::vector<std::size_t>> next(scc.count());
  for (auto [a, b] : scc.condensation_edges) next[a].push_back(b);
  auto reaches = [&](std::size_t from, std::size_t to) {
    std::vector<bool> seen(scc.count(), false);
    std::vector<std::size_t> stack{from};
    seen[from] = true;
    while (!stack.empty()) {
      std::size_t c = stack.back();
      stack.pop_back();
      if (c == to) return true;
      for (std::size_t d : next[c]) {
        // Components past `to` in topological order cannot lead back to it.
        if (!seen[d] && position[d] <= position[to]) {
          seen[d] = true;
          stack.push_back(d);
        }
      }
    }
    return false;
  };
  for (std::size_t i = 0; i + 1 < comps.size(); ++i) {
    if (!reaches(comps[i], comps[i + 1])) return std::nullopt;
  }

  std::vector<Index> targets(must_visit.begin(), must_visit.end());
  std::sort(targets.begin(), targets.end(), [&](Index a, Index b) {
    std::size_t pa = position[scc.component_of[a]], pb = position[scc.component_of[b]];
    return pa != pb ? pa < pb : a < b;
  });
  Chain walk{{x}};
  std::vector<bool> visited(n, false);
  visited[x] = true;
  auto append = [&](Index target) {
    const Index t[] = {target};
    std::optional<Chain> seg = shortest_walk(graph, walk.target(), t);
    for (std::size_t i = 1; i < seg->points.size(); ++i) {
      walk.points.push_back(seg->points[i]);
      visited[seg->points[i]] = true;
    }
  };
  for (Index t : targets) {
    if (!visited[t]) append(t);
  }
  if (walk.edges() == 0 || walk.target() != y) append(y);
  return walk;
}

RefineOutcome refine_chain(const GapMatrix& g, const Chain& chain, double eps_next,
                           std::optional<std::span<const Index>> within) {
  if (!(eps_next > 0.0)) throw ArgumentError("eps must be positive");
  if (chain.points.size() < 2) throw ArgumentError("cannot refine a chain without edges");
  EpsGraph graph(g, eps_next, within);
  Chain out{{chain.source()}};
  for (std::size_t j = 0; j + 1 < chain.points.size(); ++j) {
    const Index a = chain.points[j];
    const Index b[] = {chain.points[j + 1]};
    std::optional<Chain> seg = shortest_walk(graph, a, b);
    if (!seg) return {std::nullopt, std::make_pair(a, b[0])};
    out.points.insert(out.points.end(), seg->points.begin() + 1, seg->points.end());
  }
  return {std::move(out), std::nullopt};
}

std::string to_string(NestedMode mode) { return mode == NestedMode::greedy ? "greedy" : "exact"; }

std::string to_string(NestedStatus status) {
  switch (status) {
    case NestedStatus::success:
      return "success";
    case NestedStatus::infeasible:
      return "infeasible";
    case NestedStatus::undecided:
      return "undecided";
  }
  return "undecided";
}

NestedMode parse_nested_mode(std::string_view text) {
  if (text == "greedy") return NestedMode::greedy;
  if (text == "exact") return NestedMode::exact;
  throw ArgumentError("mode must be 'greedy' or 'exact', got '" + std::string(text) + "'");
}

NestedCertificate nested_decide(const GapMatrix& g, const Schedule& schedule, Index x, Index y,
                                const NestedOptions& options) {
  const std::size_t levels = schedule.size();
  NestedCertificate cert;

  // Any family contains a chain at every level, so a level at which x cannot
  // reach y at all is an obstruction in both modes.
  for (std::size_t l = 0; l < levels; ++l) {
    if (!covering_walk_feasible(g, schedule[l], x, y, {}, options.within)) {
      cert.status = NestedStatus::infeasible;
      std::vector<Index> ends{std::min(x, y), std::max(x, y)};
      ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
      cert.obstruction = Obstruction{l + 1, std::move(ends),
                                     "no " + format_real(schedule[l]) + "-chain from source to target"};
      return cert;
    }
  }

  NestedFamily family{x, y, {}};
  if (options.mode == NestedMode::exact) {
    const std::size_t bound = options.max_walk_length ? options.max_walk_length : 4 * g.size();
    std::optional<Chain> finest = covering_walk_feasible(g, schedule.finest(), x, y, {}, options.within);
    if (finest->edges() > bound) {
      cert.status = NestedStatus::undecided;
      cert.obstruction = Obstruction{levels, point_set(*finest),
                                     "witness walk longer than the bound " + std::to_string(bound)};
      return cert;
    }
    family.chains.assign(levels, *finest);
  } else {
    EpsGraph first_graph(g, schedule[0], options.within);
    const Index target[] = {y};
    family.chains.push_back(*shortest_walk(first_graph, x, target));
    for (std::size_t l = 1; l < levels; ++l) {
      const Chain& previous = family.chains.back();
      RefineOutcome refined = refine_chain(g, previous, schedule[l], options.within);
      if (!refined.chain) {
        cert.status = NestedStatus::undecided;
        cert.obstruction = Obstruction{l + 1, point_set(previous),
                                       "greedy refinement blocked at jump " + std::to_string(refined.blocked->first) +
                                           " -> " + std::to_string(refined.blocked->second)};
        return cert;
      }
      if (refined.chain->points.size() > options.max_chain_points) {
        cert.status = NestedStatus::undecided;
        cert.obstruction = Obstruction{l + 1, point_set(previous), "chain point budget exhausted"};
        return cert;
      }
      family.chains.push_back(std::move(*refined.chain));
    }
  }
  cert.status = NestedStatus::success;
  cert.family = std::move(family);
  return cert;
}

bool verify_nested(const NestedFamily& family, const GapMatrix& g, const Schedule& schedule) {
  if (family.chains.size() != schedule.size()) return false;
  std::vector<Index> previous;
  for (std::size_t l = 0; l < schedule.size(); ++l) {
    const Chain& c = family.chains[l];
    if (!c.valid_at(g, schedule[l])) return false;
    if (c.source() != family.source || c.target() != family.target) return false;
    std::vector<Index> current = point_set(c);
    if (l > 0 && !subset_of(previous, current)) return false;
    previous = std::move(current);
  }
  return true;
}

NestedTransitivity nested_transitive_check(const GapMatrix& g, const Schedule& schedule, std::span<const Index> M,
                                           const NestedOptions& options) {
  if (M.empty()) throw ArgumentError("nested transitivity needs a nonempty set");
  NestedTransitivity out;
  for (Index x : M) {
    for (Index y : M) {
      NestedStatus s = nested_decide(g, schedule, x, y, options).status;
      if (s == NestedStatus::success) continue;
      if (out.status == NestedStatus::success || s == NestedStatus::infeasible) {
        if (out.status != NestedStatus::infeasible) out.failing_pair = std::make_pair(x, y);
        out.status = s;
      }
      if (s == NestedStatus::infeasible) return out;
    }
  }
  return out;
}

}  // namespace chainscope
