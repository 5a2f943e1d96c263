#include "chainscope/strong_chain.hpp"

#include <algorithm>
#include <limits>
#include <thread>

namespace chainscope {

namespace {

void fill_source(const GapMatrix& g, Index x, std::span<double> out) {
  const std::size_t n = g.size();
  auto first = g.row(x);
  std::copy(first.begin(), first.end(), out.begin());
  std::vector<bool> settled(n, false);
  for (std::size_t round = 0; round < n; ++round) {
    Index u = n;
    double best = std::numeric_limits<double>::infinity();
    for (Index v = 0; v < n; ++v) {
      if (!settled[v] && out[v] < best) {
        best = out[v];
        u = v;
      }
    }
    if (u == n) break;
    settled[u] = true;
    auto row = g.row(u);
    for (Index v = 0; v < n; ++v) {
      if (!settled[v]) out[v] = std::min(out[v], best + row[v]);
    }
  }
}

}  // namespace

StrongChainValues strong_chain_values(const GapMatrix& g, unsigned threads) {
  const std::size_t n = g.size();
  std::vector<double> values(n * n);
  auto run = [&](std::size_t begin, std::size_t end) {
    for (Index x = begin; x < end; ++x) fill_source(g, x, {values.data() + x * n, n});
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (threads == 1) {
    run(0, n);
  } else {
    std::vector<std::jthread> workers;
    const std::size_t chunk = (n + threads - 1) / threads;
    for (std::size_t begin = 0; begin < n; begin += chunk) workers.emplace_back(run, begin, std::min(n, begin + chunk));
  }
  return StrongChainValues(n, std::move(values));
}

std::vector<Index> strong_chain_recurrent_set(const StrongChainValues& values, double eps) {
  if (!(eps > 0.0)) throw ArgumentError("eps must be positive");
  std::vector<Index> out;
  for (Index x = 0; x < values.size(); ++x) {
    if (values(x, x) < eps) out.push_back(x);
  }
  return out;
}

namespace {

template <class GapFor>
ScrFamilyResult intersect_family(std::size_t n, std::span<const MetricTransform> metrics, double eps, unsigned threads,
                                 GapFor gap_for) {
  if (metrics.empty()) throw ArgumentError("metric family must be nonempty");
  ScrFamilyResult out;
  std::vector<bool> keep(n, true);
  for (const MetricTransform& m : metrics) {
    std::vector<Index> scr = strong_chain_recurrent_set(strong_chain_values(gap_for(m), threads), eps);
    std::vector<bool> in(n, false);
    for (Index v : scr) in[v] = true;
    for (Index v = 0; v < n; ++v) keep[v] = keep[v] && in[v];
    out.metrics.push_back(m.name());
    out.per_metric.push_back(std::move(scr));
  }
  for (Index v = 0; v < n; ++v) {
    if (keep[v]) out.intersection.push_back(v);
  }
  return out;
}

}  // namespace

ScrFamilyResult scr_family_intersection(const GapMatrix& base, std::span<const MetricTransform> metrics, double eps,
                                        unsigned threads) {
  return intersect_family(base.size(), metrics, eps, threads,
                          [&](const MetricTransform& m) { return base.transformed(m); });
}

ScrFamilyResult scr_family_intersection(const AnySystem& system, std::span<const MetricTransform> metrics, double eps,
                                        unsigned threads) {
  return intersect_family(sample_count(system), metrics, eps, threads,
                          [&](const MetricTransform& m) { return build_gap_matrix(system, m, threads); });
}

}  // namespace chainscope
