#pragma once

#include "chainscope/metric.hpp"
#include "chainscope/systems.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <thread>
#include <vector>

namespace chainscope {

using Index = std::size_t;

/// gap(a, b) = d(f(a), b) over an ordered sample set: the cost of the jump
/// from sample a to sample b in a pseudo-orbit. Thresholding at eps gives the
/// eps-chain digraph {(a, b) : gap(a, b) < eps}.
class GapMatrix {
 public:
  GapMatrix(std::size_t n, std::vector<double> entries, std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return n_; }
  double operator()(Index a, Index b) const noexcept { return entries_[a * n_ + b]; }
  std::span<const double> row(Index a) const noexcept { return {entries_.data() + a * n_, n_}; }
  std::span<const double> entries() const noexcept { return entries_; }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(Index a) const;

  /// Smallest gap leaving a; a has an out-edge at eps iff eps > min_outgoing(a).
  double min_outgoing(Index a) const;

  /// Projection resolution rho = max_a min_b gap(a, b): for eps > rho every
  /// vertex has an out-edge.
  double resolution() const;

  /// Smallest entry; the eps-graph is edgeless for eps <= min_gap().
  double min_gap() const;

  /// Submatrix on `subset` (in the given order); labels follow.
  GapMatrix induced(std::span<const Index> subset) const;

  /// Entry-wise transform(gap), i.e. the gap matrix of the same system under
  /// the transformed metric.
  GapMatrix transformed(const MetricTransform& transform) const;

 private:
  std::size_t n_;
  std::vector<double> entries_;
  std::vector<std::string> labels_;
};

/// Builds gap(a, b) = dist(eval(a), b). Rows are split across `threads` workers;
/// the result does not depend on the thread count.
template <class State>
GapMatrix build_gap_matrix(const EvaluableSystem<State>& sys, unsigned threads = 1) {
  const std::size_t n = sys.size();
  if (n < 2) throw PreconditionError("gap matrix needs at least 2 samples");
  const auto samples = sys.samples();
  std::vector<State> images;
  images.reserve(n);
  for (const State& s : samples) images.push_back(sys.eval(s));

  std::vector<double> entries(n * n);
  auto fill_rows = [&](std::size_t begin, std::size_t end) {
    for (std::size_t a = begin; a < end; ++a) {
      for (std::size_t b = 0; b < n; ++b) entries[a * n + b] = sys.dist(images[a], samples[b]);
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (threads == 1) {
    fill_rows(0, n);
  } else {
    std::vector<std::jthread> workers;
    const std::size_t chunk = (n + threads - 1) / threads;
    for (std::size_t begin = 0; begin < n; begin += chunk) {
      workers.emplace_back(fill_rows, begin, std::min(n, begin + chunk));
    }
  }

  std::vector<std::string> labels;
  labels.reserve(n);
  for (const State& s : samples) labels.push_back(sys.label(s));
  return GapMatrix(n, std::move(entries), std::move(labels));
}

GapMatrix build_gap_matrix(const AnySystem& system, const MetricTransform& metric = {}, unsigned threads = 1);

/// A pseudo-orbit through sample indices: x_0 = source, x_n = target, n >= 1.
struct Chain {
  std::vector<Index> points;

  Index source() const { return points.front(); }
  Index target() const { return points.back(); }
  std::size_t edges() const { return points.empty() ? 0 : points.size() - 1; }

  /// Valid at eps iff it has at least one edge and every jump is strictly below eps.
  bool valid_at(const GapMatrix& g, double eps) const;

  /// Largest jump; the chain is valid at every eps above it.
  double max_gap(const GapMatrix& g) const;

  /// Sum of jumps.
  double cost(const GapMatrix& g) const;

  friend bool operator==(const Chain&, const Chain&) = default;
};

}  // namespace chainscope
