#pragma once

#include "chainscope/gap_matrix.hpp"
#include "chainscope/systems.hpp"

#include <span>
#include <string>
#include <vector>

namespace chainscope {

/// value(x, y) = minimum total jump cost over walks from x to y with at least
/// one edge. x has a strong eps-chain to y iff value(x, y) < eps.
class StrongChainValues {
 public:
  StrongChainValues(std::size_t n, std::vector<double> values) : n_(n), values_(std::move(values)) {}

  std::size_t size() const noexcept { return n_; }
  double operator()(Index x, Index y) const noexcept { return values_[x * n_ + y]; }
  std::span<const double> entries() const noexcept { return values_; }

 private:
  std::size_t n_;
  std::vector<double> values_;
};

/// Exact minimal walk costs: one relaxation step out of x, then dense
/// Dijkstra over nonnegative gaps. Sources are independent and are split
/// across `threads` workers.
StrongChainValues strong_chain_values(const GapMatrix& g, unsigned threads = 1);

/// {x : value(x, x) < eps}.
std::vector<Index> strong_chain_recurrent_set(const StrongChainValues& values, double eps);

struct ScrFamilyResult {
  std::vector<std::string> metrics;
  std::vector<std::vector<Index>> per_metric;
  /// Intersection over the family: contains the generalized recurrent set's
  /// trace on the samples at this eps, possibly with extra points.
  std::vector<Index> intersection;
};

/// Strong-chain-recurrent sets under each metric of the family, and their intersection.
ScrFamilyResult scr_family_intersection(const AnySystem& system, std::span<const MetricTransform> metrics, double eps,
                                        unsigned threads = 1);

/// Same, starting from the gap matrix of the base metric (each transform is
/// applied entry-wise, which equals rebuilding under the transformed metric).
ScrFamilyResult scr_family_intersection(const GapMatrix& base, std::span<const MetricTransform> metrics, double eps,
                                        unsigned threads = 1);

}  // namespace chainscope
