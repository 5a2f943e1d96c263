#include "chainscope/gap_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace chainscope {

GapMatrix::GapMatrix(std::size_t n, std::vector<double> entries, std::vector<std::string> labels)
    : n_(n), entries_(std::move(entries)), labels_(std::move(labels)) {
  if (n_ == 0) throw ArgumentError("gap matrix must be non-empty");
  if (entries_.size() != n_ * n_) throw ArgumentError("gap matrix needs n*n entries");
  if (!labels_.empty() && labels_.size() != n_) throw ArgumentError("gap matrix needs one label per sample");
  for (double e : entries_) {
    if (!(e >= 0.0) || !std::isfinite(e)) throw ArgumentError("gap matrix entries must be finite and >= 0");
  }
}

std::string GapMatrix::label(Index a) const {
  if (labels_.empty()) return "#" + std::to_string(a);
  return labels_.at(a);
}

double GapMatrix::min_outgoing(Index a) const {
  auto r = row(a);
  return *std::min_element(r.begin(), r.end());
}

double GapMatrix::resolution() const {
  double rho = 0.0;
  for (Index a = 0; a < n_; ++a) rho = std::max(rho, min_outgoing(a));
  return rho;
}

double GapMatrix::min_gap() const { return *std::min_element(entries_.begin(), entries_.end()); }

GapMatrix GapMatrix::induced(std::span<const Index> subset) const {
  const std::size_t m = subset.size();
  std::vector<double> entries(m * m);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) {
    if (subset[i] >= n_) throw ArgumentError("induced subset index out of range");
    for (std::size_t j = 0; j < m; ++j) entries[i * m + j] = (*this)(subset[i], subset[j]);
    if (!labels_.empty()) labels.push_back(labels_[subset[i]]);
  }
  return GapMatrix(m, std::move(entries), std::move(labels));
}

GapMatrix GapMatrix::transformed(const MetricTransform& transform) const {
  std::vector<double> entries(entries_.size());
  std::transform(entries_.begin(), entries_.end(), entries.begin(), [&](double e) { return transform(e); });
  return GapMatrix(n_, std::move(entries), labels_);
}

GapMatrix build_gap_matrix(const AnySystem& system, const MetricTransform& metric, unsigned threads) {
  return std::visit([&](const auto& s) { return build_gap_matrix(s.with_metric(metric), threads); }, system);
}

bool Chain::valid_at(const GapMatrix& g, double eps) const {
  if (points.size() < 2) return false;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if (points[i] >= g.size() || points[i + 1] >= g.size()) return false;
    if (!(g(points[i], points[i + 1]) < eps)) return false;
  }
  return true;
}

double Chain::max_gap(const GapMatrix& g) const {
  double worst = 0.0;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) worst = std::max(worst, g(points[i], points[i + 1]));
  return worst;
}

double Chain::cost(const GapMatrix& g) const {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) total += g(points[i], points[i + 1]);
  return total;
}

}  // namespace chainscope
