#pragma once

#include <string>
#include <string_view>

namespace chainscope {

/// A monotone transform T applied to a base metric d, producing the metric
/// T(d(., .)). Only transforms that yield a metric inducing the same topology
/// can be constructed:
///   d         identity
///   sqrt      sqrt(d)
///   min:c     min(d, c), c > 0
///   scale:c   c * d, c > 0
class MetricTransform {
 public:
  enum class Kind { identity, sqrt, cap, scale };

  MetricTransform() = default;

  static MetricTransform identity() { return {}; }
  static MetricTransform square_root() { return MetricTransform(Kind::sqrt, 0.0); }
  static MetricTransform cap(double c);
  static MetricTransform scale(double c);

  /// Parses "d", "sqrt", "min:<c>" or "scale:<c>"; anything else is an ArgumentError.
  static MetricTransform parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  double parameter() const noexcept { return parameter_; }

  double operator()(double d) const;

  std::string name() const;

  friend bool operator==(const MetricTransform&, const MetricTransform&) = default;

 private:
  MetricTransform(Kind kind, double parameter) : kind_(kind), parameter_(parameter) {}

  Kind kind_ = Kind::identity;
  double parameter_ = 0.0;
};

}  // namespace chainscope
