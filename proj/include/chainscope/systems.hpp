#pragma once

#include "chainscope/errors.hpp"
#include "chainscope/interval_map.hpp"
#include "chainscope/metric.hpp"
#include "chainscope/symbolic.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace chainscope {

/// A self-map f on a metric space together with a finite ordered sample of
/// distinct states. Immutable after construction.
template <class State>
class EvaluableSystem {
 public:
  using state_type = State;
  using MapFn = std::function<State(const State&)>;
  using MetricFn = std::function<double(const State&, const State&)>;
  using LabelFn = std::function<std::string(const State&)>;

  EvaluableSystem(std::string name, MapFn eval, MetricFn dist, std::vector<State> samples, LabelFn label)
      : name_(std::move(name)),
        eval_(std::move(eval)),
        dist_(std::move(dist)),
        samples_(std::move(samples)),
        label_(std::move(label)) {
    if (samples_.empty()) throw ArgumentError("system '" + name_ + "' has no samples");
    std::vector<State> sorted = samples_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ArgumentError("system '" + name_ + "' has repeated samples");
    }
  }

  const std::string& name() const noexcept { return name_; }
  State eval(const State& s) const { return eval_(s); }
  double dist(const State& a, const State& b) const { return dist_(a, b); }
  std::span<const State> samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }
  const State& sample(std::size_t i) const { return samples_.at(i); }
  std::string label(const State& s) const { return label_(s); }

  /// Index of a sample equal to s (exact equality).
  std::optional<std::size_t> sample_index(const State& s) const {
    auto it = std::find(samples_.begin(), samples_.end(), s);
    if (it == samples_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - samples_.begin());
  }

  /// Same map and samples under the metric transform(dist).
  EvaluableSystem with_metric(const MetricTransform& transform) const {
    if (transform == MetricTransform::identity()) return *this;
    MetricFn base = dist_;
    return EvaluableSystem(name_, eval_, [base, transform](const State& a, const State& b) {
      return transform(base(a, b));
    }, samples_, label_);
  }

 private:
  std::string name_;
  MapFn eval_;
  MetricFn dist_;
  std::vector<State> samples_;
  LabelFn label_;
};

using IntervalSystem = EvaluableSystem<double>;
using CycleSystem = EvaluableSystem<std::int64_t>;
using ShiftSystem = EvaluableSystem<Word>;
using AnySystem = std::variant<IntervalSystem, CycleSystem, ShiftSystem>;

/// Parameters selecting and discretizing a builtin system.
struct SystemConfig {
  std::string system = "akin";  ///< akin | square | logistic4 | identity | cycle | sigma1 | sigma2
  std::size_t grid_n = 101;
  std::vector<double> required_points;
  std::size_t cycle_n = 3;
  std::size_t truncation_k = 6;
};

/// Interval system on the grid_sample of [0, 1] with metric |x - y|. The map's
/// single-point pieces (its breakpoints) are always added to the samples.
IntervalSystem make_interval_system(std::string name, PiecewiseMap map, std::size_t grid_n,
                                    std::span<const double> required = {});

/// Rotation x -> (x + 1) mod n on n equispaced points of a circle of length 1.
CycleSystem make_cycle_system(std::size_t n);

/// Shift map on the truncated universe of Sigma1 or Sigma2.
ShiftSystem make_shift_system(SubshiftId id, std::size_t truncation);

/// Builds the named builtin. Throws ArgumentError for unknown names or bad parameters.
AnySystem builtin_system(const SystemConfig& config);

const std::vector<std::string>& builtin_system_names();

std::size_t sample_count(const AnySystem& system);
std::string system_name(const AnySystem& system);
std::vector<std::string> sample_labels(const AnySystem& system);

/// Parses a state literal for a system: a real for interval systems, an
/// integer for cycles, a word such as "1inf" or "1^3 0^3 1^inf" for subshifts.
/// "#<i>" refers to sample i in any system. Returns the sample index; the
/// state must be one of the samples.
std::size_t resolve_sample(const AnySystem& system, std::string_view token);

}  // namespace chainscope
