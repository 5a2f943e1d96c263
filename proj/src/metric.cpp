#include "chainscope/metric.hpp"

#include "chainscope/errors.hpp"
#include "chainscope/format.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace chainscope {

namespace {

double parse_positive(std::string_view text, std::string_view what) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ArgumentError("metric '" + std::string(what) + "': cannot parse parameter '" + std::string(text) + "'");
  }
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw ArgumentError("metric '" + std::string(what) + "' needs a positive finite parameter");
  }
  return value;
}

}  // namespace

MetricTransform MetricTransform::cap(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw ArgumentError("min(d, c) is a metric only for c > 0");
  return MetricTransform(Kind::cap, c);
}

MetricTransform MetricTransform::scale(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw ArgumentError("c * d is a metric only for c > 0");
  return MetricTransform(Kind::scale, c);
}

MetricTransform MetricTransform::parse(std::string_view text) {
  if (text == "d" || text == "identity") return identity();
  if (text == "sqrt" || text == "sqrt(d)") return square_root();
  if (text.starts_with("min:")) return cap(parse_positive(text.substr(4), text));
  if (text.starts_with("scale:")) return scale(parse_positive(text.substr(6), text));
  throw ArgumentError("unknown or non-metric transform '" + std::string(text) +
                      "' (expected d, sqrt, min:<c> or scale:<c>)");
}

double MetricTransform::operator()(double d) const {
  switch (kind_) {
    case Kind::identity:
      return d;
    case Kind::sqrt:
      return std::sqrt(d);
    case Kind::cap:
      return std::min(d, parameter_);
    case Kind::scale:
      return parameter_ * d;
  }
  return d;
}

std::string MetricTransform::name() const {
  switch (kind_) {
    case Kind::identity:
      return "d";
    case Kind::sqrt:
      return "sqrt";
    case Kind::cap:
      return "min:" + format_real(parameter_);
    case Kind::scale:
      return "scale:" + format_real(parameter_);
  }
  return "d";
}

}  // namespace chainscope
