#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace chainscope {

/// A subset of the real line: a single point (lo == hi, both closed) or an
/// interval with explicit endpoint ownership.
struct IntervalPart {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_closed = true;
  bool hi_closed = true;

  static IntervalPart point(double x) { return {x, x, true, true}; }
  static IntervalPart closed(double lo, double hi) { return {lo, hi, true, true}; }
  static IntervalPart open(double lo, double hi) { return {lo, hi, false, false}; }
  static IntervalPart left_open(double lo, double hi) { return {lo, hi, false, true}; }
  static IntervalPart right_open(double lo, double hi) { return {lo, hi, true, false}; }

  bool is_point() const noexcept { return lo == hi; }
  bool contains(double x) const noexcept {
    return (lo < x || (lo_closed && lo == x)) && (x < hi || (hi_closed && hi == x));
  }
  std::string describe() const;
};

/// One branch of a piecewise map. `image` bounds the branch's values; a
/// floating-point result that rounds onto an excluded endpoint is moved to the
/// nearest representable point inside, so limit points the exact map never
/// reaches stay unreached.
struct MapPiece {
  IntervalPart part;
  std::function<double(double)> formula;
  IntervalPart image;
  std::string text;
};

/// Self-map of [lo, hi] defined piece by piece. The pieces must partition the
/// domain exactly; this is checked at construction.
class PiecewiseMap {
 public:
  PiecewiseMap(double lo, double hi, std::vector<MapPiece> pieces);

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  std::span<const MapPiece> pieces() const noexcept { return pieces_; }

  /// Index of the unique piece containing x. Throws DomainError outside [lo, hi].
  std::size_t piece_index(double x) const;

  double operator()(double x) const;

 private:
  double lo_;
  double hi_;
  std::vector<MapPiece> pieces_;
};

/// Value of the map at x (same as map(x)).
inline double interval_eval(const PiecewiseMap& map, double x) { return map(x); }

/// The discontinuous four-piece counterexample map on [0, 1]:
///   3/4 at 0, x(x + 1/2) on (0, 1/2), 1/4 at 1/2, x/2 + 1/4 on (1/2, 1].
PiecewiseMap akin_map();
PiecewiseMap square_map();
PiecewiseMap logistic4_map();
PiecewiseMap identity_map();

/// The n-point uniform grid on [lo, hi] merged with `required`, sorted and
/// deduplicated. Grid points are lo + (hi - lo) * (i / (n - 1)), so on [0, 1]
/// the point i/(n-1) is the correctly rounded decimal.
std::vector<double> grid_sample(double lo, double hi, std::size_t n, std::span<const double> required = {});

}  // namespace chainscope
