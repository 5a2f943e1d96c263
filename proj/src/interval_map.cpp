#include "chainscope/interval_map.hpp"

#include "chainscope/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace chainscope {

std::string IntervalPart::describe() const {
  std::ostringstream os;
  os.precision(17);
  if (is_point()) {
    os << "{" << lo << "}";
  } else {
    os << (lo_closed ? '[' : '(') << lo << ", " << hi << (hi_closed ? ']' : ')');
  }
  return os.str();
}

PiecewiseMap::PiecewiseMap(double lo, double hi, std::vector<MapPiece> pieces)
    : lo_(lo), hi_(hi), pieces_(std::move(pieces)) {
  if (!(lo < hi)) throw ArgumentError("piecewise map domain must satisfy lo < hi");
  if (pieces_.empty()) throw ArgumentError("piecewise map needs at least one piece");
  std::sort(pieces_.begin(), pieces_.end(), [](const MapPiece& a, const MapPiece& b) {
    if (a.part.lo != b.part.lo) return a.part.lo < b.part.lo;
    // a point piece at x precedes an interval that starts (open) at x
    return a.part.is_point() && !b.part.is_point();
  });

  for (const MapPiece& p : pieces_) {
    if (p.part.hi < p.part.lo || (p.part.is_point() && !(p.part.lo_closed && p.part.hi_closed))) {
      throw ArgumentError("malformed piece " + p.part.describe());
    }
    if (p.image.lo < lo_ || p.image.hi > hi_) {
      throw ArgumentError("piece " + p.part.describe() + " has image " + p.image.describe() +
                          " outside the domain");
    }
    if (!p.formula) throw ArgumentError("piece " + p.part.describe() + " has no formula");
  }

  const IntervalPart& first = pieces_.front().part;
  if (first.lo != lo_ || !first.lo_closed) {
    throw ArgumentError("pieces do not cover the left endpoint of the domain");
  }
  const IntervalPart& last = pieces_.back().part;
  if (last.hi != hi_ || !last.hi_closed) {
    throw ArgumentError("pieces do not cover the right endpoint of the domain");
  }
  for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
    const IntervalPart& a = pieces_[i].part;
    const IntervalPart& b = pieces_[i + 1].part;
    if (a.hi != b.lo) {
      throw ArgumentError("gap or overlap between " + a.describe() + " and " + b.describe());
    }
    if (a.hi_closed == b.lo_closed) {
      throw ArgumentError("breakpoint " + std::to_string(a.hi) + " is " +
                          (a.hi_closed ? "owned twice" : "not owned") + " by " + a.describe() +
                          " and " + b.describe());
    }
  }
}

std::size_t PiecewiseMap::piece_index(double x) const {
  if (!(x >= lo_ && x <= hi_)) {
    throw DomainError("state " + std::to_string(x) + " outside the map domain");
  }
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (pieces_[i].part.contains(x)) return i;
  }
  throw std::logic_error("piecewise map partition check missed a point");
}

double PiecewiseMap::operator()(double x) const {
  const MapPiece& piece = pieces_[piece_index(x)];
  double y = piece.formula(x);
  const IntervalPart& img = piece.image;
  if (!img.contains(y)) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (y <= img.lo) {
      y = img.lo_closed ? img.lo : std::nextafter(img.lo, inf);
    } else {
      y = img.hi_closed ? img.hi : std::nextafter(img.hi, -inf);
    }
  }
  return y;
}

PiecewiseMap akin_map() {
  return PiecewiseMap(0.0, 1.0,
                      {
                          {IntervalPart::point(0.0), [](double) { return 0.75; }, IntervalPart::point(0.75), "3/4"},
                          {IntervalPart::open(0.0, 0.5), [](double x) { return x * (x + 0.5); },
                           IntervalPart::open(0.0, 0.5), "x(x+1/2)"},
                          {IntervalPart::point(0.5), [](double) { return 0.25; }, IntervalPart::point(0.25), "1/4"},
                          {IntervalPart::left_open(0.5, 1.0), [](double x) { return 0.5 * x + 0.25; },
                           IntervalPart::left_open(0.5, 0.75), "x/2+1/4"},
                      });
}

PiecewiseMap square_map() {
  return PiecewiseMap(0.0, 1.0, {{IntervalPart::closed(0.0, 1.0), [](double x) { return x * x; },
                                  IntervalPart::closed(0.0, 1.0), "x^2"}});
}

PiecewiseMap logistic4_map() {
  return PiecewiseMap(0.0, 1.0, {{IntervalPart::closed(0.0, 1.0), [](double x) { return 4.0 * x * (1.0 - x); },
                                  IntervalPart::closed(0.0, 1.0), "4x(1-x)"}});
}

PiecewiseMap identity_map() {
  return PiecewiseMap(0.0, 1.0, {{IntervalPart::closed(0.0, 1.0), [](double x) { return x; },
                                  IntervalPart::closed(0.0, 1.0), "x"}});
}

std::vector<double> grid_sample(double lo, double hi, std::size_t n, std::span<const double> required) {
  if (n < 2) throw ArgumentError("grid needs at least 2 points, got " + std::to_string(n));
  if (!(lo < hi)) throw ArgumentError("grid domain must satisfy lo < hi");
  std::vector<double> out;
  out.reserve(n + required.size());
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(lo + (hi - lo) * (static_cast<double>(i) / static_cast<double>(n - 1)));
  }
  out.back() = hi;
  for (double r : required) {
    if (!(r >= lo && r <= hi)) {
      throw ArgumentError("required point " + std::to_string(r) + " outside the grid domain");
    }
    out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace chainscope
