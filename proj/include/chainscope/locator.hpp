#pragma once

#include "chainscope/gap_matrix.hpp"

#include <vector>

namespace chainscope {

/// Orbit of the projected map F(a) = argmin_b gap(a, b) (ties to the smallest
/// index), followed until the first revisit.
struct ProjectedOrbit {
  Index seed = 0;
  std::vector<Index> steps;  ///< seed first, ends with the revisited index
  std::size_t cycle_start = 0;
  std::vector<Index> cycle;
  double eps_star = 0.0;  ///< max gap along the cycle
  double rho = 0.0;       ///< projection resolution of the matrix
  /// The cycle only exists because of the projection: eps_star > 0 means no
  /// exact sampled cycle, and eps_star never exceeds rho.
  bool artifact = false;
};

/// F(a) for every a.
std::vector<Index> projection(const GapMatrix& g);

ProjectedOrbit locate_cr(const GapMatrix& g, Index x0);

struct LocatedComponent {
  std::size_t component = 0;
  std::vector<Index> members;
  Chain witness;              ///< closed walk inside the component
  std::vector<Index> basin;   ///< vertices that reach the component
};

/// Every terminal component of the eps-graph with a witness cycle and basin.
/// Requires eps > rho.
std::vector<LocatedComponent> locate_all_components(const GapMatrix& g, double eps);

}  // namespace chainscope
