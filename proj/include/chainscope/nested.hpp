#pragma once

#include "chainscope/gap_matrix.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chainscope {

/// Strictly decreasing positive thresholds eps_1 > eps_2 > ... > eps_L.
class Schedule {
 public:
  explicit Schedule(std::vector<double> levels);

  /// first, first/2, first/4, ... (count levels).
  static Schedule geometric(double first, std::size_t count);

  /// "geometric:<first>,<count>" or an explicit comma-separated list.
  static Schedule parse(std::string_view text);

  std::span<const double> levels() const noexcept { return levels_; }
  std::size_t size() const noexcept { return levels_.size(); }
  double operator[](std::size_t l) const { return levels_.at(l); }
  double finest() const noexcept { return levels_.back(); }

 private:
  std::vector<double> levels_;
};

/// One chain per level, all from source to target, with the point set of
/// each level contained in the point set of the next.
struct NestedFamily {
  Index source = 0;
  Index target = 0;
  std::vector<Chain> chains;
};

/// Walk with at least one edge from x to y in the eps-graph (optionally
/// induced on `within`) that visits every vertex of must_visit. Feasible iff
/// the components of must_visit + {x, y} form a chain under condensation
/// reachability with x's component first and y's last; the witness joins
/// shortest segments in that order.
std::optional<Chain> covering_walk_feasible(const GapMatrix& g, double eps, Index x, Index y,
                                            std::span<const Index> must_visit,
                                            std::optional<std::span<const Index>> within = std::nullopt);

struct RefineOutcome {
  std::optional<Chain> chain;
  /// First consecutive pair with no eps_next-chain, when refinement fails.
  std::optional<std::pair<Index, Index>> blocked;
};

/// Replaces each jump (x_j, x_{j+1}) by a shortest eps_next-chain (inside
/// `within` when given). The result keeps every input point.
RefineOutcome refine_chain(const GapMatrix& g, const Chain& chain, double eps_next,
                           std::optional<std::span<const Index>> within = std::nullopt);

enum class NestedMode { greedy, exact };
enum class NestedStatus { success, infeasible, undecided };

std::string to_string(NestedMode mode);
std::string to_string(NestedStatus status);
NestedMode parse_nested_mode(std::string_view text);

struct NestedOptions {
  NestedMode mode = NestedMode::exact;
  /// Exact mode: longest witness walk accepted; 0 means 4n.
  std::size_t max_walk_length = 0;
  /// Greedy mode: refinement stops with "undecided" past this many chain points.
  std::size_t max_chain_points = 1'000'000;
  std::optional<std::span<const Index>> within;
};

struct Obstruction {
  std::size_t level = 0;  ///< 1-based
  std::vector<Index> must_visit;
  std::string reason;
};

struct NestedCertificate {
  NestedStatus status = NestedStatus::undecided;
  std::optional<NestedFamily> family;
  std::optional<Obstruction> obstruction;
};

/// Decides whether x reaches y by nested chains along the schedule.
///
/// greedy: the level-1 shortest chain, refined level by level. Sound but
/// incomplete; a blocked refinement is reported as undecided.
///
/// exact: a chain valid at the finest level is valid at every level, so a
/// family exists iff the finest-level covering problem is feasible. The
/// search walks levels coarse to fine and stops at the first level whose
/// covering problem has no solution, which is the obstruction reported.
NestedCertificate nested_decide(const GapMatrix& g, const Schedule& schedule, Index x, Index y,
                                const NestedOptions& options = {});

/// Per-level validity, endpoints, and point-set containment between levels.
bool verify_nested(const NestedFamily& family, const GapMatrix& g, const Schedule& schedule);

struct NestedTransitivity {
  NestedStatus status = NestedStatus::success;  ///< success iff every ordered pair succeeded
  std::optional<std::pair<Index, Index>> failing_pair;

  bool holds() const noexcept { return status == NestedStatus::success; }
};

/// nested_decide over every ordered pair of M (x == y included).
NestedTransitivity nested_transitive_check(const GapMatrix& g, const Schedule& schedule, std::span<const Index> M,
                                           const NestedOptions& options = {});

}  // namespace chainscope
