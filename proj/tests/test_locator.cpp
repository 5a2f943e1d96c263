#include "chainscope/errors.hpp"
#include "chainscope/locator.hpp"
#include "chainscope/relations.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace chainscope;

namespace {

AnySystem make(const std::string& name, std::size_t grid_n = 101, std::size_t cycle_n = 3) {
  SystemConfig c;
  c.system = name;
  c.grid_n = grid_n;
  c.cycle_n = cycle_n;
  return builtin_system(c);
}

}  // namespace

TEST_CASE("projected orbits") {
  GapMatrix cyc = build_gap_matrix(make("cycle", 0, 3));
  ProjectedOrbit o = locate_cr(cyc, 0);
  CHECK(o.steps == std::vector<Index>{0, 1, 2, 0});
  CHECK(o.cycle == std::vector<Index>{0, 1, 2});
  CHECK(o.eps_star == 0.0);
  CHECK_FALSE(o.artifact);

  GapMatrix sq = build_gap_matrix(make("square", 5));
  ProjectedOrbit s = locate_cr(sq, 3);
  CHECK(s.steps == std::vector<Index>{3, 2, 1, 0, 0});
  CHECK(s.cycle_start == 3);
  CHECK(s.cycle == std::vector<Index>{0});
  CHECK(s.eps_star == 0.0);
  CHECK(s.rho == 0.0625);

  // f(0.01) = 0.0051 snaps back to 0.01, a fixed point of the projection only.
  GapMatrix akin = build_gap_matrix(make("akin", 101));
  ProjectedOrbit a = locate_cr(akin, 1);
  CHECK(a.cycle == std::vector<Index>{1});
  CHECK(a.eps_star == doctest::Approx(0.0049).epsilon(1e-12));
  CHECK(a.artifact);
  CHECK(a.eps_star <= a.rho);
  CHECK_THROWS_AS(locate_cr(akin, 101), ArgumentError);
}

TEST_CASE("projection ties go to the smallest index") {
  GapMatrix g(3, {1, 0.5, 0.5, 0, 0, 1, 1, 1, 1});
  CHECK(projection(g) == std::vector<Index>{1, 0, 0});
}

TEST_CASE("locating every terminal component") {
  GapMatrix sq = build_gap_matrix(make("square", 5));
  auto comps = locate_all_components(sq, 0.3);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].members == std::vector<Index>{0, 1});
  CHECK(comps[0].witness.source() == 0);
  CHECK(comps[0].witness.target() == 0);
  CHECK(comps[0].witness.valid_at(sq, 0.3));
  CHECK(comps[0].basin.size() == 5);

  GapMatrix id = build_gap_matrix(make("identity", 3));
  auto singles = locate_all_components(id, 0.1);
  REQUIRE(singles.size() == 3);
  for (Index i = 0; i < 3; ++i) {
    CHECK(singles[i].members == std::vector<Index>{i});
    CHECK(singles[i].witness.points == std::vector<Index>{i, i});
    CHECK(singles[i].basin == std::vector<Index>{i});
  }

  GapMatrix akin = build_gap_matrix(make("akin", 101));
  auto ak = locate_all_components(akin, 0.05);
  REQUIRE(ak.size() == 1);
  CHECK(ak[0].members.front() == 0);
  for (Index v : {25, 50, 75}) CHECK(std::binary_search(ak[0].members.begin(), ak[0].members.end(), Index(v)));
}

TEST_CASE("locate_all_components needs eps above the resolution") {
  GapMatrix sq = build_gap_matrix(make("square", 5));
  CHECK_THROWS_AS(locate_all_components(sq, 0.0625), PreconditionError);
  try {
    locate_all_components(sq, 0.05);
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("rho = 0.0625") != std::string::npos);
  }
}

TEST_CASE("projected cycles are chain recurrent just above eps_star") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 50;
    GapMatrix g = oracle::random_matrix(rng, n, trial % 2 == 0);
    for (Index x = 0; x < n; x += 1 + n / 7) {
      ProjectedOrbit o = locate_cr(g, x);
      CHECK(o.steps.size() <= n + 1);
      CHECK(o.steps.front() == x);
      CHECK(o.eps_star <= o.rho);
      CHECK(o.artifact == (o.eps_star > 0.0));
      const double eps = std::nextafter(o.eps_star, 1.0) + 1e-12;
      auto cr = chain_recurrent_set(g, eps);
      for (Index v : o.cycle) CHECK(std::binary_search(cr.begin(), cr.end(), v));
      // The approach to the cycle is a chain at its own largest gap.
      double approach = 0.0;
      for (std::size_t i = 0; i + 1 < o.steps.size(); ++i) approach = std::max(approach, g(o.steps[i], o.steps[i + 1]));
      const Index entry = o.steps[o.cycle_start];
      CHECK(chain_reaches(g, std::nextafter(approach, 2.0), x, entry).has_value());
    }
    for (double eps : oracle::thresholds_above(g, g.resolution())) {
      if (eps <= g.resolution()) continue;
      auto comps = locate_all_components(g, eps);
      CHECK_FALSE(comps.empty());
      std::vector<bool> covered(n, false);
      for (const auto& c : comps) {
        CHECK(c.witness.valid_at(g, eps));
        CHECK(c.witness.source() == c.witness.target());
        for (Index v : c.basin) covered[v] = true;
      }
      CHECK(std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }));
    }
  }
}
