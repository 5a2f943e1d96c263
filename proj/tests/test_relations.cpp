#include "chainscope/errors.hpp"
#include "chainscope/relations.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace chainscope;

namespace {

AnySystem make(const std::string& name, std::size_t grid_n = 101, std::size_t cycle_n = 3) {
  SystemConfig c;
  c.system = name;
  c.grid_n = grid_n;
  c.cycle_n = cycle_n;
  return builtin_system(c);
}

Index at(const AnySystem& sys, const std::string& token) { return resolve_sample(sys, token); }

}  // namespace

TEST_CASE("gap matrix entries") {
  AnySystem id = make("identity", 3);
  GapMatrix g = build_gap_matrix(id);
  CHECK(g(at(id, "0"), at(id, "1")) == 1.0);
  CHECK(g(at(id, "0"), at(id, "0.5")) == 0.5);
  for (Index a = 0; a < 3; ++a) CHECK(g(a, a) == 0.0);

  GapMatrix cyc = build_gap_matrix(make("cycle", 0, 3));
  for (Index a = 0; a < 3; ++a) CHECK(cyc(a, (a + 1) % 3) == 0.0);

  AnySystem sq = make("square", 5);
  CHECK(build_gap_matrix(sq)(at(sq, "1"), at(sq, "0.75")) == 0.25);
  CHECK(g.label(2) == "1");
}

TEST_CASE("gap matrix validation and threading") {
  CHECK_THROWS_AS(GapMatrix(2, {0, 1, 2}), ArgumentError);
  CHECK_THROWS_AS(GapMatrix(2, {0, -1, 0, 0}), ArgumentError);
  CHECK_THROWS_AS(GapMatrix(2, {0, NAN, 0, 0}), ArgumentError);
  AnySystem akin = make("akin", 301);
  GapMatrix one = build_gap_matrix(akin, {}, 1);
  GapMatrix many = build_gap_matrix(akin, {}, 7);
  CHECK(std::equal(one.entries().begin(), one.entries().end(), many.entries().begin()));
}

TEST_CASE("chain_reaches on the square grid") {
  AnySystem sq = make("square", 5);
  GapMatrix g = build_gap_matrix(sq);
  auto c = chain_reaches(g, 0.3, at(sq, "1"), at(sq, "0"));
  REQUIRE(c.has_value());
  // Shortest walk; the oracle confirms no 2-edge walk exists and this is the
  // lexicographically smallest 3-edge one.
  CHECK(c->points == std::vector<Index>{4, 3, 2, 0});
  CHECK(g(4, 3) == 0.25);
  CHECK(g(3, 2) == 0.0625);
  CHECK(g(2, 0) == 0.25);
  CHECK(oracle::shortest_lex_walk(g, 0.3, 4, 0) == c->points);
  CHECK(c->valid_at(g, 0.3));
  CHECK_FALSE(c->valid_at(g, 0.25));

  const Index sub[] = {at(sq, "0"), at(sq, "1")};
  CHECK_FALSE(chain_reaches(g.induced(sub), 0.5, 1, 0).has_value());
}

TEST_CASE("chain_reaches on cycle(3) needs a genuine closed walk") {
  GapMatrix g = build_gap_matrix(make("cycle", 0, 3));
  auto c = chain_reaches(g, 0.01, 0, 0);
  REQUIRE(c.has_value());
  CHECK(c->points == std::vector<Index>{0, 1, 2, 0});
  CHECK(c->cost(g) == 0.0);
  CHECK_THROWS_AS(chain_reaches(g, 0.0, 0, 0), ArgumentError);
  CHECK_THROWS_AS(chain_reaches(g, 0.1, 0, 3), ArgumentError);
}

TEST_CASE("chain recurrent sets") {
  CHECK(chain_recurrent_set(build_gap_matrix(make("cycle", 0, 3)), 0.001) == std::vector<Index>{0, 1, 2});
  CHECK(chain_recurrent_set(build_gap_matrix(make("identity", 3)), 0.1) == std::vector<Index>{0, 1, 2});

  AnySystem akin = make("akin", 101);
  GapMatrix g = build_gap_matrix(akin);
  auto cr = chain_recurrent_set(g, 0.05);
  const Index zero = at(akin, "0");
  CHECK(std::binary_search(cr.begin(), cr.end(), zero));
  // The loop through 0 climbs to the upper branch, drops back through 1/2 and
  // then straight down to 0.2.
  auto loop = chain_reaches(g, 0.05, zero, zero);
  REQUIRE(loop.has_value());
  CHECK(loop->points == std::vector<Index>{0, 71, 56, 50, 20, 9, 1, 0});
  CHECK(loop->valid_at(g, 0.05));
}

TEST_CASE("scc structure examples") {
  SccDecomposition cyc = scc_terminal_components(build_gap_matrix(make("cycle", 0, 3)), 0.01);
  CHECK(cyc.count() == 1);
  CHECK(cyc.terminal[0]);
  CHECK(cyc.nontrivial[0]);

  AnySystem sq = make("square", 5);
  GapMatrix g = build_gap_matrix(sq);
  SccDecomposition s = scc_terminal_components(g, 0.3);
  const std::size_t c0 = s.component_of[at(sq, "0")];
  CHECK(s.component_of[at(sq, "0.25")] == c0);
  CHECK(s.members[c0] == std::vector<Index>{0, 1});
  CHECK(s.terminal[c0]);
  const std::size_t c1 = s.component_of[at(sq, "1")];
  CHECK(s.members[c1] == std::vector<Index>{4});
  CHECK(s.nontrivial[c1]);
  CHECK_FALSE(s.terminal[c1]);
  std::size_t terminal = 0;
  for (std::size_t i = 0; i < s.count(); ++i) terminal += s.terminal[i];
  CHECK(terminal == 1);

  SccDecomposition id = scc_terminal_components(build_gap_matrix(make("identity", 3)), 0.1);
  CHECK(id.count() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(id.terminal[i]);
    CHECK(id.nontrivial[i]);
  }
}

TEST_CASE("missing out-edges are reported with the eps that fixes them") {
  AnySystem sq = make("square", 5);
  GapMatrix g = build_gap_matrix(sq);
  try {
    scc_terminal_components(g, 0.05);
    FAIL("expected MissingOutEdges");
  } catch (const MissingOutEdges& e) {
    REQUIRE(e.vertices().size() == 2);
    CHECK(e.vertices()[0].vertex == at(sq, "0.25"));
    CHECK(e.vertices()[1].vertex == at(sq, "0.75"));
    CHECK(e.required_eps() == 0.0625);
  }
  CHECK_NOTHROW(scc_decomposition(g, 0.05));
  CHECK_NOTHROW(scc_terminal_components(g, std::nextafter(0.0625, 1.0)));
}

TEST_CASE("reach_transitive") {
  AnySystem sq = make("square", 5);
  GapMatrix g = build_gap_matrix(sq);
  TerminalReach r = reach_transitive(g, 0.3, at(sq, "1"));
  CHECK(r.members == std::vector<Index>{0, 1});
  CHECK(r.witness.points == std::vector<Index>{4, 3, 2, 0});
  CHECK(r.witness.valid_at(g, 0.3));

  GapMatrix cyc = build_gap_matrix(make("cycle", 0, 3));
  TerminalReach rc = reach_transitive(cyc, 0.01, 2);
  CHECK(rc.members == std::vector<Index>{0, 1, 2});
  CHECK(rc.witness.points == std::vector<Index>{2, 0});

  AnySystem akin = make("akin", 101);
  GapMatrix ga = build_gap_matrix(akin);
  TerminalReach ra = reach_transitive(ga, 0.05, at(akin, "0.33"));
  CHECK(std::binary_search(ra.members.begin(), ra.members.end(), at(akin, "0")));
  CHECK(ra.witness.valid_at(ga, 0.05));
}

TEST_CASE("orbit relations") {
  auto id = std::get<IntervalSystem>(make("identity", 11));
  for (double x : id.samples()) CHECK(relation_Ntilde(id, x, x, 0.01, 5).found);

  auto sq = std::get<IntervalSystem>(make("square", 11));
  auto r = relation_R(sq, 0.9, 0.0, 0.1, 10);
  CHECK(r.found);
  CHECK(r.k == 5);
  CHECK_FALSE(relation_R(sq, 0.9, 0.0, 0.1, 4).found);
  CHECK(relation_O(sq, 0.5, 0.0625, 3).found);
  CHECK(relation_O(sq, 0.5, 0.0625, 3).k == 2);
  CHECK_FALSE(relation_O(sq, 0.5, 0.0, 10).found);

  SystemConfig c;
  c.system = "akin";
  c.grid_n = 1001;
  auto akin = std::get<IntervalSystem>(builtin_system(c));
  CHECK_FALSE(relation_Ntilde(akin, 0.0, 0.0, 0.01, 10000).found);
  CHECK(relation_R(akin, 0.5, 0.0, 0.01, 100).found);
}

TEST_CASE("Ñ witnesses build raw pseudo-orbits") {
  auto sq = std::get<IntervalSystem>(make("square", 21));
  for (double x : sq.samples()) {
    for (double y : sq.samples()) {
      auto w = relation_Ntilde(sq, x, y, 0.1, 30);
      if (!w.found) continue;
      auto chain = ntilde_chain(sq, x, y, w);
      CHECK(raw_chain_valid<double>(sq, chain, w.k >= 1 ? 0.1 : 0.2));
    }
  }
}

TEST_CASE("internal chain transitivity") {
  AnySystem lg = make("logistic4", 101);
  const Index M[] = {at(lg, "0"), at(lg, "0.75")};
  CHECK_FALSE(internally_chain_transitive(build_gap_matrix(lg), 0.5, M));
  const Index all[] = {0, 1, 2};
  CHECK(internally_chain_transitive(build_gap_matrix(make("cycle", 0, 3)), 0.001, all));
  const Index even[] = {0, 2};
  CHECK_FALSE(internally_chain_transitive(build_gap_matrix(make("cycle", 0, 4)), 0.1, even));
  CHECK_THROWS_AS(internally_chain_transitive(build_gap_matrix(make("cycle", 0, 4)), 0.1, {}), ArgumentError);
}

TEST_CASE("oracle equivalence: every digraph on up to 3 vertices") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const GapMatrix& g : oracle::all_digraphs(n)) {
      CHECK(chain_recurrent_set(g, 0.5) == oracle::cr_set(g, 0.5));
      for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
          auto c = chain_reaches(g, 0.5, x, y);
          auto o = oracle::shortest_lex_walk(g, 0.5, x, y);
          REQUIRE(c.has_value() == o.has_value());
          if (c) CHECK(c->points == *o);
        }
      }
    }
  }
}

TEST_CASE("oracle equivalence: random matrices up to 7 vertices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + trial % 6;
    GapMatrix g = oracle::random_matrix(rng, n, trial % 2 == 0);
    for (double eps : oracle::thresholds_above(g, 0.0)) {
      CHECK(chain_recurrent_set(g, eps) == oracle::cr_set(g, eps));
      for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
          auto c = chain_reaches(g, eps, x, y);
          auto o = oracle::shortest_lex_walk(g, eps, x, y);
          REQUIRE(c.has_value() == o.has_value());
          if (c) CHECK(c->points == *o);
        }
      }
    }
  }
}

TEST_CASE("properties on random matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 20;
    GapMatrix g = oracle::random_matrix(rng, n, trial % 3 == 0);
    auto eps_list = oracle::thresholds_above(g, g.resolution());
    std::vector<Index> previous;
    for (double eps : eps_list) {
      auto cr = chain_recurrent_set(g, eps);
      // Monotone in eps.
      CHECK(std::includes(cr.begin(), cr.end(), previous.begin(), previous.end()));
      previous = cr;
      SccDecomposition s = scc_terminal_components(g, eps);
      for (std::size_t c = 0; c < s.count(); ++c) {
        if (!s.terminal[c]) continue;
        CHECK(s.nontrivial[c]);
        CHECK(internally_chain_transitive(g, eps, s.members[c]));
      }
      for (Index x = 0; x < n; ++x) {
        TerminalReach r = reach_transitive(g, eps, x);
        CHECK(s.terminal[r.component]);
        CHECK(r.witness.source() == x);
        CHECK(r.witness.valid_at(g, eps));
        CHECK(std::binary_search(r.members.begin(), r.members.end(), r.witness.target()));
      }
    }
  }
}
