#include "chainscope/errors.hpp"
#include "chainscope/relations.hpp"
#include "chainscope/strong_chain.hpp"
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

// Floyd-Warshall shortest paths (zero edges allowed), then one forced first step.
std::vector<double> floyd_values(const GapMatrix& g) {
  const std::size_t n = g.size();
  std::vector<double> d(n * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) d[i * n + j] = i == j ? 0.0 : g(i, j);
  for (Index k = 0; k < n; ++k)
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
  std::vector<double> v(n * n, std::numeric_limits<double>::infinity());
  for (Index x = 0; x < n; ++x)
    for (Index z = 0; z < n; ++z)
      for (Index y = 0; y < n; ++y) v[x * n + y] = std::min(v[x * n + y], g(x, z) + d[z * n + y]);
  return v;
}

}  // namespace

TEST_CASE("strong values: fixed points and cycles") {
  GapMatrix id = build_gap_matrix(make("identity", 11));
  StrongChainValues v = strong_chain_values(id);
  for (Index x = 0; x < 11; ++x) CHECK(v(x, x) == 0.0);
  CHECK(strong_chain_recurrent_set(v, 1e-9).size() == 11);

  StrongChainValues c = strong_chain_values(build_gap_matrix(make("cycle", 0, 5)));
  for (Index x = 0; x < 5; ++x)
    for (Index y = 0; y < 5; ++y) CHECK(c(x, y) == 0.0);
}

TEST_CASE("strong values on the square grid") {
  AnySystem sq = make("square", 5);
  GapMatrix g = build_gap_matrix(sq);
  StrongChainValues v = strong_chain_values(g);
  // 1 -> 3/4 -> 1/2 -> 1/4 -> 0 costs 1/4 + 1/16 + 0 + 1/16.
  CHECK(v(4, 0) == 0.375);
  CHECK(strong_chain_recurrent_set(v, 0.05) == std::vector<Index>{0, 4});
  CHECK_THROWS_AS(strong_chain_recurrent_set(v, 0.0), ArgumentError);
}

TEST_CASE("four-piece map: the strong loop at 0 is expensive on a coarse grid") {
  GapMatrix g = build_gap_matrix(make("akin", 101));
  StrongChainValues v = strong_chain_values(g, 4);
  auto ref = floyd_values(g);
  CHECK(v(0, 0) == doctest::Approx(ref[0]).epsilon(1e-12));
  CHECK(v(0, 0) == doctest::Approx(0.034).epsilon(1e-12));
  auto scr = strong_chain_recurrent_set(v, 0.02);
  CHECK_FALSE(std::binary_search(scr.begin(), scr.end(), Index{0}));

  // A finer grid pays less for the same loop.
  GapMatrix fine = build_gap_matrix(make("akin", 401));
  StrongChainValues vf = strong_chain_values(fine, 4);
  CHECK(vf(0, 0) == doctest::Approx(0.01031875).epsilon(1e-9));
  const MetricTransform family[] = {MetricTransform::identity(), MetricTransform::square_root()};
  ScrFamilyResult r = scr_family_intersection(fine, family, 0.02, 4);
  REQUIRE(r.per_metric.size() == 2);
  CHECK(std::binary_search(r.per_metric[0].begin(), r.per_metric[0].end(), Index{0}));
  CHECK_FALSE(std::binary_search(r.intersection.begin(), r.intersection.end(), Index{0}));
}

TEST_CASE("metric family intersection") {
  AnySystem sq = make("square", 5);
  const MetricTransform family[] = {MetricTransform::identity(), MetricTransform::square_root()};
  ScrFamilyResult r = scr_family_intersection(sq, family, 0.05);
  CHECK(r.metrics == std::vector<std::string>{"d", "sqrt"});
  CHECK(r.intersection == std::vector<Index>{0, 4});
  ScrFamilyResult from_base = scr_family_intersection(build_gap_matrix(sq), family, 0.05);
  CHECK(from_base.per_metric == r.per_metric);
  CHECK_THROWS_AS(scr_family_intersection(sq, std::span<const MetricTransform>{}, 0.05), ArgumentError);
}

TEST_CASE("oracle equivalence on random matrices") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + trial % 6;
    GapMatrix g = oracle::random_matrix(rng, n, trial % 2 == 0);
    StrongChainValues v = strong_chain_values(g);
    for (Index x = 0; x < n; ++x) {
      auto ref = oracle::strong_values_from(g, x);
      for (Index y = 0; y < n; ++y) CHECK(std::abs(v(x, y) - ref[y]) <= 1e-12);
    }
  }
}

TEST_CASE("strong value properties") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 30;
    GapMatrix g = oracle::random_matrix(rng, n, trial % 2 == 0);
    StrongChainValues v = strong_chain_values(g);
    StrongChainValues threaded = strong_chain_values(g, 3);
    CHECK(std::equal(v.entries().begin(), v.entries().end(), threaded.entries().begin()));
    for (Index x = 0; x < n; ++x) {
      for (Index y = 0; y < n; ++y) {
        CHECK(v(x, y) <= g(x, y));
        for (Index z = 0; z < n; ++z) CHECK(v(x, z) <= v(x, y) + v(y, z) + 1e-12);
      }
    }
    for (double eps : oracle::thresholds_above(g, 0.0)) {
      auto scr = strong_chain_recurrent_set(v, eps);
      auto cr = chain_recurrent_set(g, eps);
      CHECK(std::includes(cr.begin(), cr.end(), scr.begin(), scr.end()));
    }
  }
}

TEST_CASE("identity map: strong value equals the distance") {
  // Exact on a dyadic grid; decimal grids can round a sum of hops below the direct distance.
  AnySystem dyadic = make("identity", 17);
  const auto& sd = std::get<IntervalSystem>(dyadic);
  StrongChainValues vd = strong_chain_values(build_gap_matrix(dyadic));
  for (Index x = 0; x < sd.size(); ++x)
    for (Index y = 0; y < sd.size(); ++y) CHECK(vd(x, y) == sd.dist(sd.sample(x), sd.sample(y)));

  AnySystem id = make("identity", 21);
  const auto& sys = std::get<IntervalSystem>(id);
  StrongChainValues v = strong_chain_values(build_gap_matrix(id));
  for (Index x = 0; x < sys.size(); ++x)
    for (Index y = 0; y < sys.size(); ++y) CHECK(std::abs(v(x, y) - sys.dist(sys.sample(x), sys.sample(y))) <= 1e-12);
  const MetricTransform family[] = {MetricTransform::identity(), MetricTransform::square_root()};
  CHECK(scr_family_intersection(id, family, 0.1).intersection.size() == sys.size());
}
