#include "chainscope/errors.hpp"
#include "chainscope/interval_map.hpp"
#include "chainscope/metric.hpp"
#include "chainscope/symbolic.hpp"
#include "chainscope/systems.hpp"

#include <doctest.h>

#include <cmath>
#include <set>

using namespace chainscope;

TEST_CASE("four-piece map values at the breakpoints") {
  PiecewiseMap f = akin_map();
  CHECK(interval_eval(f, 0.0) == 0.75);
  CHECK(interval_eval(f, 0.5) == 0.25);
  CHECK(interval_eval(f, 0.75) == 0.625);
  CHECK(interval_eval(f, 1.0) == 0.75);
  CHECK(interval_eval(f, 0.25) == 0.25 * 0.75);
  CHECK_THROWS_AS(interval_eval(f, -0.1), DomainError);
  CHECK_THROWS_AS(interval_eval(f, 1.5), DomainError);
}

TEST_CASE("four-piece map never lands on excluded limit points") {
  PiecewiseMap f = akin_map();
  // x/2 + 1/4 just above 1/2 rounds to 1/2 in double precision.
  double above = std::nextafter(0.5, 1.0);
  CHECK(f(above) > 0.5);
  CHECK(f(f(above)) > 0.5);
  // x(x + 1/2) underflows for tiny x.
  double tiny = 4.9e-324;
  CHECK(f(tiny) > 0.0);
  CHECK(f(std::nextafter(0.5, 0.0)) < 0.5);
}

TEST_CASE("piecewise map rejects bad partitions") {
  auto id = [](double x) { return x; };
  auto piece = [&](IntervalPart p) { return MapPiece{p, id, IntervalPart::closed(0, 1), "x"}; };
  CHECK_NOTHROW(PiecewiseMap(0, 1, {piece(IntervalPart::right_open(0, 0.5)), piece(IntervalPart::closed(0.5, 1))}));
  // 0.5 owned twice
  CHECK_THROWS_AS(PiecewiseMap(0, 1, {piece(IntervalPart::closed(0, 0.5)), piece(IntervalPart::closed(0.5, 1))}),
                  ArgumentError);
  // 0.5 owned by nobody
  CHECK_THROWS_AS(PiecewiseMap(0, 1, {piece(IntervalPart::right_open(0, 0.5)), piece(IntervalPart::left_open(0.5, 1))}),
                  ArgumentError);
  // gap
  CHECK_THROWS_AS(PiecewiseMap(0, 1, {piece(IntervalPart::closed(0, 0.4)), piece(IntervalPart::left_open(0.5, 1))}),
                  ArgumentError);
  // image outside the domain
  MapPiece wild{IntervalPart::closed(0, 1), [](double x) { return 2 * x; }, IntervalPart::closed(0, 2), "2x"};
  CHECK_THROWS_AS(PiecewiseMap(0, 1, {wild}), ArgumentError);
}

TEST_CASE("grid_sample") {
  CHECK(grid_sample(0, 1, 5) == std::vector<double>{0, 0.25, 0.5, 0.75, 1});
  const double half[] = {0.5};
  CHECK(grid_sample(0, 1, 3, half) == std::vector<double>{0, 0.5, 1});
  const double third[] = {0.3};
  CHECK(grid_sample(0, 1, 2, third) == std::vector<double>{0, 0.3, 1});
  CHECK_THROWS_AS(grid_sample(0, 1, 1), ArgumentError);
  const double outside[] = {1.5};
  CHECK_THROWS_AS(grid_sample(0, 1, 3, outside), ArgumentError);
  // Grid points are the correctly rounded decimals.
  auto g = grid_sample(0, 1, 101);
  CHECK(g[33] == 0.33);
  CHECK(g[1] == 0.01);
}

TEST_CASE("builtin systems") {
  SystemConfig c;
  c.system = "cycle";
  c.cycle_n = 3;
  auto cycle = std::get<CycleSystem>(builtin_system(c));
  CHECK(cycle.eval(0) == 1);
  CHECK(cycle.eval(2) == 0);
  CHECK(cycle.dist(0, 2) == doctest::Approx(1.0 / 3).epsilon(1e-15));
  CHECK(cycle.dist(0, 1) == cycle.dist(1, 0));

  c = {};
  c.system = "logistic4";
  auto logistic = std::get<IntervalSystem>(builtin_system(c));
  CHECK(logistic.eval(0.75) == 0.75);
  c.system = "square";
  CHECK(std::get<IntervalSystem>(builtin_system(c)).eval(0.5) == 0.25);
  c.system = "identity";
  CHECK(std::get<IntervalSystem>(builtin_system(c)).eval(0.3) == 0.3);

  c.system = "nonsense";
  CHECK_THROWS_AS(builtin_system(c), ArgumentError);
  c.system = "cycle";
  c.cycle_n = 1;
  CHECK_THROWS_AS(builtin_system(c), ArgumentError);
  c.system = "akin";
  c.grid_n = 1;
  CHECK_THROWS_AS(builtin_system(c), ArgumentError);
}

TEST_CASE("interval systems include the breakpoints of their map") {
  SystemConfig c;
  c.system = "akin";
  c.grid_n = 4;  // 0, 1/3, 2/3, 1
  auto sys = std::get<IntervalSystem>(builtin_system(c));
  CHECK(sys.sample_index(0.5).has_value());
  CHECK(sys.size() == 5);
}

TEST_CASE("every builtin interval map sends samples into [0, 1]") {
  for (std::string name : {"akin", "square", "logistic4", "identity"}) {
    SystemConfig c;
    c.system = name;
    c.grid_n = 1001;
    auto sys = std::get<IntervalSystem>(builtin_system(c));
    for (double x : sys.samples()) {
      double y = sys.eval(x);
      CHECK(y >= 0.0);
      CHECK(y <= 1.0);
    }
  }
}

TEST_CASE("metric transforms") {
  CHECK(MetricTransform::parse("d") == MetricTransform::identity());
  CHECK(MetricTransform::parse("sqrt") == MetricTransform::square_root());
  CHECK(MetricTransform::parse("min:0.2")(0.5) == 0.2);
  CHECK(MetricTransform::parse("min:0.2")(0.1) == 0.1);
  CHECK(MetricTransform::parse("scale:2")(0.25) == 0.5);
  CHECK(MetricTransform::square_root()(0.25) == 0.5);
  CHECK_THROWS_AS(MetricTransform::parse("log"), ArgumentError);
  CHECK_THROWS_AS(MetricTransform::parse("min:0"), ArgumentError);
  CHECK_THROWS_AS(MetricTransform::parse("min:-1"), ArgumentError);
}

TEST_CASE("words: parsing, labels and canonical form") {
  Word w = Word::parse("1^3 0^3 1^inf");
  CHECK(w.prefix() == "111000");
  CHECK(w.tail() == '1');
  CHECK(Word::parse("101inf") == Word("10", '1'));
  CHECK(Word::parse("1 0 1^inf") == Word("10", '1'));
  CHECK(Word::parse("1^2 0^2 1^inf") == Word("1100", '1'));
  CHECK(Word("1011", '1') == Word("10", '1'));
  CHECK(Word::parse(w.label()) == w);
  CHECK(Word::parse("0inf") == Word::constant('0'));
  CHECK_THROWS_AS(Word::parse("102inf"), ArgumentError);
  CHECK_THROWS_AS(Word::parse("1^inf 0"), ArgumentError);
  CHECK_THROWS_AS(Word::parse("1100"), ArgumentError);
}

TEST_CASE("word shift") {
  CHECK(word_shift(Word::parse("1^3 0^3 1^inf")) == Word::parse("1^2 0^3 1^inf"));
  CHECK(word_shift(Word::constant('1')) == Word::constant('1'));
  Word w = Subshift(SubshiftId::Sigma2).generator(2);
  CHECK(w == Word::parse("1 1 0 0 1 0^inf"));
  for (int i = 0; i < 5; ++i) w = word_shift(w);
  CHECK(w == Word::constant('0'));
}

TEST_CASE("word distance") {
  const Word ones = Word::constant('1'), zeros = Word::constant('0');
  CHECK(word_dist(zeros, ones) == 1.0);
  CHECK(word_dist(ones, Word::parse("1^3 0^3 1^inf")) == 0.125);
  CHECK(word_dist(ones, ones) == 0.0);
  CHECK(first_difference(ones, Word::parse("1^3 0^3 1^inf")) == 4);
}

TEST_CASE("forbidden factors") {
  Subshift s1(SubshiftId::Sigma1), s2(SubshiftId::Sigma2);
  CHECK(s1.forbidden("010"));
  CHECK_FALSE(s2.forbidden("010"));
  CHECK(s2.forbidden("0110"));
  CHECK(s1.forbidden("1101"));  // 1^2 0 1: j = 2 > h = 1
  CHECK_FALSE(s1.forbidden("11001"));
  CHECK_FALSE(s1.forbidden("1100"));  // zero block not closed
  CHECK_FALSE(s1.forbidden("110011"));
  CHECK_FALSE(s1.forbidden(""));
}

TEST_CASE("subshift universes") {
  Subshift s1(SubshiftId::Sigma1), s2(SubshiftId::Sigma2);
  std::vector<Word> u1{Word::parse("1 0 1^inf"), Word::parse("0 1^inf"), Word::constant('1'), Word::constant('0')};
  CHECK(s1.universe(1) == u1);
  std::vector<Word> u2{Word::parse("1 0 1 0^inf"), Word::parse("0 1 0^inf"), Word::parse("1 0^inf"),
                       Word::constant('1'), Word::constant('0')};
  CHECK(s2.universe(1) == u2);
  CHECK(s1.universe(6).size() == 29);
  CHECK_THROWS_AS(s1.universe(0), ArgumentError);
}

TEST_CASE("generator orbits reach the absorbing fixed point") {
  Subshift s1(SubshiftId::Sigma1), s2(SubshiftId::Sigma2);
  for (std::size_t k = 1; k <= 8; ++k) {
    Word w = s1.generator(k);
    for (std::size_t i = 0; i < 2 * k; ++i) w = w.shifted();
    CHECK(w == Word::constant('1'));
    Word v = s2.generator(k);
    for (std::size_t i = 0; i < 2 * k + 1; ++i) v = v.shifted();
    CHECK(v == Word::constant('0'));
  }
}

TEST_CASE("universes are shift invariant and ultrametric") {
  for (SubshiftId id : {SubshiftId::Sigma1, SubshiftId::Sigma2}) {
    Subshift s(id);
    auto u = s.universe(6);
    std::set<Word> members(u.begin(), u.end());
    CHECK(members.size() == u.size());
    for (const Word& w : u) {
      CHECK(members.contains(w.shifted()));
      CHECK(s.admissible(w));
    }
    std::size_t violations = 0;
    for (const Word& a : u) {
      for (const Word& b : u) {
        CHECK((word_dist(a, b) == 0.0) == (a == b));
        for (const Word& c : u) {
          if (word_dist(a, c) > std::max(word_dist(a, b), word_dist(b, c))) ++violations;
        }
      }
    }
    CHECK(violations == 0);
  }
}

TEST_CASE("resolve_sample") {
  SystemConfig c;
  c.system = "sigma1";
  c.truncation_k = 3;
  AnySystem sys = builtin_system(c);
  CHECK(resolve_sample(sys, "1inf") == sample_count(sys) - 2);
  CHECK(resolve_sample(sys, "#0") == 0);
  CHECK_THROWS_AS(resolve_sample(sys, "#99"), ArgumentError);
  CHECK_THROWS_AS(resolve_sample(sys, "1^9 0^9 1^inf"), ArgumentError);

  c = {};
  c.system = "akin";
  c.grid_n = 101;
  sys = builtin_system(c);
  CHECK(resolve_sample(sys, "0.33") == 33);
  CHECK_THROWS_AS(resolve_sample(sys, "0.333"), ArgumentError);
  CHECK_THROWS_AS(resolve_sample(sys, "abc"), ArgumentError);
}
