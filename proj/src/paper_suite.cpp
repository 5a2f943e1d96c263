#include "chainscope/errors.hpp"
#include "chainscope/format.hpp"
#include "chainscope/nested.hpp"
#include "chainscope/relations.hpp"
#include "chainscope/run.hpp"
#include "chainscope/strong_chain.hpp"
#include "report_json.hpp"

#include <cmath>
#include <functional>
#include <limits>

namespace chainscope {

using detail::Json;

namespace {

struct CaseReport {
  Json checks = Json::array();
  bool passed = true;

  void check(const std::string& name, bool ok, Json detail = Json::object()) {
    Json entry{{"name", name}, {"passed", ok}};
    for (auto& [k, v] : detail.items()) entry[k] = v;
    checks.push_back(std::move(entry));
    passed = passed && ok;
  }
};

template <class S>
S system_of(SystemConfig config) {
  return std::get<S>(builtin_system(config));
}

IntervalSystem interval(const std::string& name, std::size_t grid_n, std::vector<double> required = {}) {
  SystemConfig c;
  c.system = name;
  c.grid_n = grid_n;
  c.required_points = std::move(required);
  return system_of<IntervalSystem>(c);
}

ShiftSystem shift(const std::string& name, std::size_t k, double scale) {
  SystemConfig c;
  c.system = name;
  c.truncation_k = k;
  ShiftSystem sys = system_of<ShiftSystem>(c);
  return scale == 1.0 ? sys : sys.with_metric(MetricTransform::scale(scale));
}

template <class State>
Index index_of(const EvaluableSystem<State>& sys, const State& s) {
  return sys.sample_index(s).value();
}

Json labels_of(const GapMatrix& g, const Chain& c) { return detail::chain_json(g, c); }

// Four-piece map: 0 is chain recurrent at every tested eps while Ñ(0, 0) fails,
// because every point near f(0) = 3/4 stays in (1/2, 1] forever.
void akin_ntilde(CaseReport& r, const PaperSuiteOptions&) {
  IntervalSystem sys = interval("akin", 1001, {0.0, 0.5});
  const double eps = 0.01;
  const std::size_t k_max = 10000;
  auto w = relation_Ntilde(sys, 0.0, 0.0, eps, k_max);
  r.check("ntilde(0,0) fails at eps 0.01, k_max 10^4", !w.found);

  std::size_t candidates = 0;
  bool trapped = true;
  for (double z : sys.samples()) {
    if (!(std::abs(z - 0.75) < eps)) continue;
    ++candidates;
    double cur = z;
    for (std::size_t k = 0; k <= k_max && trapped; ++k) {
      trapped = cur > 0.5;
      double next = sys.eval(cur);
      if (next == cur) break;
      cur = next;
    }
  }
  r.check("orbits of samples near 3/4 stay in (1/2, 1]", trapped && candidates > 0, {{"candidates", candidates}});

  GapMatrix g = build_gap_matrix(sys);
  const Index zero = index_of(sys, 0.0);
  for (double e : {0.1, 0.05, 0.02, 0.01}) {
    std::optional<Chain> c = chain_reaches(g, e, zero, zero);
    r.check("0 chain recurrent at eps " + format_real(e), c.has_value(),
            {{"cycle_length", c ? c->edges() : 0}, {"max_gap", c ? c->max_gap(g) : 0.0}});
  }
}

// x^2 on [0, 1]: chains from 1 to 0 exist in the ambient space but must leave {0, 1}.
void square_restriction(CaseReport& r, const PaperSuiteOptions&) {
  IntervalSystem sys = interval("square", 5);
  GapMatrix g = build_gap_matrix(sys);
  const Index one = index_of(sys, 1.0), zero = index_of(sys, 0.0);
  std::optional<Chain> c = chain_reaches(g, 0.3, one, zero);
  r.check("1 -> 0 at eps 0.3 on the grid", c.has_value(), c ? Json{{"witness", labels_of(g, *c)}} : Json::object());
  const Index sub[] = {zero, one};
  GapMatrix induced = g.induced(sub);
  bool blocked = true;
  for (double e : {0.3, 0.5, 0.9, std::nextafter(1.0, 0.0)}) blocked = blocked && !chain_reaches(induced, e, 1, 0);
  r.check("1 -> 0 impossible inside {0, 1} for eps < 1", blocked);
}

// Logistic map with parameter 4, M = {0, 3/4}: nested-transitive through the
// ambient space, not internally chain transitive.
void logistic_separation(CaseReport& r, const PaperSuiteOptions&) {
  IntervalSystem sys = interval("logistic4", 101);
  GapMatrix g = build_gap_matrix(sys);
  const Index M[] = {index_of(sys, 0.0), index_of(sys, 0.75)};
  Schedule schedule({0.2, 0.1});
  NestedTransitivity t = nested_transitive_check(g, schedule, M);
  r.check("M nested-transitive at (0.2, 0.1)", t.holds(), {{"status", to_string(t.status)}});
  r.check("M not internally chain transitive at eps 0.5", !internally_chain_transitive(g, 0.5, M));

  NestedOptions greedy;
  greedy.mode = NestedMode::greedy;
  Schedule three({0.2, 0.1, 0.05});
  NestedCertificate cert = nested_decide(g, three, M[0], M[1], greedy);
  bool ok = cert.status == NestedStatus::success && verify_nested(*cert.family, g, three);
  r.check("greedy family 0 -> 3/4 at (0.2, 0.1, 0.05) verifies", ok,
          {{"chain_points", cert.family ? cert.family->chains.back().points.size() : 0}});
}

// Identity map: a set with an isolated point is not internally chain transitive,
// and is nested-transitive only when the ambient samples connect it.
void identity_isolated(CaseReport& r, const PaperSuiteOptions&) {
  Schedule schedule({0.5});
  {
    IntervalSystem coarse = interval("identity", 2);
    GapMatrix g = build_gap_matrix(coarse);
    const Index M[] = {index_of(coarse, 0.0), index_of(coarse, 1.0)};
    r.check("grid {0, 1}: M = {0, 1} not nested-transitive at (0.5)",
            !nested_transitive_check(g, schedule, M).holds());
  }
  IntervalSystem fine = interval("identity", 11);
  GapMatrix g = build_gap_matrix(fine);
  const Index M[] = {index_of(fine, 0.0), index_of(fine, 1.0)};
  r.check("grid step 0.1: M = {0, 1} nested-transitive at (0.5)", nested_transitive_check(g, schedule, M).holds());
  r.check("grid step 0.1: M = {0, 1} not internally chain transitive at eps 0.5",
          !internally_chain_transitive(g, 0.5, M));
}

// Rotation (x + 1) mod n: the whole cycle is transitive, no proper subset is
// internally chain transitive, yet every subset is nested-transitive.
void cycle_subsets(CaseReport& r, const PaperSuiteOptions&) {
  Schedule schedule({0.1, 0.01});
  for (std::size_t n = 3; n <= 6; ++n) {
    SystemConfig c;
    c.system = "cycle";
    c.cycle_n = n;
    GapMatrix g = build_gap_matrix(builtin_system(c));
    std::vector<Index> all(n);
    for (Index i = 0; i < n; ++i) all[i] = i;
    bool whole = internally_chain_transitive(g, 0.1, all);
    std::size_t proper = 0, internal = 0, nested = 0;
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
      std::vector<Index> M;
      for (Index i = 0; i < n; ++i) {
        if (mask >> i & 1) M.push_back(i);
      }
      ++proper;
      if (internally_chain_transitive(g, 0.1, M)) ++internal;
      if (nested_transitive_check(g, schedule, M).holds()) ++nested;
    }
    r.check("cycle(" + std::to_string(n) + "): whole set transitive, proper subsets only nested-transitive",
            whole && internal == 0 && nested == proper,
            {{"proper_subsets", proper}, {"internally_transitive", internal}, {"nested_transitive", nested}});
  }
  SystemConfig c;
  c.system = "cycle";
  c.cycle_n = 4;
  GapMatrix g = build_gap_matrix(builtin_system(c));
  const Index M[] = {0, 2};
  r.check("cycle(4): M = {0, 2} not internally chain transitive at eps 0.1", !internally_chain_transitive(g, 0.1, M));
}

// Sigma1: the chain 1^inf, w_n, ..., s^{n-1} w_n, 0^inf has two jumps of
// exactly 2^-n, and the orbit of 1^5 0^5 1^inf stays 2^-4 away from 1^2 0^2 1^inf.
void sigma1_chain(CaseReport& r, const PaperSuiteOptions& options) {
  ShiftSystem sys = shift("sigma1", 8, options.sigma1_metric_scale);
  GapMatrix g = build_gap_matrix(sys);
  Subshift sigma(SubshiftId::Sigma1);
  const Word ones = Word::constant('1'), zeros = Word::constant('0');
  for (std::size_t n = 3; n <= 8; ++n) {
    Chain c{{index_of(sys, ones)}};
    Word w = sigma.generator(n);
    for (std::size_t j = 0; j < n; ++j, w = w.shifted()) c.points.push_back(index_of(sys, w));
    c.points.push_back(index_of(sys, zeros));
    const double unit = std::ldexp(1.0, -static_cast<int>(n));
    const double first = g(c.points[0], c.points[1]);
    const double last = g(c.points[c.points.size() - 2], c.points.back());
    bool ok = first == unit && last == unit;
    for (double e : {std::nextafter(unit, 1.0), 1.5 * unit, std::nextafter(2 * unit, 0.0)}) ok = ok && c.valid_at(g, e);
    r.check("n = " + std::to_string(n) + ": chain valid on (2^-n, 2^-n+1), end jumps 2^-n", ok,
            {{"first_gap", first}, {"last_gap", last}});
  }
  const Word u = Word::parse("1^2 0^2 1^inf");
  Word x = Word::parse("1^5 0^5 1^inf");
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j <= x.horizon().size(); ++j, x = x.shifted()) best = std::min(best, sys.dist(u, x));
  r.check("min over orbit of 1^5 0^5 1^inf of d(1^2 0^2 1^inf, .) = 2^-4", best == 0.0625, {{"minimum", best}});
}

void sigma1_nested(CaseReport& r, const PaperSuiteOptions& options) {
  ShiftSystem sys = shift("sigma1", 6, options.sigma1_metric_scale);
  GapMatrix g = build_gap_matrix(sys);
  Schedule schedule = Schedule::geometric(0.375, 6);
  NestedCertificate cert =
      nested_decide(g, schedule, index_of(sys, Word::constant('1')), index_of(sys, Word::constant('0')));
  r.check("1^inf -> 0^inf infeasible at 0.75 * 2^-n, n = 1..6", cert.status == NestedStatus::infeasible,
          {{"status", to_string(cert.status)},
           {"obstruction_level", cert.obstruction ? Json(cert.obstruction->level) : Json(nullptr)}});
}

// Sigma2: every w_k reaches 0^inf along its exact orbit, w_k -> 1^inf, but
// 1^inf itself does not reach 0^inf by nested chains on the truncated universe.
void sigma2_evidence(CaseReport& r, const PaperSuiteOptions&) {
  const std::size_t K = 8;
  ShiftSystem sys = shift("sigma2", K, 1.0);
  GapMatrix g = build_gap_matrix(sys);
  Schedule schedule = Schedule::geometric(0.375, K);
  Subshift sigma(SubshiftId::Sigma2);
  const Word ones = Word::constant('1'), zeros = Word::constant('0');
  const Index zero = index_of(sys, zeros);
  for (std::size_t k = 1; k <= K; ++k) {
    const Word wk = sigma.generator(k);
    Chain orbit{{index_of(sys, wk)}};
    Word w = wk;
    for (std::size_t j = 0; j < 2 * k + 1; ++j) {
      w = w.shifted();
      orbit.points.push_back(index_of(sys, w));
    }
    NestedCertificate cert = nested_decide(g, schedule, orbit.source(), zero);
    bool ok = cert.status == NestedStatus::success && verify_nested(*cert.family, g, schedule) &&
              orbit.target() == zero && orbit.max_gap(g) == 0.0 && word_dist(wk, ones) == std::ldexp(1.0, -int(k));
    r.check("k = " + std::to_string(k) + ": w_k -> 0^inf nested by its exact orbit, d(w_k, 1^inf) = 2^-k", ok);
  }
  NestedCertificate limit = nested_decide(g, schedule, index_of(sys, ones), zero);
  r.check("1^inf -> 0^inf infeasible", limit.status == NestedStatus::infeasible,
          {{"status", to_string(limit.status)},
           {"obstruction_level", limit.obstruction ? Json(limit.obstruction->level) : Json(nullptr)}});
}

template <class State>
Json ladder_counts(const EvaluableSystem<State>& sys, double eps, std::size_t k_max, bool& ok) {
  std::size_t pairs = 0, o = 0, r = 0, nt = 0, immediate = 0, broken = 0;
  for (const State& x : sys.samples()) {
    for (const State& y : sys.samples()) {
      ++pairs;
      bool ho = relation_O(sys, x, y, k_max).found;
      bool hr = relation_R(sys, x, y, eps, k_max).found;
      auto w = relation_Ntilde(sys, x, y, eps, k_max);
      std::vector<State> chain = w.found ? ntilde_chain(sys, x, y, w) : std::vector<State>{};
      bool hc = w.found && raw_chain_valid<State>(sys, chain, w.k >= 1 ? eps : 2 * eps);
      o += ho;
      r += hr;
      nt += w.found;
      immediate += w.found && w.k == 0;
      if ((ho && !hr) || (hr && !w.found) || (w.found && !hc)) ++broken;
    }
  }
  ok = ok && broken == 0;
  return Json{{"pairs", pairs}, {"O", o}, {"R", r}, {"Ntilde", nt}, {"Ntilde_k0_only", immediate},
              {"violations", broken}};
}

// O => R => Ñ => C at matched eps and k_max, and SCR within CR, on small builtins.
void containment_ladder(CaseReport& r, const PaperSuiteOptions&) {
  const double eps = 0.1;
  const std::size_t k_max = 50;
  std::vector<SystemConfig> configs;
  for (std::string name : {"akin", "square", "logistic4", "identity"}) {
    SystemConfig c;
    c.system = name;
    c.grid_n = 21;
    configs.push_back(c);
  }
  {
    SystemConfig c;
    c.system = "cycle";
    c.cycle_n = 5;
    configs.push_back(c);
  }
  for (std::string name : {"sigma1", "sigma2"}) {
    SystemConfig c;
    c.system = name;
    c.truncation_k = 3;
    configs.push_back(c);
  }
  for (const SystemConfig& c : configs) {
    AnySystem system = builtin_system(c);
    bool ok = true;
    Json counts = std::visit([&](const auto& sys) { return ladder_counts(sys, eps, k_max, ok); }, system);
    GapMatrix g = build_gap_matrix(system);
    StrongChainValues values = strong_chain_values(g);
    std::size_t scr_outside = 0;
    for (double e : {0.5, 0.2, 0.1, 0.05, 0.01}) {
      std::vector<Index> cr = chain_recurrent_set(g, e);
      for (Index v : strong_chain_recurrent_set(values, e)) {
        if (!std::binary_search(cr.begin(), cr.end(), v)) ++scr_outside;
      }
    }
    ok = ok && scr_outside == 0;
    counts["scr_outside_cr"] = scr_outside;
    r.check(system_name(system) + ": O => R => Ntilde => C, SCR within CR", ok, counts);
  }
}

struct PaperCase {
  std::string name;
  std::string claim;
  std::function<void(CaseReport&, const PaperSuiteOptions&)> body;
};

const std::vector<PaperCase>& cases() {
  static const std::vector<PaperCase> all{
      {"akin-ntilde", "0 is chain recurrent for the four-piece map but not in the Ñ relation with itself", akin_ntilde},
      {"square-restriction", "chains of x^2 from 1 to 0 must leave the chain recurrent set", square_restriction},
      {"logistic-separation", "M = {0, 3/4} is nested-transitive but not internally chain transitive",
       logistic_separation},
      {"identity-isolated", "a set with an isolated point is not internally chain transitive", identity_isolated},
      {"cycle-subsets", "proper subsets of a rotation are not internally chain transitive", cycle_subsets},
      {"sigma1-chain", "1^inf chain-reaches 0^inf through w_n in Sigma1", sigma1_chain},
      {"sigma1-nested", "1^inf does not reach 0^inf by nested chains in Sigma1", sigma1_nested},
      {"sigma2-evidence", "the nested relation on Sigma2 is not closed", sigma2_evidence},
      {"containment-ladder", "O within R within Ñ within C, and SCR within CR", containment_ladder},
  };
  return all;
}

}  // namespace

const std::vector<std::string>& paper_case_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& c : cases()) out.push_back(c.name);
    return out;
  }();
  return names;
}

RunResult run_paper_suite(const PaperSuiteOptions& options) {
  if (!(options.sigma1_metric_scale > 0.0)) {
    return {kExitValidation, "", "", "sigma1 metric scale must be positive"};
  }
  auto selected = [&](const std::string& name) {
    if (options.only.empty()) return true;
    for (const auto& prefix : options.only) {
      if (name.starts_with(prefix)) return true;
    }
    return false;
  };
  Json report{{"schema", detail::kSchemaVersion}, {"analysis", "paper"}};
  Json list = Json::array();
  std::vector<std::string> failures;
  for (const PaperCase& c : cases()) {
    if (!selected(c.name)) continue;
    CaseReport r;
    c.body(r, options);
    list.push_back(Json{{"name", c.name}, {"claim", c.claim}, {"passed", r.passed}, {"checks", std::move(r.checks)}});
    if (!r.passed) failures.push_back(c.name);
  }
  if (list.empty()) return {kExitValidation, "", "", "--only matches no paper case"};
  report["cases"] = std::move(list);
  report["failures"] = failures;
  report["passed"] = failures.empty();
  RunResult out;
  out.report = detail::dump(report);
  if (!failures.empty()) {
    out.exit_code = kExitSuiteFailure;
    out.diagnostic = "failing cases:";
    for (const auto& f : failures) out.diagnostic += " " + f;
  }
  return out;
}

}  // namespace chainscope
