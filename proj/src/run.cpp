#include "chainscope/run.hpp"

#include "chainscope/eps_graph.hpp"
#include "chainscope/errors.hpp"
#include "chainscope/format.hpp"
#include "chainscope/locator.hpp"
#include "chainscope/nested.hpp"
#include "chainscope/relations.hpp"
#include "chainscope/strong_chain.hpp"
#include "report_json.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace chainscope {

using detail::Json;

namespace {

std::string token_of(const Json& v, const std::string& field) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return format_real(v.get<double>());
  throw ConfigError(field, "expected a state (string or number)");
}

template <class T>
T get_as(const Json& v, const std::string& field, const char* expected) {
  try {
    return v.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError(field, std::string("expected ") + expected);
  }
}

std::size_t get_count(const Json& v, const std::string& field) {
  if (!v.is_number_integer() || v.get<long long>() < 0) throw ConfigError(field, "expected a nonnegative integer");
  return v.get<std::size_t>();
}

}  // namespace

const std::vector<std::string>& analysis_names() {
  static const std::vector<std::string> names{"relations", "cr", "strong", "nested", "locate", "paper"};
  return names;
}

RunConfig parse_run_config(std::string_view json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ArgumentError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("(root)", "config must be a JSON object");
  RunConfig c;
  for (const auto& [key, v] : j.items()) {
    if (key == "analysis") {
      c.analysis = get_as<std::string>(v, key, "a string");
    } else if (key == "system") {
      c.system.system = get_as<std::string>(v, key, "a string");
    } else if (key == "grid_n") {
      c.system.grid_n = get_count(v, key);
    } else if (key == "required_points") {
      c.system.required_points = get_as<std::vector<double>>(v, key, "an array of numbers");
    } else if (key == "cycle_n") {
      c.system.cycle_n = get_count(v, key);
    } else if (key == "truncation_k") {
      c.system.truncation_k = get_count(v, key);
    } else if (key == "eps") {
      c.eps = get_as<double>(v, key, "a number");
    } else if (key == "schedule") {
      if (v.is_string()) {
        c.schedule = v.get<std::string>();
      } else {
        std::string text;
        for (double e : get_as<std::vector<double>>(v, key, "a string or an array of numbers")) {
          text += (text.empty() ? "" : ",") + format_real(e);
        }
        c.schedule = text;
      }
    } else if (key == "from") {
      c.from = token_of(v, key);
    } else if (key == "to") {
      c.to = token_of(v, key);
    } else if (key == "set") {
      if (!v.is_array()) throw ConfigError(key, "expected an array of states");
      for (const auto& s : v) c.set.push_back(token_of(s, key));
    } else if (key == "mode") {
      c.mode = get_as<std::string>(v, key, "a string");
    } else if (key == "metrics") {
      c.metrics = get_as<std::vector<std::string>>(v, key, "an array of strings");
    } else if (key == "k_max") {
      c.k_max = get_count(v, key);
    } else if (key == "threads") {
      c.threads = static_cast<unsigned>(get_count(v, key));
    } else if (key == "values") {
      c.include_values = get_as<bool>(v, key, "a boolean");
    } else if (key == "out") {
      c.out = get_as<std::string>(v, key, "a string");
    } else if (key == "dot") {
      c.dot = get_as<std::string>(v, key, "a string");
    } else if (key == "only") {
      c.only = get_as<std::vector<std::string>>(v, key, "an array of strings");
    } else if (key == "fault_sigma1_scale") {
      c.fault_sigma1_scale = get_as<double>(v, key, "a number");
    } else {
      throw ConfigError(key, "unknown field");
    }
  }
  return c;
}

namespace {

Json system_json(const AnySystem& system, const SystemConfig& config) {
  Json out{{"name", system_name(system)}, {"samples", sample_count(system)}};
  if (std::holds_alternative<IntervalSystem>(system)) out["grid_n"] = config.grid_n;
  if (std::holds_alternative<CycleSystem>(system)) out["cycle_n"] = config.cycle_n;
  if (std::holds_alternative<ShiftSystem>(system)) out["truncation_k"] = config.truncation_k;
  return out;
}

double require_eps(const RunConfig& c) {
  if (!c.eps) throw ConfigError("eps", "required for analysis '" + c.analysis + "'");
  if (!(*c.eps > 0.0)) throw ConfigError("eps", "must be positive");
  return *c.eps;
}

Index require_state(const AnySystem& system, const std::optional<std::string>& token, const char* field,
                    const std::string& analysis) {
  if (!token) throw ConfigError(field, "required for analysis '" + analysis + "'");
  try {
    return resolve_sample(system, *token);
  } catch (const ArgumentError& e) {
    throw ConfigError(field, e.what());
  }
}

std::vector<Index> resolve_set(const AnySystem& system, const std::vector<std::string>& tokens) {
  std::vector<Index> out;
  for (const auto& t : tokens) {
    try {
      out.push_back(resolve_sample(system, t));
    } catch (const ArgumentError& e) {
      throw ConfigError("set", e.what());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Json base_report(const RunConfig& c, const AnySystem& system) {
  return Json{{"schema", detail::kSchemaVersion}, {"analysis", c.analysis}, {"system", system_json(system, c.system)}};
}

template <class State>
Json orbit_relations_json(const EvaluableSystem<State>& sys, Index x, Index y, double eps, std::size_t k_max) {
  const State& sx = sys.sample(x);
  const State& sy = sys.sample(y);
  auto o = relation_O(sys, sx, sy, k_max);
  auto r = relation_R(sys, sx, sy, eps, k_max);
  auto nt = relation_Ntilde(sys, sx, sy, eps, k_max);
  Json out;
  out["O"] = Json{{"holds", o.found}, {"k", o.found ? Json(o.k) : Json(nullptr)}};
  out["R"] = Json{{"holds", r.found}, {"k", r.found ? Json(r.k) : Json(nullptr)}};
  Json ntj{{"holds", nt.found}};
  if (nt.found) {
    ntj["k"] = nt.k;
    ntj["z"] = sys.label(nt.z);
    ntj["z_is_image"] = nt.z_is_image;
  }
  out["Ntilde"] = std::move(ntj);
  return out;
}

RunResult run_relations(const RunConfig& c, const AnySystem& system, const GapMatrix& g) {
  const double eps = require_eps(c);
  if (c.k_max < 1) throw ConfigError("k_max", "must be at least 1");
  const Index x = require_state(system, c.from, "from", c.analysis);
  const Index y = require_state(system, c.to, "to", c.analysis);
  Json report = base_report(c, system);
  report["eps"] = eps;
  report["k_max"] = c.k_max;
  report["from"] = Json{{"index", x}, {"label", g.label(x)}};
  report["to"] = Json{{"index", y}, {"label", g.label(y)}};
  Json rel = std::visit([&](const auto& sys) { return orbit_relations_json(sys, x, y, eps, c.k_max); }, system);
  for (auto& [k, v] : rel.items()) report[k] = v;
  std::optional<Chain> chain = chain_reaches(g, eps, x, y);
  report["C"] = Json{{"holds", chain.has_value()}, {"witness", chain ? detail::chain_json(g, *chain) : Json(nullptr)}};
  RunResult out;
  out.report = detail::dump(report);
  if (c.dot) out.dot = detail::eps_graph_dot(g, eps);
  return out;
}

RunResult run_cr(const RunConfig& c, const AnySystem& system, const GapMatrix& g) {
  const double eps = require_eps(c);
  Json report = base_report(c, system);
  report["eps"] = eps;
  report["rho"] = g.resolution();
  std::vector<Index> cr = chain_recurrent_set(g, eps);
  report["cr_set"] = cr;
  Json labels = Json::array();
  for (Index v : cr) labels.push_back(g.label(v));
  report["cr_labels"] = std::move(labels);
  SccDecomposition scc = scc_decomposition(g, eps);
  Json comps = Json::array();
  for (std::size_t i = 0; i < scc.count(); ++i) {
    comps.push_back(Json{{"id", i},
                         {"members", scc.members[i]},
                         {"terminal", static_cast<bool>(scc.terminal[i])},
                         {"nontrivial", static_cast<bool>(scc.nontrivial[i])}});
  }
  report["components"] = std::move(comps);
  // One closed walk per nontrivial component, from its smallest member.
  Json witnesses = Json::object();
  EpsGraph graph(g, eps);
  for (std::size_t i = 0; i < scc.count(); ++i) {
    if (!scc.nontrivial[i]) continue;
    const Index start[] = {scc.members[i].front()};
    witnesses[std::to_string(start[0])] = detail::chain_json(g, *shortest_walk(graph, start[0], start));
  }
  report["witnesses"] = std::move(witnesses);
  if (cr.empty()) {
    report["note"] = "no chain-recurrent samples; the eps-graph gains its first edge above min_gap";
    report["min_gap"] = g.min_gap();
  }
  RunResult out;
  out.report = detail::dump(report);
  if (c.dot) out.dot = detail::eps_graph_dot(g, eps);
  return out;
}

RunResult run_strong(const RunConfig& c, const AnySystem& system) {
  const double eps = require_eps(c);
  std::vector<MetricTransform> metrics;
  for (const auto& m : c.metrics) {
    try {
      metrics.push_back(MetricTransform::parse(m));
    } catch (const ArgumentError& e) {
      throw ConfigError("metrics", e.what());
    }
  }
  if (metrics.empty()) metrics = {MetricTransform::identity(), MetricTransform::square_root()};
  if (c.include_values && sample_count(system) > 512) {
    throw ConfigError("values", "the value matrix is only emitted for at most 512 samples");
  }
  std::optional<Index> x, y;
  if (c.from || c.to) {
    x = require_state(system, c.from, "from", c.analysis);
    y = require_state(system, c.to, "to", c.analysis);
  }
  Json report = base_report(c, system);
  report["eps"] = eps;
  Json per = Json::array();
  std::vector<bool> keep(sample_count(system), true);
  std::optional<GapMatrix> first_gap;
  for (const MetricTransform& m : metrics) {
    GapMatrix g = build_gap_matrix(system, m, c.threads);
    StrongChainValues values = strong_chain_values(g, c.threads);
    std::vector<Index> scr = strong_chain_recurrent_set(values, eps);
    std::vector<bool> in(keep.size(), false);
    for (Index v : scr) in[v] = true;
    for (std::size_t v = 0; v < keep.size(); ++v) keep[v] = keep[v] && in[v];
    Json entry{{"metric", m.name()}, {"scr_set", detail::indices_json(g, scr)}};
    if (x) {
      entry["value"] = values(*x, *y);
      entry["strong_chain"] = values(*x, *y) < eps;
    }
    if (c.include_values) {
      std::vector<double> all(values.entries().begin(), values.entries().end());
      entry["values"] = std::move(all);
    }
    per.push_back(std::move(entry));
    if (!first_gap) first_gap = std::move(g);
  }
  std::vector<Index> inter;
  for (std::size_t v = 0; v < keep.size(); ++v) {
    if (keep[v]) inter.push_back(v);
  }
  if (x) {
    report["from"] = Json{{"index", *x}, {"label", first_gap->label(*x)}};
    report["to"] = Json{{"index", *y}, {"label", first_gap->label(*y)}};
  }
  report["per_metric"] = std::move(per);
  report["intersection"] = detail::indices_json(*first_gap, inter);
  report["intersection_note"] = "contains every sample of the generalized recurrent set at this eps; may contain more";
  RunResult out;
  out.report = detail::dump(report);
  if (c.dot) out.dot = detail::eps_graph_dot(*first_gap, eps);
  return out;
}

RunResult run_nested(const RunConfig& c, const AnySystem& system, const GapMatrix& g) {
  if (!c.schedule) throw ConfigError("schedule", "required for analysis 'nested'");
  std::optional<Schedule> schedule;
  try {
    schedule = Schedule::parse(*c.schedule);
  } catch (const ArgumentError& e) {
    throw ConfigError("schedule", e.what());
  }
  NestedOptions options;
  try {
    options.mode = parse_nested_mode(c.mode);
  } catch (const ArgumentError& e) {
    throw ConfigError("mode", e.what());
  }
  Json report = base_report(c, system);
  report["mode"] = c.mode;
  RunResult out;
  if (!c.set.empty()) {
    std::vector<Index> M = resolve_set(system, c.set);
    NestedTransitivity t = nested_transitive_check(g, *schedule, M, options);
    report["levels"] = std::vector<double>(schedule->levels().begin(), schedule->levels().end());
    report["set"] = detail::indices_json(g, M);
    report["status"] = to_string(t.status);
    report["holds"] = t.holds();
    report["failing_pair"] = t.failing_pair ? Json{t.failing_pair->first, t.failing_pair->second} : Json(nullptr);
    report["internally_chain_transitive"] = internally_chain_transitive(g, schedule->finest(), M);
    if (t.status == NestedStatus::undecided) out.exit_code = kExitUndecided;
  } else {
    const Index x = require_state(system, c.from, "from", c.analysis);
    const Index y = require_state(system, c.to, "to", c.analysis);
    NestedCertificate cert = nested_decide(g, *schedule, x, y, options);
    report["from"] = Json{{"index", x}, {"label", g.label(x)}};
    report["to"] = Json{{"index", y}, {"label", g.label(y)}};
    Json certificate = detail::certificate_json(g, *schedule, cert);
    for (auto& [k, v] : certificate.items()) report[k] = v;
    report["verified"] = cert.family ? Json(verify_nested(*cert.family, g, *schedule)) : Json(nullptr);
    if (cert.status == NestedStatus::undecided) {
      out.exit_code = kExitUndecided;
      out.diagnostic = "undecided: " + cert.obstruction->reason;
    }
  }
  out.report = detail::dump(report);
  if (c.dot) out.dot = detail::eps_graph_dot(g, schedule->finest());
  return out;
}

Json orbit_json(const GapMatrix& g, const ProjectedOrbit& o) {
  return Json{{"seed", o.seed},
              {"steps", o.steps},
              {"cycle_start", o.cycle_start},
              {"cycle", detail::indices_json(g, o.cycle)},
              {"eps_star", o.eps_star},
              {"rho", o.rho},
              {"artifact_flag", o.artifact}};
}

RunResult run_locate(const RunConfig& c, const AnySystem& system, const GapMatrix& g) {
  Json report = base_report(c, system);
  report["rho"] = g.resolution();
  if (c.from) {
    report["orbit"] = orbit_json(g, locate_cr(g, require_state(system, c.from, "from", c.analysis)));
  } else {
    // Distinct cycles over all seeds, each with the seeds that reach it.
    std::map<std::vector<Index>, std::vector<Index>> cycles;
    std::map<std::vector<Index>, ProjectedOrbit> first;
    for (Index s = 0; s < g.size(); ++s) {
      ProjectedOrbit o = locate_cr(g, s);
      std::vector<Index> key = o.cycle;
      std::rotate(key.begin(), std::min_element(key.begin(), key.end()), key.end());
      cycles[key].push_back(s);
      first.try_emplace(key, std::move(o));
    }
    Json list = Json::array();
    for (const auto& [key, seeds] : cycles) {
      const ProjectedOrbit& o = first.at(key);
      list.push_back(Json{{"cycle", detail::indices_json(g, key)},
                          {"eps_star", o.eps_star},
                          {"artifact_flag", o.artifact},
                          {"seeds", seeds.size()}});
    }
    report["cycles"] = std::move(list);
  }
  RunResult out;
  if (c.eps) {
    const double eps = require_eps(c);
    report["eps"] = eps;
    Json comps = Json::array();
    for (const LocatedComponent& lc : locate_all_components(g, eps)) {
      comps.push_back(Json{{"component", lc.component},
                           {"members", detail::indices_json(g, lc.members)},
                           {"witness", detail::chain_json(g, lc.witness)},
                           {"basin_size", lc.basin.size()}});
    }
    report["components"] = std::move(comps);
    if (c.dot) out.dot = detail::eps_graph_dot(g, eps);
  } else if (c.dot) {
    throw ConfigError("dot", "locate needs eps to draw a graph");
  }
  out.report = detail::dump(report);
  return out;
}

RunResult dispatch(const RunConfig& c) {
  if (c.analysis == "paper") {
    return run_paper_suite(PaperSuiteOptions{c.only, c.fault_sigma1_scale});
  }
  if (std::find(analysis_names().begin(), analysis_names().end(), c.analysis) == analysis_names().end()) {
    throw ConfigError("analysis", "unknown analysis '" + c.analysis + "'");
  }
  if (c.threads < 1) throw ConfigError("threads", "must be at least 1");
  AnySystem system = [&] {
    try {
      return builtin_system(c.system);
    } catch (const ArgumentError& e) {
      throw ConfigError("system", e.what());
    }
  }();
  if (c.analysis == "strong") return run_strong(c, system);
  GapMatrix g = build_gap_matrix(system, MetricTransform::identity(), c.threads);
  if (c.analysis == "relations") return run_relations(c, system, g);
  if (c.analysis == "cr") return run_cr(c, system, g);
  if (c.analysis == "nested") return run_nested(c, system, g);
  return run_locate(c, system, g);
}

}  // namespace

RunResult run(const RunConfig& config) {
  try {
    return dispatch(config);
  } catch (const ConfigError& e) {
    return {kExitValidation, "", "", std::string("invalid config: ") + e.what()};
  } catch (const std::invalid_argument& e) {
    return {kExitValidation, "", "", e.what()};
  } catch (const PreconditionError& e) {
    return {kExitValidation, "", "", std::string("precondition failed: ") + e.what()};
  } catch (const DomainError& e) {
    return {kExitValidation, "", "", e.what()};
  }
}

}  // namespace chainscope
