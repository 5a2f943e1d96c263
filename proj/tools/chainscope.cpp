// Command-line front end. Talks to the library only through the C interface.
#include "chainscope/chainscope.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;

struct Flags {
  std::string analysis;
  std::optional<std::string> config;
  std::optional<std::string> system;
  std::optional<std::size_t> grid;
  std::optional<std::size_t> k;
  std::optional<std::size_t> cycle_n;
  std::optional<double> eps;
  std::optional<std::string> schedule;
  std::optional<std::string> from;
  std::optional<std::string> to;
  std::vector<std::string> set;
  std::optional<std::string> mode;
  std::vector<std::string> metrics;
  std::optional<std::size_t> k_max;
  std::optional<unsigned> threads;
  std::optional<std::string> out;
  std::optional<std::string> dot;
  std::vector<std::string> only;
  std::optional<double> fault_scale;
  bool values = false;
};

// Splits "a,b,c" tokens; a state such as "1^3 0^3 1^inf" never contains a comma.
std::vector<std::string> split_commas(const std::vector<std::string>& in) {
  std::vector<std::string> out;
  for (const auto& s : in) {
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (!part.empty()) out.push_back(part);
    }
  }
  return out;
}

int fail(const std::string& message) {
  std::cerr << "chainscope: " << message << "\n";
  return 2;
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  f << text;
  return static_cast<bool>(f);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chain recurrence on sampled dynamical systems"};
  app.set_version_flag("--version", std::string(cs_version()));
  Flags f;
  app.add_option("analysis", f.analysis, "relations | cr | strong | nested | locate | paper");
  app.add_option("--config", f.config, "JSON config file with the same fields as the flags");
  app.add_option("--system", f.system, "akin | square | logistic4 | identity | cycle | sigma1 | sigma2");
  app.add_option("--grid", f.grid, "grid points on [0, 1] for interval systems");
  app.add_option("--k", f.k, "truncation K for sigma1/sigma2");
  app.add_option("--cycle-n", f.cycle_n, "number of points for the cycle system");
  app.add_option("--eps", f.eps, "chain threshold");
  app.add_option("--schedule", f.schedule, "geometric:<first>,<count> or a comma-separated decreasing list");
  app.add_option("--from", f.from, "source state (value, word, or #index)");
  app.add_option("--to", f.to, "target state");
  app.add_option("--set", f.set, "set of states, comma-separated");
  app.add_option("--mode", f.mode, "nested decision mode: exact | greedy");
  app.add_option("--metrics", f.metrics, "metric family for strong: d, sqrt, min:c, scale:c");
  app.add_option("--kmax", f.k_max, "iteration budget for the orbit relations");
  app.add_option("--threads", f.threads, "worker threads (default 1)");
  app.add_option("--out", f.out, "write the JSON report here instead of stdout");
  app.add_option("--dot", f.dot, "write the eps-graph as Graphviz DOT");
  app.add_option("--only", f.only, "paper: run only cases whose name starts with one of these");
  app.add_option("--fault-sigma1-scale", f.fault_scale)->group("");
  app.add_flag("--values", f.values, "strong: include the full value matrix");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(e.what());
  }

  Json config = Json::object();
  if (f.config) {
    std::ifstream in(*f.config, std::ios::binary);
    if (!in) return fail("cannot read config file '" + *f.config + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
      config = Json::parse(buffer.str());
    } catch (const nlohmann::json::parse_error& e) {
      return fail(*f.config + ": " + e.what());
    }
    if (!config.is_object()) return fail(*f.config + ": config must be a JSON object");
  }
  if (!f.analysis.empty()) config["analysis"] = f.analysis;
  if (!config.contains("analysis")) return fail("no analysis given (relations | cr | strong | nested | locate | paper)");
  if (f.system) config["system"] = *f.system;
  if (f.grid) config["grid_n"] = *f.grid;
  if (f.k) config["truncation_k"] = *f.k;
  if (f.cycle_n) config["cycle_n"] = *f.cycle_n;
  if (f.eps) config["eps"] = *f.eps;
  if (f.schedule) config["schedule"] = *f.schedule;
  if (f.from) config["from"] = *f.from;
  if (f.to) config["to"] = *f.to;
  if (!f.set.empty()) config["set"] = split_commas(f.set);
  if (f.mode) config["mode"] = *f.mode;
  if (!f.metrics.empty()) config["metrics"] = split_commas(f.metrics);
  if (f.k_max) config["k_max"] = *f.k_max;
  if (f.threads) config["threads"] = *f.threads;
  if (f.out) config["out"] = *f.out;
  if (f.dot) config["dot"] = *f.dot;
  if (!f.only.empty()) config["only"] = split_commas(f.only);
  if (f.fault_scale) config["fault_sigma1_scale"] = *f.fault_scale;
  if (f.values) config["values"] = true;

  char* report = nullptr;
  char* dot = nullptr;
  char* diagnostic = nullptr;
  const int code = cs_run(config.dump().c_str(), &report, &dot, &diagnostic);
  const std::string report_text = report ? report : "";
  const std::string dot_text = dot ? dot : "";
  const std::string diag_text = diagnostic ? diagnostic : "";
  cs_string_free(report);
  cs_string_free(dot);
  cs_string_free(diagnostic);

  if (!diag_text.empty()) std::cerr << "chainscope: " << diag_text << "\n";
  if (!report_text.empty()) {
    const std::string out_path = config.value("out", std::string());
    if (out_path.empty()) {
      std::cout << report_text;
    } else if (!write_file(out_path, report_text)) {
      return fail("cannot write report to '" + out_path + "'");
    }
  }
  const std::string dot_path = config.value("dot", std::string());
  if (!dot_path.empty() && !dot_text.empty() && !write_file(dot_path, dot_text)) {
    return fail("cannot write DOT output to '" + dot_path + "'");
  }
  return code;
}
