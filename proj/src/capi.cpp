#include "chainscope/chainscope.h"

#include "chainscope/errors.hpp"
#include "chainscope/relations.hpp"
#include "chainscope/run.hpp"

#include <cstdlib>
#include <cstring>
#include <new>

struct cs_system {
  chainscope::AnySystem system;
};

struct cs_gap_matrix {
  chainscope::GapMatrix matrix;
};

namespace {

thread_local std::string last_error;

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void hand_out(char** dst, const std::string& s) {
  if (dst) *dst = duplicate(s);
}

template <class F>
cs_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return CS_OK;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return CS_ERR_ARGUMENT;
  } catch (const chainscope::PreconditionError& e) {
    last_error = e.what();
    return CS_ERR_PRECONDITION;
  } catch (const std::domain_error& e) {
    last_error = e.what();
    return CS_ERR_DOMAIN;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CS_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return CS_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw chainscope::ArgumentError(what);
}

}  // namespace

extern "C" {

const char* cs_version(void) { return CHAINSCOPE_VERSION; }

const char* cs_last_error(void) { return last_error.c_str(); }

void cs_string_free(char* s) { std::free(s); }

cs_status cs_system_create(const char* config_json, cs_system** out) {
  return guarded([&] {
    require(config_json && out, "null argument");
    chainscope::RunConfig c = chainscope::parse_run_config(config_json);
    *out = new cs_system{chainscope::builtin_system(c.system)};
  });
}

void cs_system_destroy(cs_system* system) { delete system; }

size_t cs_system_sample_count(const cs_system* system) {
  return system ? chainscope::sample_count(system->system) : 0;
}

cs_status cs_system_sample_label(const cs_system* system, size_t i, char** out) {
  return guarded([&] {
    require(system && out, "null argument");
    auto labels = chainscope::sample_labels(system->system);
    require(i < labels.size(), "sample index out of range");
    *out = duplicate(labels[i]);
  });
}

cs_status cs_system_resolve(const cs_system* system, const char* token, size_t* out) {
  return guarded([&] {
    require(system && token && out, "null argument");
    *out = chainscope::resolve_sample(system->system, token);
  });
}

cs_status cs_gap_matrix_build(const cs_system* system, unsigned threads, cs_gap_matrix** out) {
  return guarded([&] {
    require(system && out, "null argument");
    *out = new cs_gap_matrix{chainscope::build_gap_matrix(system->system, {}, threads ? threads : 1)};
  });
}

cs_status cs_gap_matrix_from_entries(size_t n, const double* entries, cs_gap_matrix** out) {
  return guarded([&] {
    require(entries && out, "null argument");
    *out = new cs_gap_matrix{chainscope::GapMatrix(n, std::vector<double>(entries, entries + n * n))};
  });
}

void cs_gap_matrix_destroy(cs_gap_matrix* g) { delete g; }

size_t cs_gap_matrix_size(const cs_gap_matrix* g) { return g ? g->matrix.size() : 0; }

double cs_gap_matrix_entry(const cs_gap_matrix* g, size_t a, size_t b) {
  if (!g || a >= g->matrix.size() || b >= g->matrix.size()) return -1.0;
  return g->matrix(a, b);
}

double cs_gap_matrix_resolution(const cs_gap_matrix* g) { return g ? g->matrix.resolution() : -1.0; }

cs_status cs_chain_reaches(const cs_gap_matrix* g, double eps, size_t x, size_t y, int* reaches, size_t* witness,
                           size_t capacity, size_t* witness_len) {
  return guarded([&] {
    require(g && reaches, "null argument");
    auto chain = chainscope::chain_reaches(g->matrix, eps, x, y);
    *reaches = chain ? 1 : 0;
    const std::size_t len = chain ? chain->points.size() : 0;
    if (witness_len) *witness_len = len;
    if (witness) {
      for (std::size_t i = 0; i < len && i < capacity; ++i) witness[i] = chain->points[i];
    }
  });
}

cs_status cs_chain_recurrent_set(const cs_gap_matrix* g, double eps, size_t* out, size_t capacity, size_t* count) {
  return guarded([&] {
    require(g && count, "null argument");
    auto cr = chainscope::chain_recurrent_set(g->matrix, eps);
    *count = cr.size();
    if (out) {
      for (std::size_t i = 0; i < cr.size() && i < capacity; ++i) out[i] = cr[i];
    }
  });
}

int cs_run(const char* config_json, char** report, char** dot, char** diagnostic) {
  chainscope::RunResult r;
  cs_status s = guarded([&] {
    require(config_json != nullptr, "null config");
    r = chainscope::run(chainscope::parse_run_config(config_json));
  });
  if (s != CS_OK) r = {chainscope::kExitValidation, "", "", last_error};
  hand_out(report, r.report);
  hand_out(dot, r.dot);
  hand_out(diagnostic, r.diagnostic);
  return r.exit_code;
}

int cs_run_paper_suite(const char* only, double sigma1_metric_scale, char** report, char** diagnostic) {
  chainscope::PaperSuiteOptions options;
  options.sigma1_metric_scale = sigma1_metric_scale;
  if (only) {
    std::string_view rest(only);
    while (!rest.empty()) {
      auto comma = rest.find(',');
      if (comma != 0) options.only.emplace_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  }
  chainscope::RunResult r;
  cs_status s = guarded([&] { r = chainscope::run_paper_suite(options); });
  if (s != CS_OK) r = {chainscope::kExitValidation, "", "", last_error};
  hand_out(report, r.report);
  hand_out(diagnostic, r.diagnostic);
  return r.exit_code;
}

}  // extern "C"
