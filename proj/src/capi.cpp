#include "matwalk/matwalk.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "matwalk/runner.hpp"

struct mw_matrix {
  matwalk::ExactMatrix value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
mw_status guarded(F&& f) {
  try {
    g_last_error.clear();
    return f();
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return MW_ERR_INVALID;
  } catch (const std::out_of_range& e) {
    g_last_error = e.what();
    return MW_ERR_INVALID;
  } catch (const std::length_error& e) {
    g_last_error = e.what();
    return MW_ERR_LIMIT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MW_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

mw_status mw_matrix_from_json(const char* text, mw_matrix** out) {
  if (!text || !out) {
    g_last_error = "null argument";
    return MW_ERR_INVALID;
  }
  return guarded([&]() {
    try {
      *out = new mw_matrix{matwalk::runner::parse_matrix_json(text)};
      return MW_OK;
    } catch (const std::invalid_argument& e) {
      g_last_error = e.what();
      return MW_ERR_PARSE;
    }
  });
}

mw_status mw_matrix_from_plain(const char* text, mw_matrix** out) {
  if (!text || !out) {
    g_last_error = "null argument";
    return MW_ERR_INVALID;
  }
  return guarded([&]() {
    try {
      *out = new mw_matrix{matwalk::runner::parse_matrix_plain(text)};
      return MW_OK;
    } catch (const std::invalid_argument& e) {
      g_last_error = e.what();
      return MW_ERR_PARSE;
    }
  });
}

mw_status mw_matrix_generate(const char* family, int order, unsigned long long seed,
                             double density, const char* domain, mw_matrix** out) {
  if (!family || !domain || !out) {
    g_last_error = "null argument";
    return MW_ERR_INVALID;
  }
  return guarded([&]() {
    matwalk::GeneratorSpec spec;
    spec.family = family;
    spec.n = order;
    spec.seed = seed;
    spec.density = density;
    spec.domain = matwalk::domain_from_string(domain);
    *out = new mw_matrix{matwalk::generate(spec)};
    return MW_OK;
  });
}

mw_status mw_matrix_to_json(const mw_matrix* m, char** out_json) {
  if (!m || !out_json) {
    g_last_error = "null argument";
    return MW_ERR_INVALID;
  }
  return guarded([&]() {
    *out_json = dup_string(matwalk::runner::matrix_to_json(m->value).dump(2));
    return MW_OK;
  });
}

int mw_matrix_order(const mw_matrix* m) { return m ? m->value.order() : 0; }

}  // extern "C"

namespace {

template <typename F>
mw_status run_with_options(const mw_matrix* m, const char* options_json, char** report_json,
                           F&& runner_fn) {
  if (!m || !report_json) {
    g_last_error = "null argument";
    return MW_ERR_INVALID;
  }
  return guarded([&]() {
    const std::string opts_text = options_json ? options_json : "";
    const matwalk::runner::RunOptions opts =
        matwalk::runner::options_from_json(opts_text, m->value.order());
    *report_json = dup_string(runner_fn(m->value, opts).dump(2));
    return MW_OK;
  });
}

}  // namespace

extern "C" {

mw_status mw_run_check(const mw_matrix* m, const char* options_json, char** report_json) {
  return run_with_options(m, options_json, report_json, matwalk::runner::run_check);
}

mw_status mw_run_verify(const mw_matrix* m, const char* options_json, char** report_json) {
  return run_with_options(m, options_json, report_json, matwalk::runner::run_verify);
}

mw_status mw_run_oracle(const mw_matrix* m, const char* options_json, char** report_json) {
  return run_with_options(m, options_json, report_json, matwalk::runner::run_oracle);
}

mw_status mw_run_certificate(const mw_matrix* m, char** report_json) {
  if (!m || !report_json) {
    g_last_error = "null argument";
    return MW_ERR_INVALID;
  }
  return guarded([&]() {
    *report_json = dup_string(matwalk::runner::run_certificate(m->value).dump(2));
    return MW_OK;
  });
}

mw_status mw_run_fuzz(const char* options_json, char** report_json) {
  if (!report_json) {
    g_last_error = "null argument";
    return MW_ERR_INVALID;
  }
  return guarded([&]() {
    matwalk::runner::FuzzOptions opts;
    if (options_json && *options_json) {
      const auto doc = matwalk::runner::json::parse(options_json);
      opts.klass = doc.value("class", opts.klass);
      opts.count = doc.value("count", opts.count);
      opts.seed = doc.value("seed", opts.seed);
    }
    *report_json = dup_string(matwalk::runner::run_fuzz(opts).dump(2));
    return MW_OK;
  });
}

const char* mw_last_error(void) { return g_last_error.c_str(); }

void mw_matrix_free(mw_matrix* m) { delete m; }

void mw_string_free(char* s) { std::free(s); }

}  // extern "C"
