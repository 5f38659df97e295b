#include "rrmbox.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "rrm/eigensolver.hpp"
#include "rrm/reference.hpp"
#include "rrm/render.hpp"
#include "rrm/verification.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

rrm_status fault_status(rrm::SolverFault fault) {
  switch (fault) {
    case rrm::SolverFault::kNotPositiveDefinite: return RRM_ERR_NOT_POSITIVE_DEFINITE;
    case rrm::SolverFault::kNoConvergence: return RRM_ERR_NO_CONVERGENCE;
    case rrm::SolverFault::kDegenerateTrialState: return RRM_ERR_DEGENERATE;
  }
  return RRM_ERR_INTERNAL;
}

template <typename Fn>
rrm_status guarded(Fn&& fn) {
  try {
    fn();
    return RRM_OK;
  } catch (const rrm::SolverError& e) {
    g_last_error = e.what();
    return fault_status(e.fault());
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return RRM_ERR_INVALID_ARGUMENT;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return RRM_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RRM_ERR_INTERNAL;
  }
}

}  // namespace

struct rrm_context {
  rrm::PrecisionContext ctx;
};

struct rrm_model {
  rrm::ModelSpec spec;
};

struct rrm_spectrum {
  rrm::SpectrumResult result;
  std::vector<unsigned> order;
};

struct rrm_table {
  rrm::ConvergenceTable table;
  std::optional<rrm::PrecisionContext> ctx;
};

extern "C" {

const char* rrm_status_name(rrm_status status) {
  switch (status) {
    case RRM_OK: return "ok";
    case RRM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case RRM_ERR_NOT_POSITIVE_DEFINITE: return "overlap matrix not positive definite";
    case RRM_ERR_NO_CONVERGENCE: return "eigensolver did not converge";
    case RRM_ERR_DEGENERATE: return "degenerate trial state";
    case RRM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* rrm_last_error(void) { return g_last_error.c_str(); }

void rrm_string_free(char* s) { std::free(s); }

rrm_status rrm_context_new(unsigned decimal_digits, rrm_context** out) {
  if (!out) return RRM_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] { *out = new rrm_context{rrm::PrecisionContext(decimal_digits)}; });
}

rrm_status rrm_context_new_unchecked(unsigned decimal_digits, rrm_context** out) {
  if (!out) return RRM_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded(
      [&] { *out = new rrm_context{rrm::PrecisionContext::unchecked(decimal_digits)}; });
}

unsigned rrm_context_digits(const rrm_context* ctx) {
  return ctx ? ctx->ctx.decimal_digits() : 0;
}

void rrm_context_free(rrm_context* ctx) { delete ctx; }

rrm_status rrm_model_standard(rrm_model** out) {
  if (!out) return RRM_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] { *out = new rrm_model{rrm::ModelSpec::standard()}; });
}

rrm_status rrm_model_projected(unsigned d, rrm_model** out) {
  if (!out) return RRM_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] { *out = new rrm_model{rrm::ModelSpec::projected(d)}; });
}

rrm_status rrm_model_weighted(const char* const* alphas, unsigned count, rrm_model** out) {
  if (!out || (!alphas && count > 0)) return RRM_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    std::vector<rrm::Rational> w;
    w.reserve(count);
    for (unsigned i = 0; i < count; ++i) {
      if (!alphas[i]) throw std::invalid_argument("rrm_model_weighted: null weight string");
      w.push_back(rrm::Rational::from_decimal(alphas[i]));
    }
    *out = new rrm_model{rrm::ModelSpec::weighted(std::move(w))};
  });
}

void rrm_model_free(rrm_model* model) { delete model; }

rrm_status rrm_solve(const rrm_context* ctx, const rrm_model* model, unsigned basis_size,
                     rrm_spectrum** out) {
  if (!ctx || !model || !out) return RRM_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    rrm::SpectrumResult result =
        classify_null(solve(assemble(model->spec, basis_size, ctx->ctx), ctx->ctx), ctx->ctx);
    auto order = result.presentation_order();
    *out = new rrm_spectrum{std::move(result), std::move(order)};
  });
}

unsigned rrm_spectrum_size(const rrm_spectrum* s) {
  return s ? static_cast<unsigned>(s->result.eigenvalues.size()) : 0;
}

unsigned rrm_spectrum_null_count(const rrm_spectrum* s) {
  return s ? s->result.null_count() : 0;
}

rrm_status rrm_spectrum_value(const rrm_spectrum* s, unsigned index, unsigned digits,
                              char** out) {
  if (!s || !out) return RRM_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  if (index >= s->order.size()) {
    g_last_error = "rrm_spectrum_value: index out of range";
    return RRM_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    const rrm::BigReal& v = s->result.eigenvalues[s->order[index]];
    const std::string text =
        digits == 0 ? rrm::format_full(v) : rrm::format_significant(v, digits);
    *out = dup_string(text);
    if (!*out) throw std::bad_alloc();
  });
}

void rrm_spectrum_free(rrm_spectrum* s) { delete s; }

rrm_status rrm_table_build(const rrm_context* ctx, const rrm_model* model, unsigned n_min,
                           unsigned n_max, unsigned levels, rrm_table** out) {
  if (!ctx || !model || !out) return RRM_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    *out = new rrm_table{rrm::build_table(model->spec, n_min, n_max, levels, ctx->ctx),
                         ctx->ctx};
  });
}

rrm_status rrm_table_render(const rrm_table* t, const char* format, unsigned digits,
                            char** out) {
  if (!t || !format || !out) return RRM_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    const std::string fmt(format);
    std::string text;
    if (fmt == "table")
      text = rrm::render_text(t->table, digits);
    else if (fmt == "csv")
      text = rrm::render_csv(t->table, digits);
    else if (fmt == "json")
      text = rrm::render_json(t->table, digits);
    else
      throw std::invalid_argument("rrm_table_render: unknown format '" + fmt + "'");
    *out = dup_string(text);
    if (!*out) throw std::bad_alloc();
  });
}

rrm_status rrm_table_check_bounds(const rrm_table* t, int* all_ok, char** report) {
  if (!t || !all_ok) return RRM_ERR_INVALID_ARGUMENT;
  *all_ok = 0;
  if (report) *report = nullptr;
  return guarded([&] {
    const rrm::BoundReport bounds = rrm::verify_bounds(t->table, *t->ctx);
    *all_ok = bounds.applicable && bounds.all_bounds_ok && bounds.all_monotone_ok ? 1 : 0;
    if (report) {
      *report = dup_string(rrm::render_bounds(bounds, 10));
      if (!*report) throw std::bad_alloc();
    }
  });
}

void rrm_table_free(rrm_table* t) { delete t; }

rrm_status rrm_verify(const rrm_context* ctx, unsigned* passed, unsigned* failed,
                      char** report) {
  if (!ctx || !passed || !failed) return RRM_ERR_INVALID_ARGUMENT;
  *passed = 0;
  *failed = 0;
  if (report) *report = nullptr;
  return guarded([&] {
    const rrm::VerificationReport result = rrm::run_verification(ctx->ctx);
    *passed = result.passed();
    *failed = result.failed();
    if (report) {
      *report = dup_string(rrm::render_report(result));
      if (!*report) throw std::bad_alloc();
    }
  });
}

rrm_status rrm_cs_demo(const rrm_context* ctx, unsigned n, unsigned d, unsigned n_min,
                       unsigned n_max, const char* format, unsigned digits, int* all_below,
                       char** out) {
  if (!ctx || !format || !all_below || !out) return RRM_ERR_INVALID_ARGUMENT;
  *all_below = 0;
  *out = nullptr;
  return guarded([&] {
    if (n_min > n_max) throw std::invalid_argument("rrm_cs_demo: n_min > n_max");
    std::vector<rrm::CauchySchwarzResult> points;
    bool below = true;
    for (unsigned size = n_min; size <= n_max; ++size) {
      points.push_back(rrm::cauchy_schwarz_demo(n, d, size, ctx->ctx));
      below = below && points.back().below;
    }
    const std::string fmt(format);
    std::string text;
    if (fmt == "table")
      text = rrm::render_cs_text(points, digits);
    else if (fmt == "csv")
      text = rrm::render_cs_csv(points, digits);
    else if (fmt == "json")
      text = rrm::render_cs_json(points, digits);
    else
      throw std::invalid_argument("rrm_cs_demo: unknown format '" + fmt + "'");
    *all_below = below ? 1 : 0;
    *out = dup_string(text);
    if (!*out) throw std::bad_alloc();
  });
}

}  // extern "C"
