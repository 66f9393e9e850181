#include "curvalpha/curvalpha.h"

#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "curvalpha/error.hpp"
#include "curvalpha/survey.hpp"
#include "curvalpha/verify.hpp"

using namespace curvalpha;

struct cva_context {
  TorusGeometry geom;
  int digits = 12;
  unsigned threads = 0;
  Alpha0Options alpha0;
};

struct cva_curvature {
  std::string raw_exact, raw_decimal;
  std::string norm_exact, norm_decimal;
  std::string closed_exact, closed_decimal;
  std::string beta_exact, beta_decimal;
  int bracket_sign = 0;
};

struct cva_alpha0 {
  Alpha0Result result;
  bool below_cap = false;
  std::string value;
  std::string json;
};

struct cva_sweep {
  std::vector<SweepRow> rows;
  std::string csv;
};

struct cva_scan {
  std::vector<ScanRecord> records;
  std::string jsonl;
  std::string csv;
  std::string summary;
};

struct cva_verify {
  bool passed = false;
  std::string report;
};

namespace {

thread_local std::string last_error;

cva_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return CVA_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return CVA_ERR_PARSE;
    case ErrorCode::ZeroMode: return CVA_ERR_ZERO_MODE;
    case ErrorCode::DegeneratePlane: return CVA_ERR_DEGENERATE_PLANE;
    case ErrorCode::DegenerateMode: return CVA_ERR_DEGENERATE_MODE;
    case ErrorCode::DegenerateDirectionSet: return CVA_ERR_DEGENERATE_DIRECTIONS;
  }
  return CVA_ERR_INTERNAL;
}

template <typename F>
cva_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return CVA_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown failure";
  }
  return CVA_ERR_INTERNAL;
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

WaveVector to_vector(cva_wave_vector v) { return WaveVector::checked(v.k1, v.k2); }

const cva_context& context_or_default(const cva_context* ctx) {
  static const cva_context defaults{};
  return ctx != nullptr ? *ctx : defaults;
}

}  // namespace

extern "C" {

const char* cva_version(void) { return "1.0.0"; }

const char* cva_last_error(void) { return last_error.c_str(); }

const char* cva_status_string(cva_status status) {
  switch (status) {
    case CVA_OK: return "ok";
    case CVA_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CVA_ERR_PARSE: return "parse error";
    case CVA_ERR_ZERO_MODE: return "zero mode";
    case CVA_ERR_DEGENERATE_PLANE: return "degenerate plane";
    case CVA_ERR_DEGENERATE_MODE: return "degenerate mode";
    case CVA_ERR_DEGENERATE_DIRECTIONS: return "degenerate direction set";
    case CVA_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

cva_status cva_context_create(cva_context** out) {
  return guarded([&] {
    require(out, "out");
    *out = new cva_context{};
  });
}

void cva_context_destroy(cva_context* ctx) { delete ctx; }

cva_status cva_context_set_area(cva_context* ctx, const char* area) {
  return guarded([&] {
    require(ctx, "context");
    require(area, "area");
    ctx->geom = TorusGeometry(parse_rational(area));
  });
}

cva_status cva_context_set_digits(cva_context* ctx, int digits) {
  return guarded([&] {
    require(ctx, "context");
    if (digits < 1 || digits > 60) throw Error(ErrorCode::InvalidArgument, "digits must be in [1, 60]");
    ctx->digits = digits;
    ctx->alpha0.digits = digits;
  });
}

cva_status cva_context_set_threads(cva_context* ctx, unsigned threads) {
  return guarded([&] {
    require(ctx, "context");
    ctx->threads = threads;
  });
}

cva_status cva_context_set_beta_tolerance(cva_context* ctx, const char* tolerance) {
  return guarded([&] {
    require(ctx, "context");
    require(tolerance, "tolerance");
    Scalar t = parse_rational(tolerance);
    if (sgn(t) <= 0) throw Error(ErrorCode::InvalidArgument, "beta tolerance must be positive");
    ctx->alpha0.beta_tolerance = t;
  });
}

cva_status cva_parse_wave_vector(const char* text, cva_wave_vector* out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    WaveVector v = parse_wave_vector(text);
    *out = {v.k1, v.k2};
  });
}

cva_status cva_curvature_compute(const cva_context* ctx, cva_wave_vector k, cva_wave_vector l, const char* alpha,
                                 cva_curvature** out) {
  return guarded([&] {
    require(out, "out");
    const cva_context& c = context_or_default(ctx);
    Scalar a = alpha != nullptr ? parse_rational(alpha) : Scalar(0);
    if (sgn(a) < 0) throw Error(ErrorCode::InvalidArgument, "alpha must be nonnegative");
    Beta beta = Beta::from_alpha(a);
    WaveVector kv = to_vector(k), lv = to_vector(l);
    CurvatureResult r = sectional_cos_cos_normalized(kv, lv, beta, c.geom);
    Scalar closed = sectional_cos_cos_closed(kv, lv, beta, c.geom);
    auto h = std::make_unique<cva_curvature>();
    h->raw_exact = to_exact_string(r.raw);
    h->raw_decimal = format_decimal(r.raw, c.digits);
    h->norm_exact = to_exact_string(r.normalized);
    h->norm_decimal = format_decimal(r.normalized, c.digits);
    h->closed_exact = to_exact_string(closed);
    h->closed_decimal = format_decimal(closed, c.digits);
    h->beta_exact = to_exact_string(beta.value());
    h->beta_decimal = format_decimal(beta.value(), c.digits);
    h->bracket_sign = sgn(bracket_value(kv, lv, beta));
    *out = h.release();
  });
}

void cva_curvature_destroy(cva_curvature* h) { delete h; }

const char* cva_curvature_raw(const cva_curvature* h, int exact) {
  return h == nullptr ? nullptr : (exact ? h->raw_exact : h->raw_decimal).c_str();
}
const char* cva_curvature_normalized(const cva_curvature* h, int exact) {
  return h == nullptr ? nullptr : (exact ? h->norm_exact : h->norm_decimal).c_str();
}
const char* cva_curvature_closed(const cva_curvature* h, int exact) {
  return h == nullptr ? nullptr : (exact ? h->closed_exact : h->closed_decimal).c_str();
}
const char* cva_curvature_beta(const cva_curvature* h, int exact) {
  return h == nullptr ? nullptr : (exact ? h->beta_exact : h->beta_decimal).c_str();
}
int cva_curvature_bracket_sign(const cva_curvature* h) { return h == nullptr ? 0 : h->bracket_sign; }

cva_status cva_alpha0_compute(const cva_context* ctx, cva_wave_vector k, cva_wave_vector l, const char* alpha_cap,
                              cva_alpha0** out) {
  return guarded([&] {
    require(out, "out");
    const cva_context& c = context_or_default(ctx);
    Scalar cap = alpha_cap != nullptr ? parse_rational(alpha_cap) : Scalar(1);
    if (sgn(cap) <= 0) throw Error(ErrorCode::InvalidArgument, "alpha cap must be positive");
    auto h = std::make_unique<cva_alpha0>();
    h->result = find_alpha0(to_vector(k), to_vector(l), c.alpha0);
    h->below_cap = h->result.exists && h->result.beta_star < cap * cap;
    if (h->result.exists) h->value = format_decimal(h->result.alpha0, c.digits);
    h->json = alpha0_json(h->result, cap, c.digits);
    *out = h.release();
  });
}

void cva_alpha0_destroy(cva_alpha0* h) { delete h; }
int cva_alpha0_exists(const cva_alpha0* h) { return h != nullptr && h->result.exists; }
int cva_alpha0_below_cap(const cva_alpha0* h) { return h != nullptr && h->below_cap; }
int cva_alpha0_positive_roots(const cva_alpha0* h) { return h == nullptr ? 0 : h->result.positive_roots; }
const char* cva_alpha0_reason(const cva_alpha0* h) { return h == nullptr ? nullptr : to_string(h->result.status); }
const char* cva_alpha0_value(const cva_alpha0* h) {
  return h == nullptr || !h->result.exists ? nullptr : h->value.c_str();
}
const char* cva_alpha0_json(const cva_alpha0* h) { return h == nullptr ? nullptr : h->json.c_str(); }

cva_status cva_sweep_compute(const cva_context* ctx, cva_wave_vector k, cva_wave_vector l, const char* alpha_min,
                             const char* alpha_max, int steps, cva_sweep** out) {
  return guarded([&] {
    require(out, "out");
    require(alpha_min, "alpha_min");
    require(alpha_max, "alpha_max");
    const cva_context& c = context_or_default(ctx);
    SweepSpec spec;
    spec.k = to_vector(k);
    spec.l = to_vector(l);
    spec.alpha_min = parse_rational(alpha_min);
    spec.alpha_max = parse_rational(alpha_max);
    spec.steps = steps;
    spec.geom = c.geom;
    auto h = std::make_unique<cva_sweep>();
    h->rows = run_sweep(spec);
    h->csv = sweep_csv(h->rows, c.digits);
    *out = h.release();
  });
}

void cva_sweep_destroy(cva_sweep* h) { delete h; }
size_t cva_sweep_rows(const cva_sweep* h) { return h == nullptr ? 0 : h->rows.size(); }
int cva_sweep_bracket_sign(const cva_sweep* h, size_t row) {
  return h == nullptr || row >= h->rows.size() ? 0 : h->rows[row].bracket_sign;
}
const char* cva_sweep_csv(const cva_sweep* h) { return h == nullptr ? nullptr : h->csv.c_str(); }

cva_status cva_scan_compute(const cva_context* ctx, int64_t kmin, int64_t kmax, const cva_wave_vector* eps,
                            size_t eps_count, const char* alpha_cap, cva_scan** out) {
  return guarded([&] {
    require(out, "out");
    if (eps_count > 0) require(eps, "eps");
    const cva_context& c = context_or_default(ctx);
    ScanSpec spec;
    spec.kmin = kmin;
    spec.kmax = kmax;
    for (size_t i = 0; i < eps_count; ++i) spec.eps.push_back(to_vector(eps[i]));
    spec.alpha_cap = alpha_cap != nullptr ? parse_rational(alpha_cap) : Scalar(1);
    if (sgn(spec.alpha_cap) <= 0) throw Error(ErrorCode::InvalidArgument, "alpha cap must be positive");
    spec.threads = c.threads;
    spec.options = c.alpha0;
    auto h = std::make_unique<cva_scan>();
    h->records = run_scan(spec);
    ScanSummary summary = summarize(h->records);
    h->jsonl = scan_jsonl(h->records, summary, c.digits);
    h->csv = scan_csv(h->records, c.digits);
    h->summary = summary_json(summary, c.digits);
    *out = h.release();
  });
}

void cva_scan_destroy(cva_scan* h) { delete h; }
size_t cva_scan_records(const cva_scan* h) { return h == nullptr ? 0 : h->records.size(); }
const char* cva_scan_jsonl(const cva_scan* h) { return h == nullptr ? nullptr : h->jsonl.c_str(); }
const char* cva_scan_csv(const cva_scan* h) { return h == nullptr ? nullptr : h->csv.c_str(); }
const char* cva_scan_summary_json(const cva_scan* h) { return h == nullptr ? nullptr : h->summary.c_str(); }

cva_status cva_verify_run(uint64_t seed, int cases, int component_bound, const char* connection_divisor,
                          cva_verify** out) {
  return guarded([&] {
    require(out, "out");
    VerifyOptions opt;
    opt.seed = seed;
    opt.cases = cases;
    opt.component_bound = component_bound;
    if (connection_divisor != nullptr) opt.connection_divisor = parse_rational(connection_divisor);
    VerifyReport rep = run_verify(opt);
    auto h = std::make_unique<cva_verify>();
    h->passed = rep.passed();
    h->report = rep.text();
    *out = h.release();
  });
}

void cva_verify_destroy(cva_verify* h) { delete h; }
int cva_verify_passed(const cva_verify* h) { return h != nullptr && h->passed; }
const char* cva_verify_report(const cva_verify* h) { return h == nullptr ? nullptr : h->report.c_str(); }

}  // extern "C"
