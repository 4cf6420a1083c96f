// SPDX-License-Identifier: Apache-2.0
#include "lfmoments/lfmoments.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <mutex>
#include <new>

#include "context.hpp"
#include "detkernel.hpp"
#include "golden.hpp"
#include "json.hpp"
#include "moments.hpp"
#include "nlambda.hpp"
#include "verify.hpp"

using nlohmann::json;

struct lfm_context {
  lfm::RunSettings settings;
  int digits = 0;
  std::string last_error;
};

namespace {

thread_local std::string g_last_error;

// The core caches are thread-safe, but the disk cache location is process-wide.
std::mutex g_compute_mutex;

lfm_status to_status(lfm::ErrorCode c) {
  switch (c) {
    case lfm::ErrorCode::InvalidArgument:
      return LFM_ERR_INVALID_ARGUMENT;
    case lfm::ErrorCode::Domain:
      return LFM_ERR_DOMAIN;
    case lfm::ErrorCode::Precision:
      return LFM_ERR_PRECISION;
    case lfm::ErrorCode::Io:
      return LFM_ERR_IO;
    case lfm::ErrorCode::Internal:
      return LFM_ERR_INTERNAL;
  }
  return LFM_ERR_INTERNAL;
}

lfm_status fail(lfm_context* ctx, lfm_status s, const std::string& msg) {
  (ctx ? ctx->last_error : g_last_error) = msg;
  return s;
}

template <class F>
lfm_status guarded(lfm_context* ctx, F&& body) {
  if (!ctx) return fail(nullptr, LFM_ERR_INVALID_ARGUMENT, "null context");
  try {
    body();
    ctx->last_error.clear();
    return LFM_OK;
  } catch (const lfm::PrecisionError& e) {
    return fail(ctx, LFM_ERR_PRECISION,
                std::string(e.what()) + " (about " + std::to_string(static_cast<int>(e.achievable_digits())) +
                    " digits achievable)");
  } catch (const lfm::Error& e) {
    return fail(ctx, to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ctx, LFM_ERR_INTERNAL, "out of memory");
  } catch (const json::exception& e) {
    return fail(ctx, LFM_ERR_INTERNAL, e.what());
  } catch (const std::exception& e) {
    return fail(ctx, LFM_ERR_INTERNAL, e.what());
  }
}

template <class F>
lfm_status emit(lfm_context* ctx, char** out, F&& build) {
  if (out) *out = nullptr;
  if (!out) return fail(ctx, LFM_ERR_INVALID_ARGUMENT, "null output pointer");
  return guarded(ctx, [&] {
    std::lock_guard<std::mutex> lock(g_compute_mutex);
    lfm::set_cache_dir(ctx->settings.cache_dir);
    json doc = build();
    std::string text = doc.dump(2);
    char* buf = static_cast<char*>(std::malloc(text.size() + 1));
    if (!buf) throw std::bad_alloc();
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out = buf;
  });
}

std::string real_text(const lfm_context* ctx, const lfm::PrecReal& x) {
  int d = ctx->digits;
  if (d <= 0) d = static_cast<int>(std::ceil(static_cast<double>(x.precision()) * std::log10(2.0))) + 1;
  return x.to_string(d);
}

std::string bound_text(const lfm::PrecReal& x) { return x.to_string(3); }

std::string require_text(const char* s, const char* what) {
  if (!s) throw lfm::InvalidArgument(std::string("missing ") + what);
  return s;
}

void check_weight(int w, int max) {
  if (w < 0 || w > max) throw lfm::InvalidArgument("weight must lie in [0, " + std::to_string(max) + "]");
}

// Coefficients up to r = 15 need b_lambda for |lambda| <= 15, a few minutes at k = 5.
constexpr int kMaxCoefficientIndex = 15;

void check_r(int r) {
  if (r > kMaxCoefficientIndex)
    throw lfm::InvalidArgument("coefficients beyond r = " + std::to_string(kMaxCoefficientIndex) +
                               " are not supported; lower --max-r");
}

void check_k(int k) {
  if (k < 1 || k > 12) throw lfm::InvalidArgument("k must lie in [1, 12]");
}

json poly_json(const lfm::ExactPoly& p) {
  json c = json::array();
  for (const auto& q : p.coefficients()) c.push_back(lfm::ExactRational(q).get_str());
  return json{{"text", lfm::factored_string(p)}, {"coefficients", c}};
}

json settings_json(const lfm_context* ctx) {
  return json{{"precision_bits", ctx->settings.prec}, {"prime_cutoff", ctx->settings.cutoff}};
}

json moment_json(const lfm_context* ctx, const lfm::MomentPolynomial& q) {
  json coeffs = json::array();
  for (std::size_t r = 0; r < q.coefficients.size(); ++r)
    coeffs.push_back(json{{"r", r}, {"value", real_text(ctx, q.coefficients[r])}, {"err_bound", bound_text(q.errors[r])}});
  return coeffs;
}

}  // namespace

extern "C" {

const char* lfm_version(void) { return "1.0.0"; }

const char* lfm_status_string(lfm_status s) {
  switch (s) {
    case LFM_OK:
      return "ok";
    case LFM_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case LFM_ERR_DOMAIN:
      return "domain error";
    case LFM_ERR_PRECISION:
      return "precision target not reachable";
    case LFM_ERR_IO:
      return "i/o error";
    case LFM_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

lfm_status lfm_context_create(lfm_context** out) {
  if (!out) return fail(nullptr, LFM_ERR_INVALID_ARGUMENT, "null output pointer");
  *out = nullptr;
  auto* ctx = new (std::nothrow) lfm_context;
  if (!ctx) return fail(nullptr, LFM_ERR_INTERNAL, "out of memory");
  ctx->settings.cache_dir = lfm::cache_dir_from_env();
  *out = ctx;
  return LFM_OK;
}

void lfm_context_destroy(lfm_context* ctx) { delete ctx; }

lfm_status lfm_context_set_precision(lfm_context* ctx, long bits) {
  return guarded(ctx, [&] {
    lfm::RunSettings s = ctx->settings;
    s.prec = bits;
    lfm::validate(s);
    ctx->settings = s;
  });
}

lfm_status lfm_context_set_prime_cutoff(lfm_context* ctx, long cutoff) {
  return guarded(ctx, [&] {
    lfm::RunSettings s = ctx->settings;
    s.cutoff = cutoff;
    lfm::validate(s);
    ctx->settings = s;
  });
}

lfm_status lfm_context_set_cache_dir(lfm_context* ctx, const char* dir) {
  return guarded(ctx, [&] { ctx->settings.cache_dir = dir ? dir : ""; });
}

lfm_status lfm_context_set_output_digits(lfm_context* ctx, int digits) {
  return guarded(ctx, [&] {
    if (digits < 0 || digits > 2000) throw lfm::InvalidArgument("output digits must lie in [0, 2000]");
    ctx->digits = digits;
  });
}

const char* lfm_last_error(const lfm_context* ctx) { return ctx ? ctx->last_error.c_str() : g_last_error.c_str(); }

void lfm_string_free(char* s) { std::free(s); }

lfm_status lfm_partitions_json(lfm_context* ctx, int weight, char** out) {
  return emit(ctx, out, [&] {
    check_weight(weight, 40);
    json parts = json::array();
    for (const auto& p : lfm::partitions_of(weight)) parts.push_back(p.parts());
    return json{{"weight", weight}, {"count", parts.size()}, {"partitions", parts}};
  });
}

lfm_status lfm_plambda_json(lfm_context* ctx, int max_weight, char** out) {
  return emit(ctx, out, [&] {
    check_weight(max_weight, 9);
    json rows = json::array();
    for (const auto& l : lfm::partitions_up_to(max_weight)) {
      if (l.empty()) continue;
      rows.push_back(json{{"lambda", l.parts()}, {"p", poly_json(lfm::p_lambda_cached(l))}});
    }
    return json{{"table", "plambda"}, {"max_weight", max_weight}, {"rows", rows}};
  });
}

lfm_status lfm_nlambda_json(lfm_context* ctx, int max_weight, char** out) {
  return emit(ctx, out, [&] {
    check_weight(max_weight, 9);
    json rows = json::array();
    for (const auto& l : lfm::partitions_up_to(max_weight)) {
      if (l.empty()) continue;
      lfm::ExactPoly n = lfm::n_lambda(l), r = lfm::r_lambda(l);
      auto [q, rem] = lfm::divmod(n, r);
      if (!rem.is_zero()) throw lfm::DomainError("r_lambda does not divide N_lambda for " + l.to_string());
      rows.push_back(json{{"lambda", l.parts()}, {"n", poly_json(n)}, {"n_over_r", poly_json(q)}, {"r", poly_json(r)}});
    }
    return json{{"table", "nlambda"}, {"max_weight", max_weight}, {"rows", rows}};
  });
}

lfm_status lfm_table_check_json(lfm_context* ctx, const char* table, int max_weight, char** out) {
  return emit(ctx, out, [&] {
    const std::string name = require_text(table, "table name");
    if (name != "plambda" && name != "nlambda") throw lfm::InvalidArgument("table must be plambda or nlambda");
    check_weight(max_weight, 9);
    const auto rows = lfm::load_poly_table(lfm::data_dir() + (name == "plambda" ? "/p_lambda.txt" : "/n_lambda.txt"));
    json mismatches = json::array();
    int checked = 0;
    for (const auto& row : rows) {
      if (row.lambda.weight() > max_weight) continue;
      ++checked;
      lfm::ExactPoly got, want = row.value;
      if (name == "plambda") {
        got = lfm::p_lambda_cached(row.lambda);
      } else {
        lfm::ExactPoly r = lfm::r_lambda(row.lambda);
        got = lfm::divmod(lfm::n_lambda(row.lambda), r).first;
        if (!(r == row.aux))
          mismatches.push_back(json{{"lambda", row.lambda.parts()}, {"column", "r"}, {"expected", lfm::factored_string(row.aux)},
                                    {"computed", lfm::factored_string(r)}});
      }
      if (!(got == want))
        mismatches.push_back(json{{"lambda", row.lambda.parts()}, {"column", name == "plambda" ? "p" : "n_over_r"},
                                  {"expected", lfm::factored_string(want)}, {"computed", lfm::factored_string(got)}});
    }
    return json{{"table", name}, {"max_weight", max_weight}, {"checked", checked}, {"ok", mismatches.empty()},
                {"mismatches", mismatches}};
  });
}

lfm_status lfm_dlambda_json(lfm_context* ctx, const char* partition, long k, char** out) {
  return emit(ctx, out, [&] {
    lfm::Partition l = lfm::Partition::parse(require_text(partition, "partition"));
    if (k < 1 || k > 40) throw lfm::InvalidArgument("k must lie in [1, 40]");
    if (l.length() > k) throw lfm::InvalidArgument("partition has more than k parts");
    lfm::ExactInt d = lfm::d_lambda(l, k);
    lfm::ExactRational pk = lfm::p_lambda_cached(l).eval(lfm::ExactRational(k));
    const long e = k * (k - 1) / 2 - l.weight();
    lfm::ExactRational scale = e >= 0 ? lfm::ExactRational(lfm::ExactInt(1) << static_cast<unsigned long>(e))
                                      : lfm::ExactRational(lfm::ExactInt(1), lfm::ExactInt(1) << static_cast<unsigned long>(-e));
    lfm::ExactRational via_p = scale * pk;
    via_p.canonicalize();
    return json{{"lambda", l.parts()},     {"k", k},
                {"determinant", d.get_str()}, {"p_lambda_at_k", pk.get_str()},
                {"power_of_two", e},          {"agrees", lfm::ExactRational(d) == via_p}};
  });
}

lfm_status lfm_bcoeffs_json(lfm_context* ctx, const char* family, int k, int max_weight, char** out) {
  return emit(ctx, out, [&] {
    lfm::Family f = lfm::parse_family(require_text(family, "family"));
    check_k(k);
    check_weight(max_weight, kMaxCoefficientIndex);
    const lfm::BCoeffTable& t = lfm::cached_b_coeffs(f, k, max_weight, ctx->settings.prec, ctx->settings.cutoff);
    json entries = json::array();
    for (std::size_t i = 0; i < t.lambdas.size(); ++i) {
      if (t.lambdas[i].weight() > max_weight) continue;
      entries.push_back(json{{"lambda", t.lambdas[i].parts()},
                             {"value", real_text(ctx, t.values[i])},
                             {"err_bound", bound_text(t.errors[i])}});
    }
    return json{{"family", lfm::family_name(f)},
                {"k", k},
                {"max_weight", max_weight},
                {"settings", settings_json(ctx)},
                {"tail_method", t.tail_method},
                {"a_k", real_text(ctx, t.a_k.value)},
                {"a_k_err_bound", bound_text(t.a_k.err)},
                {"b", entries}};
  });
}

lfm_status lfm_coeffs_json(lfm_context* ctx, const char* family, int k, int max_r, char** out) {
  return emit(ctx, out, [&] {
    lfm::Family f = lfm::parse_family(require_text(family, "family"));
    check_k(k);
    check_r(max_r < 0 ? lfm::moment_degree(f, k) : std::min(max_r, lfm::moment_degree(f, k)));
    lfm::MomentPolynomial q = lfm::q_polynomial(f, k, ctx->settings.prec, ctx->settings.cutoff, max_r);
    return json{{"family", lfm::family_name(f)},
                {"k", k},
                {"degree", q.degree},
                {"settings", settings_json(ctx)},
                {"coefficients", moment_json(ctx, q)},
                {"density_factor", real_text(ctx, lfm::density_factor(f, ctx->settings.prec))}};
  });
}

lfm_status lfm_qpoly_json(lfm_context* ctx, const char* family, int k, char** out) {
  return emit(ctx, out, [&] {
    lfm::Family f = lfm::parse_family(require_text(family, "family"));
    check_k(k);
    check_r(lfm::moment_degree(f, k));
    lfm::MomentPolynomial q = lfm::q_polynomial(f, k, ctx->settings.prec, ctx->settings.cutoff);
    lfm::AveragedPolynomial av = lfm::averaged_polynomial(q);
    return json{{"family", lfm::family_name(f)},
                {"k", k},
                {"degree", q.degree},
                {"settings", settings_json(ctx)},
                {"coefficients", moment_json(ctx, q)},
                {"averaged", json{{"coefficients", moment_json(ctx, av.poly)},
                                  {"remainder_over_x", real_text(ctx, av.remainder)}}},
                {"density_factor", real_text(ctx, lfm::density_factor(f, ctx->settings.prec))}};
  });
}

lfm_status lfm_verify_json(lfm_context* ctx, const char* suite, int kmax, char** out) {
  return emit(ctx, out, [&] {
    lfm::Suite s = lfm::parse_suite(require_text(suite, "suite"));
    if (kmax < 1 || kmax > 9) throw lfm::InvalidArgument("kmax must lie in [1, 9]");
    lfm::VerifyReport rep = lfm::verify_suite(s, ctx->settings, kmax);
    json cells = json::array();
    for (const auto& c : rep.cells) {
      char dev[32], tol[32];
      std::snprintf(dev, sizeof dev, "%.3e", c.deviation);
      std::snprintf(tol, sizeof tol, "%.1e", c.tolerance);
      cells.push_back(json{{"label", c.label},
                           {"k", c.k},
                           {"r", c.r},
                           {"reference", c.reference},
                           {"computed", c.computed},
                           {"deviation", dev},
                           {"tolerance", tol},
                           {"pass", c.pass}});
    }
    return json{{"suite", lfm::suite_name(s)}, {"settings", settings_json(ctx)}, {"ok", rep.ok},
                {"cells", cells},           {"messages", rep.messages}};
  });
}

}  // extern "C"
