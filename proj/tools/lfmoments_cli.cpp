// SPDX-License-Identifier: Apache-2.0
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "lfmoments/lfmoments.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string family = "qd-minus";
  int k = 1;
  int max_r = -1;
  int max_weight = -1;
  long prec = 256;
  long cutoff = 10000;
  std::string cache_dir;
  bool cache_dir_set = false;
  std::string format = "text";
  bool check = false;
  std::string lambda;
  std::string suite;
  int kmax = 9;
};

struct ContextDeleter {
  void operator()(lfm_context* c) const { lfm_context_destroy(c); }
};
using ContextPtr = std::unique_ptr<lfm_context, ContextDeleter>;

class CallError : public std::runtime_error {
 public:
  CallError(lfm_status s, const std::string& msg) : std::runtime_error(msg), status(s) {}
  lfm_status status;
};

void check(lfm_context* ctx, lfm_status s) {
  if (s != LFM_OK) throw CallError(s, lfm_last_error(ctx));
}

template <class F>
json call(lfm_context* ctx, F&& f) {
  char* out = nullptr;
  check(ctx, f(&out));
  std::unique_ptr<char, void (*)(char*)> hold(out, lfm_string_free);
  return json::parse(out);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string lambda_text(const json& parts) {
  std::string s = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "") + std::to_string(parts[i].get<int>());
  return s + "]";
}

void print_doc(const Options& o, const json& doc, const std::string& kind) {
  if (o.format == "json") {
    std::cout << doc.dump(2) << '\n';
    return;
  }
  const bool csv = o.format == "csv";
  const char* sep = csv ? "," : " | ";
  if (kind == "partitions") {
    for (const auto& w : doc)
      for (const auto& p : w["partitions"]) std::cout << (csv ? csv_field(lambda_text(p)) : lambda_text(p)) << '\n';
  } else if (kind == "plambda") {
    if (csv) std::cout << "lambda,p\n";
    for (const auto& r : doc["rows"]) {
      const std::string l = lambda_text(r["lambda"]), p = r["p"]["text"];
      std::cout << (csv ? csv_field(l) : l) << sep << (csv ? csv_field(p) : p) << '\n';
    }
  } else if (kind == "nlambda") {
    if (csv) std::cout << "lambda,n_over_r,r\n";
    for (const auto& r : doc["rows"]) {
      const std::string l = lambda_text(r["lambda"]), n = r["n_over_r"]["text"], rr = r["r"]["text"];
      std::cout << (csv ? csv_field(l) : l) << sep << (csv ? csv_field(n) : n) << sep << (csv ? csv_field(rr) : rr) << '\n';
    }
  } else if (kind == "dlambda") {
    if (csv) std::cout << "lambda,k,determinant,p_lambda_at_k,power_of_two,agrees\n";
    std::cout << (csv ? csv_field(lambda_text(doc["lambda"])) : lambda_text(doc["lambda"])) << sep << doc["k"].get<long>()
              << sep << doc["determinant"].get<std::string>() << sep << doc["p_lambda_at_k"].get<std::string>() << sep
              << doc["power_of_two"].get<long>() << sep << (doc["agrees"].get<bool>() ? "true" : "false") << '\n';
  } else if (kind == "bcoeffs") {
    if (csv) std::cout << "lambda,value,err_bound\n";
    if (!csv) std::cout << "a_k" << sep << doc["a_k"].get<std::string>() << sep << doc["a_k_err_bound"].get<std::string>() << '\n';
    for (const auto& b : doc["b"]) {
      const std::string l = lambda_text(b["lambda"]);
      std::cout << (csv ? csv_field(l) : l) << sep << b["value"].get<std::string>() << sep << b["err_bound"].get<std::string>()
                << '\n';
    }
  } else if (kind == "coeffs" || kind == "qpoly") {
    if (csv) std::cout << "section,r,value,err_bound\n";
    auto rows = [&](const json& coeffs, const std::string& section) {
      for (const auto& c : coeffs) {
        if (csv) std::cout << section << ",";
        std::cout << c["r"].get<int>() << sep << c["value"].get<std::string>() << sep << c["err_bound"].get<std::string>()
                  << '\n';
      }
    };
    rows(doc["coefficients"], "q");
    if (kind == "qpoly") {
      if (!csv) std::cout << "averaged\n";
      rows(doc["averaged"]["coefficients"], "averaged");
      if (csv)
        std::cout << "remainder,," << doc["averaged"]["remainder_over_x"].get<std::string>() << ",\n";
      else
        std::cout << "remainder/X" << sep << doc["averaged"]["remainder_over_x"].get<std::string>() << '\n';
    }
    if (!csv) std::cout << "density factor" << sep << doc["density_factor"].get<std::string>() << '\n';
  }
}

int run_check(lfm_context* ctx, const Options& o, const std::string& table, int max_weight) {
  json doc = call(ctx, [&](char** out) { return lfm_table_check_json(ctx, table.c_str(), max_weight, out); });
  if (o.format == "json") {
    std::cout << doc.dump(2) << '\n';
  } else {
    for (const auto& m : doc["mismatches"])
      std::cout << "MISMATCH " << lambda_text(m["lambda"]) << " " << m["column"].get<std::string>()
                << "\n  expected: " << m["expected"].get<std::string>() << "\n  computed: " << m["computed"].get<std::string>()
                << '\n';
    std::cout << table << ": " << doc["checked"].get<int>() << " rows checked, "
              << (doc["ok"].get<bool>() ? "all match" : std::to_string(doc["mismatches"].size()) + " mismatches") << '\n';
  }
  return doc["ok"].get<bool>() ? kExitOk : kExitFailure;
}

int run_verify(lfm_context* ctx, const Options& o) {
  json doc = call(ctx, [&](char** out) { return lfm_verify_json(ctx, o.suite.c_str(), o.kmax, out); });
  if (o.format == "json") {
    std::cout << doc.dump(2) << '\n';
  } else {
    const bool csv = o.format == "csv";
    if (csv) std::cout << "label,k,r,reference,computed,deviation,tolerance,pass\n";
    for (const auto& c : doc["cells"]) {
      if (csv) {
        std::cout << csv_field(c["label"].get<std::string>()) << "," << c["k"].get<int>() << "," << c["r"].get<int>() << ","
                  << c["reference"].get<std::string>() << "," << c["computed"].get<std::string>() << ","
                  << c["deviation"].get<std::string>() << "," << c["tolerance"].get<std::string>() << ","
                  << (c["pass"].get<bool>() ? "true" : "false") << '\n';
      } else {
        std::printf("%-4s %-20s k=%d r=%-2d dev=%s tol=%s\n", c["pass"].get<bool>() ? "ok" : "FAIL",
                    c["label"].get<std::string>().c_str(), c["k"].get<int>(), c["r"].get<int>(),
                    c["deviation"].get<std::string>().c_str(), c["tolerance"].get<std::string>().c_str());
      }
    }
    if (!csv) {
      for (const auto& m : doc["messages"]) std::cout << m.get<std::string>() << '\n';
      std::cout << "suite " << doc["suite"].get<std::string>() << ": " << (doc["ok"].get<bool>() ? "PASS" : "FAIL") << '\n';
    }
  }
  return doc["ok"].get<bool>() ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Moment polynomials of quadratic Dirichlet L-functions and of quadratic twists of 11a"};
  app.require_subcommand(1);
  Options o;

  auto add_numeric = [&](CLI::App* sub) {
    sub->add_option("--prec", o.prec, "Working precision in bits")->check(CLI::Range(64L, 4096L));
    sub->add_option("--prime-cutoff", o.cutoff, "Primes summed directly before the tail")->check(CLI::Range(100L, 10000000L));
    sub->add_option("--cache-dir", o.cache_dir, "Disk cache directory (default $LFMOMENTS_CACHE_DIR)");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  };
  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "qd-plus, qd-minus or e11")->check(CLI::IsMember({"qd-plus", "qd-minus", "e11"}));
    sub->add_option("--k", o.k, "Moment index")->check(CLI::Range(1, 12));
  };

  auto* partitions = app.add_subcommand("partitions", "List partitions by weight");
  partitions->add_option("--max-weight", o.max_weight, "Largest weight")->check(CLI::Range(0, 40))->required();
  add_format(partitions);

  auto* plambda = app.add_subcommand("plambda", "Table of P_lambda(k)");
  plambda->add_option("--max-weight", o.max_weight, "Largest weight")->check(CLI::Range(1, 9));
  plambda->add_flag("--check", o.check, "Compare against the stored reference table");
  add_format(plambda);

  auto* nlambda = app.add_subcommand("nlambda", "Table of N_lambda(k) / r_lambda(k)");
  nlambda->add_option("--max-weight", o.max_weight, "Largest weight")->check(CLI::Range(1, 9));
  nlambda->add_flag("--check", o.check, "Compare against the stored reference table");
  add_format(nlambda);

  auto* dlambda = app.add_subcommand("dlambda", "Brute-force determinant D_lambda(k)");
  dlambda->add_option("--lambda", o.lambda, "Partition, e.g. 3,1")->required();
  dlambda->add_option("--k", o.k, "Matrix size")->check(CLI::Range(1, 40))->required();
  add_format(dlambda);

  auto* bcoeffs = app.add_subcommand("bcoeffs", "Taylor coefficients b_lambda(k)");
  add_family(bcoeffs);
  bcoeffs->add_option("--max-weight", o.max_weight, "Largest |lambda|")->check(CLI::Range(0, 15));
  add_numeric(bcoeffs);
  add_format(bcoeffs);

  auto* coeffs = app.add_subcommand("coeffs", "Coefficients c(r, k) of the moment polynomial");
  add_family(coeffs);
  coeffs->add_option("--max-r", o.max_r, "Largest r (default min(degree, 10))")->check(CLI::Range(0, 15));
  add_numeric(coeffs);
  add_format(coeffs);

  auto* qpoly = app.add_subcommand("qpoly", "Full moment polynomial and its average");
  add_family(qpoly);
  add_numeric(qpoly);
  add_format(qpoly);

  auto* verify = app.add_subcommand("verify", "Recompute reference tables and identities");
  verify->add_option("suite", o.suite, "cminus, cplus, identities or oracle")
      ->required()
      ->check(CLI::IsMember({"cminus", "cplus", "identities", "oracle"}));
  verify->add_option("--k", o.kmax, "Largest k to check")->check(CLI::Range(1, 9));
  add_numeric(verify);
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  for (auto* sub : {bcoeffs, coeffs, qpoly, verify})
    if (sub->parsed() && sub->count("--cache-dir")) o.cache_dir_set = true;

  lfm_context* raw = nullptr;
  if (lfm_context_create(&raw) != LFM_OK) {
    std::cerr << "error: " << lfm_last_error(nullptr) << '\n';
    return kExitFailure;
  }
  ContextPtr ctx(raw);
  lfm_context* c = ctx.get();

  try {
    check(c, lfm_context_set_precision(c, o.prec));
    check(c, lfm_context_set_prime_cutoff(c, o.cutoff));
    if (o.cache_dir_set) check(c, lfm_context_set_cache_dir(c, o.cache_dir.c_str()));
    check(c, lfm_context_set_output_digits(c, o.format == "text" ? 19 : 0));

    if (partitions->parsed()) {
      json all = json::array();
      for (int w = 0; w <= o.max_weight; ++w)
        all.push_back(call(c, [&](char** out) { return lfm_partitions_json(c, w, out); }));
      print_doc(o, all, "partitions");
    } else if (plambda->parsed() || nlambda->parsed()) {
      const std::string table = plambda->parsed() ? "plambda" : "nlambda";
      if (o.check) return run_check(c, o, table, o.max_weight < 0 ? 7 : o.max_weight);
      const int w = o.max_weight < 0 ? 7 : o.max_weight;
      json doc = call(c, [&](char** out) {
        return table == "plambda" ? lfm_plambda_json(c, w, out) : lfm_nlambda_json(c, w, out);
      });
      print_doc(o, doc, table);
    } else if (dlambda->parsed()) {
      print_doc(o, call(c, [&](char** out) { return lfm_dlambda_json(c, o.lambda.c_str(), o.k, out); }), "dlambda");
    } else if (bcoeffs->parsed()) {
      const int w = o.max_weight < 0 ? 4 : o.max_weight;
      print_doc(o, call(c, [&](char** out) { return lfm_bcoeffs_json(c, o.family.c_str(), o.k, w, out); }), "bcoeffs");
    } else if (coeffs->parsed()) {
      int max_r = o.max_r;
      if (max_r < 0) max_r = 10;
      print_doc(o, call(c, [&](char** out) { return lfm_coeffs_json(c, o.family.c_str(), o.k, max_r, out); }), "coeffs");
    } else if (qpoly->parsed()) {
      print_doc(o, call(c, [&](char** out) { return lfm_qpoly_json(c, o.family.c_str(), o.k, out); }), "qpoly");
    } else if (verify->parsed()) {
      return run_verify(c, o);
    }
  } catch (const CallError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.status == LFM_ERR_INVALID_ARGUMENT ? kExitUsage : kExitFailure;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed library output: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}
