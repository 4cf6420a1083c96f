// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <string>

#include "json.hpp"
#include "lfmoments/lfmoments.h"

using nlohmann::json;

namespace {

struct Ctx {
  lfm_context* c = nullptr;
  Ctx() {
    REQUIRE(lfm_context_create(&c) == LFM_OK);
    REQUIRE(lfm_context_set_cache_dir(c, nullptr) == LFM_OK);
  }
  ~Ctx() { lfm_context_destroy(c); }
};

json take(char* s) {
  REQUIRE(s != nullptr);
  json j = json::parse(s);
  lfm_string_free(s);
  return j;
}

double num(const json& s) { return std::strtod(s.get<std::string>().c_str(), nullptr); }

}  // namespace

TEST_CASE("context lifecycle and settings") {
  CHECK(std::string(lfm_version()).size() > 0);
  Ctx ctx;
  CHECK(lfm_context_set_precision(ctx.c, 128) == LFM_OK);
  CHECK(lfm_context_set_precision(ctx.c, 32) == LFM_ERR_INVALID_ARGUMENT);
  CHECK(std::string(lfm_last_error(ctx.c)).find("64") != std::string::npos);
  CHECK(lfm_context_set_prime_cutoff(ctx.c, 50) == LFM_ERR_INVALID_ARGUMENT);
  CHECK(lfm_context_set_output_digits(ctx.c, -1) == LFM_ERR_INVALID_ARGUMENT);
  CHECK(lfm_context_set_output_digits(ctx.c, 19) == LFM_OK);
  CHECK(std::string(lfm_last_error(ctx.c)).empty());
  CHECK(std::string(lfm_status_string(LFM_ERR_PRECISION)).size() > 0);
  lfm_context_destroy(nullptr);
}

TEST_CASE("null arguments") {
  char* out = reinterpret_cast<char*>(1);
  CHECK(lfm_partitions_json(nullptr, 3, &out) == LFM_ERR_INVALID_ARGUMENT);
  CHECK(out == nullptr);
  CHECK(std::string(lfm_last_error(nullptr)) == "null context");
  CHECK(lfm_context_create(nullptr) == LFM_ERR_INVALID_ARGUMENT);
  Ctx ctx;
  CHECK(lfm_partitions_json(ctx.c, 3, nullptr) == LFM_ERR_INVALID_ARGUMENT);
  CHECK(lfm_bcoeffs_json(ctx.c, nullptr, 1, 1, &out) == LFM_ERR_INVALID_ARGUMENT);
  CHECK(out == nullptr);
  lfm_string_free(nullptr);
}

TEST_CASE("combinatorial tables") {
  Ctx ctx;
  char* out = nullptr;
  REQUIRE(lfm_partitions_json(ctx.c, 4, &out) == LFM_OK);
  json p = take(out);
  CHECK(p["count"] == 5);
  CHECK(p["partitions"][1] == json::array({3, 1}));

  REQUIRE(lfm_table_check_json(ctx.c, "plambda", 7, &out) == LFM_OK);
  json pc = take(out);
  CHECK(pc["ok"] == true);
  CHECK(pc["checked"] == 44);
  REQUIRE(lfm_table_check_json(ctx.c, "nlambda", 7, &out) == LFM_OK);
  CHECK(take(out)["ok"] == true);
  CHECK(lfm_table_check_json(ctx.c, "cminus", 7, &out) == LFM_ERR_INVALID_ARGUMENT);

  REQUIRE(lfm_plambda_json(ctx.c, 7, &out) == LFM_OK);
  json pl = take(out);
  bool found = false;
  for (const auto& row : pl["rows"])
    if (row["lambda"] == json::array({5, 2})) {
      found = true;
      CHECK(row["p"]["text"] == "(1/360) (k - 3) (k + 1) (k + 2) (k + 3) (k + 4)^2 (k + 5)");
    }
  CHECK(found);

  REQUIRE(lfm_nlambda_json(ctx.c, 5, &out) == LFM_OK);
  json nl = take(out);
  for (const auto& row : nl["rows"])
    if (row["lambda"] == json::array({3, 2})) CHECK(row["n_over_r"]["text"] == "-2 (k - 2) (k + 1) (k + 2) (k + 3)");

  REQUIRE(lfm_dlambda_json(ctx.c, "3,1", 4, &out) == LFM_OK);
  json d = take(out);
  CHECK(d["agrees"] == true);
  CHECK(d["determinant"] == "336");
  CHECK(lfm_dlambda_json(ctx.c, "1,1,1", 2, &out) == LFM_ERR_INVALID_ARGUMENT);
  CHECK(lfm_dlambda_json(ctx.c, "1,x", 2, &out) == LFM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("moment coefficients through the library boundary") {
  Ctx ctx;
  REQUIRE(lfm_context_set_precision(ctx.c, 128) == LFM_OK);
  REQUIRE(lfm_context_set_prime_cutoff(ctx.c, 1000) == LFM_OK);
  char* out = nullptr;

  REQUIRE(lfm_coeffs_json(ctx.c, "qd-minus", 1, 1, &out) == LFM_OK);
  json c = take(out);
  REQUIRE(c["coefficients"].size() == 2);
  CHECK(num(c["coefficients"][0]["value"]) == doctest::Approx(0.3522211004995827964).epsilon(1e-15));
  CHECK(num(c["coefficients"][1]["value"]) == doctest::Approx(0.6175500336140218487).epsilon(1e-15));
  CHECK(c.contains("density_factor"));

  REQUIRE(lfm_qpoly_json(ctx.c, "e11", 1, &out) == LFM_OK);
  json e = take(out);
  CHECK(e["degree"] == 0);
  CHECK(e["coefficients"].size() == 1);

  // c(1, k) / c(0, k) = b_[1] N_[1](k) with N_[1](2) = 6.
  REQUIRE(lfm_bcoeffs_json(ctx.c, "qd-plus", 2, 2, &out) == LFM_OK);
  json b = take(out);
  CHECK(b["b"][0]["lambda"] == json::array());
  CHECK(num(b["b"][0]["value"]) == 1.0);
  double b1 = 0;
  for (const auto& row : b["b"])
    if (row["lambda"] == json::array({1})) b1 = num(row["value"]);
  REQUIRE(lfm_coeffs_json(ctx.c, "qd-plus", 2, 1, &out) == LFM_OK);
  json cp = take(out);
  double ratio = num(cp["coefficients"][1]["value"]) / num(cp["coefficients"][0]["value"]);
  CHECK(ratio == doctest::Approx(6 * b1).epsilon(1e-12));

  CHECK(lfm_coeffs_json(ctx.c, "qd-zero", 1, 1, &out) == LFM_ERR_INVALID_ARGUMENT);
  CHECK(out == nullptr);
  CHECK(lfm_qpoly_json(ctx.c, "qd-minus", 6, &out) == LFM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("unreachable precision maps to a status") {
  Ctx ctx;
  REQUIRE(lfm_context_set_precision(ctx.c, 2048) == LFM_OK);
  REQUIRE(lfm_context_set_prime_cutoff(ctx.c, 100) == LFM_OK);
  char* out = nullptr;
  CHECK(lfm_coeffs_json(ctx.c, "qd-minus", 1, 1, &out) == LFM_ERR_PRECISION);
  CHECK(std::string(lfm_last_error(ctx.c)).find("digits") != std::string::npos);
}

TEST_CASE("json round trip") {
  Ctx ctx;
  REQUIRE(lfm_context_set_precision(ctx.c, 128) == LFM_OK);
  REQUIRE(lfm_context_set_prime_cutoff(ctx.c, 1000) == LFM_OK);
  char* out = nullptr;
  REQUIRE(lfm_qpoly_json(ctx.c, "qd-plus", 2, &out) == LFM_OK);
  std::string text(out);
  lfm_string_free(out);
  CHECK(json::parse(text).dump(2) == text);
}

TEST_CASE("cold and warm cache give identical output") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / ("lfm_capi_cache_" + std::to_string(std::rand()));
  fs::remove_all(dir);
  std::string first, second;
  for (std::string* dst : {&first, &second}) {
    Ctx ctx;
    REQUIRE(lfm_context_set_precision(ctx.c, 128) == LFM_OK);
    REQUIRE(lfm_context_set_prime_cutoff(ctx.c, 1000) == LFM_OK);
    REQUIRE(lfm_context_set_cache_dir(ctx.c, dir.string().c_str()) == LFM_OK);
    char* out = nullptr;
    REQUIRE(lfm_coeffs_json(ctx.c, "qd-minus", 2, -1, &out) == LFM_OK);
    *dst = out;
    lfm_string_free(out);
  }
  CHECK(first == second);
  CHECK(!fs::is_empty(dir));
  fs::remove_all(dir);
}

TEST_CASE("verification suites") {
  Ctx ctx;
  char* out = nullptr;
  REQUIRE(lfm_verify_json(ctx.c, "identities", 9, &out) == LFM_OK);
  CHECK(take(out)["ok"] == true);
  CHECK(lfm_verify_json(ctx.c, "everything", 9, &out) == LFM_ERR_INVALID_ARGUMENT);
}
