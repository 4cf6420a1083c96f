// SPDX-License-Identifier: Apache-2.0
#include "context.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>

#include "json.hpp"

namespace lfm {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr int kCacheFormat = 1;

std::mutex& dir_mutex() {
  static std::mutex mu;
  return mu;
}

std::string& dir_storage() {
  static std::string dir = cache_dir_from_env();
  return dir;
}

std::string entry_path(const std::string& stem, Family f, int k, mpfr_prec_t prec, long cutoff) {
  std::string dir = cache_dir();
  if (dir.empty()) return {};
  return (fs::path(dir) / (stem + "_" + family_name(f) + "_k" + std::to_string(k) + "_p" + std::to_string(prec) + "_P" +
                           std::to_string(cutoff) + ".json"))
      .string();
}

json real_json(const PrecReal& x) { return json{{"bits", x.precision()}, {"hex", x.to_exact_string()}}; }

PrecReal real_from(const json& j) { return PrecReal::parse(j.at("hex").get<std::string>(), j.at("bits").get<long>()); }

std::optional<json> read_entry(const std::string& path) {
  if (path.empty()) return std::nullopt;
  std::ifstream in(path);
  if (!in) return std::nullopt;
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object() || j.value("format", 0) != kCacheFormat) return std::nullopt;
  return j;
}

void write_entry(const std::string& path, const json& j) {
  if (path.empty()) return;
  std::error_code ec;
  fs::create_directories(fs::path(path).parent_path(), ec);
  if (ec) throw IoError("cannot create cache directory " + fs::path(path).parent_path().string());
  // Write then rename so a concurrent reader never sees a partial file.
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw IoError("cannot write cache entry " + tmp);
    out << j.dump(1) << '\n';
    if (!out) throw IoError("cannot write cache entry " + tmp);
  }
  fs::rename(tmp, path, ec);
  if (ec) throw IoError("cannot write cache entry " + path);
}

}  // namespace

std::string cache_dir_from_env() {
  const char* env = std::getenv("LFMOMENTS_CACHE_DIR");
  return env ? std::string(env) : std::string();
}

void validate(const RunSettings& s) {
  if (s.prec < 64) throw InvalidArgument("precision must be at least 64 bits");
  if (s.prec > 4096) throw InvalidArgument("precision above 4096 bits is not supported");
  if (s.cutoff < 100) throw InvalidArgument("prime cutoff must be at least 100");
  if (s.cutoff > 10000000) throw InvalidArgument("prime cutoff above 10^7 is not supported");
}

void set_cache_dir(const std::string& dir) {
  std::lock_guard<std::mutex> lock(dir_mutex());
  dir_storage() = dir;
}

std::string cache_dir() {
  std::lock_guard<std::mutex> lock(dir_mutex());
  return dir_storage();
}

std::optional<BCoeffTable> cache_load_b(Family f, int k, int max_weight, mpfr_prec_t prec, long cutoff) {
  auto j = read_entry(entry_path("bcoeffs_w" + std::to_string(max_weight), f, k, prec, cutoff));
  if (!j) return std::nullopt;
  try {
    BCoeffTable t;
    t.family = f;
    t.k = j->at("k").get<int>();
    t.max_weight = j->at("max_weight").get<int>();
    t.prec = j->at("prec").get<long>();
    t.cutoff = j->at("cutoff").get<long>();
    if (t.k != k || t.max_weight != max_weight || t.prec != prec || t.cutoff != cutoff) return std::nullopt;
    if (j->at("family").get<std::string>() != family_name(f)) return std::nullopt;
    t.tail_method = j->at("tail_method").get<std::string>();
    t.a_k = {real_from(j->at("a_k")), real_from(j->at("a_k_err"))};
    for (const auto& e : j->at("entries")) {
      t.lambdas.emplace_back(e.at("lambda").get<std::vector<int>>());
      t.values.push_back(real_from(e.at("value")));
      t.errors.push_back(real_from(e.at("err")));
    }
    return t;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void cache_store_b(const BCoeffTable& t) {
  const std::string path = entry_path("bcoeffs_w" + std::to_string(t.max_weight), t.family, t.k, t.prec, t.cutoff);
  if (path.empty()) return;
  json j{{"format", kCacheFormat}, {"family", family_name(t.family)}, {"k", t.k}, {"max_weight", t.max_weight},
         {"prec", t.prec}, {"cutoff", t.cutoff}, {"tail_method", t.tail_method}, {"a_k", real_json(t.a_k.value)},
         {"a_k_err", real_json(t.a_k.err)}};
  json entries = json::array();
  for (std::size_t i = 0; i < t.lambdas.size(); ++i)
    entries.push_back({{"lambda", t.lambdas[i].parts()}, {"value", real_json(t.values[i])}, {"err", real_json(t.errors[i])}});
  j["entries"] = std::move(entries);
  write_entry(path, j);
}

std::optional<ValueWithError> cache_load_ak(Family f, int k, mpfr_prec_t prec, long cutoff) {
  // The quadratic signs share a_k.
  if (!family_spec(f).elliptic()) f = Family::QuadraticMinus;
  auto j = read_entry(entry_path("ak", f, k, prec, cutoff));
  if (!j) return std::nullopt;
  try {
    if (j->at("k").get<int>() != k || j->at("prec").get<long>() != prec || j->at("cutoff").get<long>() != cutoff)
      return std::nullopt;
    return ValueWithError{real_from(j->at("value")), real_from(j->at("err"))};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void cache_store_ak(Family f, int k, mpfr_prec_t prec, long cutoff, const ValueWithError& v) {
  if (!family_spec(f).elliptic()) f = Family::QuadraticMinus;
  write_entry(entry_path("ak", f, k, prec, cutoff),
              json{{"format", kCacheFormat}, {"family", family_name(f)}, {"k", k}, {"prec", prec}, {"cutoff", cutoff},
                   {"value", real_json(v.value)}, {"err", real_json(v.err)}});
}

}  // namespace lfm
