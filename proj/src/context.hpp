// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>

#include "arithfactors.hpp"

namespace lfm {

struct RunSettings {
  mpfr_prec_t prec = 256;
  long cutoff = kDefaultPrimeCutoff;
  std::string cache_dir;  // empty disables the disk cache
};

// LFMOMENTS_CACHE_DIR, or empty.
std::string cache_dir_from_env();

void validate(const RunSettings& s);

// Process-wide disk cache location used by the moment routines.
void set_cache_dir(const std::string& dir);
std::string cache_dir();

// Entries are JSON files holding exact binary values and their precision.
// Unreadable or mismatched entries are ignored.
std::optional<BCoeffTable> cache_load_b(Family f, int k, int max_weight, mpfr_prec_t prec, long cutoff);
void cache_store_b(const BCoeffTable& t);
std::optional<ValueWithError> cache_load_ak(Family f, int k, mpfr_prec_t prec, long cutoff);
void cache_store_ak(Family f, int k, mpfr_prec_t prec, long cutoff, const ValueWithError& v);

}  // namespace lfm
