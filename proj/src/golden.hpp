// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "algebra.hpp"
#include "partitions.hpp"

namespace lfm {

// Parses expressions such as "(1/3) (k + 2) (k^2 + k - 3)", "(k)_2/2" or "-(k-1)(k+2)".
ExactPoly parse_poly(const std::string& text);

struct GoldenPoly {
  Partition lambda;
  ExactPoly value;
  ExactPoly aux;  // second column when present
};

struct GoldenValue {
  int k;
  int r;
  std::string text;
};

// Directory holding the reference tables; LFMOMENTS_DATA_DIR overrides the build default.
std::string data_dir();

// Lines "partition | poly [| poly]"; '#' starts a comment.
std::vector<GoldenPoly> load_poly_table(const std::string& path);
// Lines "k r value".
std::vector<GoldenValue> load_value_table(const std::string& path);

}  // namespace lfm
