// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "context.hpp"
#include "moments.hpp"

namespace lfm {

enum class Suite { CMinus, CPlus, Identities, Oracle };

Suite parse_suite(const std::string& name);  // cminus, cplus, identities, oracle
std::string suite_name(Suite s);

// 1e-10 for k <= 4, 1e-8 above.
double table_tolerance(int k);

struct CellCheck {
  std::string label;  // family or table name
  int k = 0;
  int r = 0;
  std::string reference;
  std::string computed;
  double deviation = 0;  // relative
  double tolerance = 0;
  bool pass = false;
};

struct VerifyReport {
  Suite suite = Suite::Identities;
  bool ok = true;
  std::vector<CellCheck> cells;
  std::vector<std::string> messages;
};

// Table suites recompute every stored cell with k <= kmax; the oracle suite
// compares the residue route with the assembled coefficients for k <= min(kmax, 2)
// on the quadratic families and k <= min(kmax, 3) on the elliptic one. The
// identity suite always covers k <= 30.
VerifyReport verify_suite(Suite s, const RunSettings& settings, int kmax = 9);

}  // namespace lfm
