// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "algebra.hpp"

namespace lfm {

// Integer partition stored as non-increasing positive parts.
class Partition {
 public:
  Partition() = default;
  // Trailing zeros are dropped; increasing or negative input is rejected.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // Zero-based part, zero past the end.
  int part(int i) const { return i < length() ? parts_[i] : 0; }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  const std::vector<int>& parts() const { return parts_; }

  Partition conjugate() const;
  // m_i for i = 1..largest()
  std::vector<int> multiplicities() const;

  std::string to_string() const;
  // Accepts "[3,1]", "3,1", "(3, 1)", "3 1" and "[]".
  static Partition parse(const std::string& s);

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return a.parts_ != b.parts_; }
  friend bool operator<(const Partition& a, const Partition& b) {
    if (a.weight_ != b.weight_) return a.weight_ < b.weight_;
    return a.parts_ > b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// Partitions of n in reverse-lexicographic order: [n], [n-1,1], ..., [1^n].
std::vector<Partition> partitions_of(int n);
// All partitions with 0 <= |lambda| <= max_weight and at most max_length parts (-1 for unbounded).
std::vector<Partition> partitions_up_to(int max_weight, int max_length = -1);

// (k)_{l} / prod_i m_i! as a polynomial in k.
ExactPoly r_lambda(const Partition& lambda);
// |lambda|! det[1/(lambda_i - i + j)!]
ExactInt chi_degree(const Partition& lambda);

}  // namespace lfm
