// SPDX-License-Identifier: Apache-2.0
#include "partitions.hpp"

#include <cctype>
#include <sstream>

namespace lfm {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InvalidArgument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidArgument("partition parts must be non-increasing");
    weight_ += parts_[i];
  }
}

Partition Partition::conjugate() const {
  std::vector<int> c(largest(), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[j];
  return Partition(std::move(c));
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> m(largest(), 0);
  for (int p : parts_) ++m[p - 1];
  return m;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << "]";
  return os.str();
}

Partition Partition::parse(const std::string& s) {
  std::vector<int> v;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      v.push_back(std::stoi(s.substr(i, j - i)));
      i = j;
    } else if (c == '[' || c == ']' || c == '(' || c == ')' || c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else {
      throw InvalidArgument("cannot parse partition: " + s);
    }
  }
  return Partition(std::move(v));
}

namespace {

void gen(int remaining, int cap, std::vector<int>& cur, int max_len, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (max_len >= 0 && static_cast<int>(cur.size()) >= max_len) return;
  for (int p = std::min(remaining, cap); p >= 1; --p) {
    cur.push_back(p);
    gen(remaining - p, p, cur, max_len, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw InvalidArgument("negative partition weight");
  std::vector<Partition> out;
  std::vector<int> cur;
  gen(n, n, cur, -1, out);
  return out;
}

std::vector<Partition> partitions_up_to(int max_weight, int max_length) {
  if (max_weight < 0) throw InvalidArgument("negative partition weight");
  std::vector<Partition> out;
  std::vector<int> cur;
  for (int n = 0; n <= max_weight; ++n) gen(n, n, cur, max_length, out);
  return out;
}

ExactPoly r_lambda(const Partition& lambda) {
  ExactPoly r = falling_factorial(ExactPoly::variable(), lambda.length());
  ExactInt den = 1;
  for (int m : lambda.multiplicities()) den *= factorial(m);
  return r / ExactRational(den);
}

ExactInt chi_degree(const Partition& lambda) {
  const int l = lambda.length();
  RationalMatrix m(l, std::vector<ExactRational>(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      int a = lambda.part(i) - i + j;
      m[i][j] = a < 0 ? ExactRational(0) : ExactRational(1, factorial(a));
    }
  ExactRational d = det_rational(std::move(m)) * ExactRational(factorial(lambda.weight()));
  if (d.get_den() != 1) throw Error(ErrorCode::Internal, "non-integral character degree");
  return d.get_num();
}

}  // namespace lfm
