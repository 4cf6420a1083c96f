// SPDX-License-Identifier: Apache-2.0
#include "golden.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace lfm {

namespace {

class PolyParser {
 public:
  explicit PolyParser(const std::string& s) : s_(s) {}

  ExactPoly parse() {
    ExactPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidArgument("cannot parse polynomial '" + s_ + "': " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(s_.substr(start, pos_ - start));
  }

  ExactPoly expr() {
    ExactPoly acc;
    bool neg = false;
    if (peek() == '-' || peek() == '+') neg = (s_[pos_++] == '-');
    acc = term();
    if (neg) acc = -acc;
    while (peek() == '+' || peek() == '-') {
      bool minus = s_[pos_++] == '-';
      ExactPoly t = term();
      if (minus)
        acc -= t;
      else
        acc += t;
    }
    return acc;
  }

  bool starts_factor() {
    char c = peek();
    return c == '(' || c == 'k' || std::isdigit(static_cast<unsigned char>(c));
  }

  ExactPoly term() {
    ExactPoly acc = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= factor();
      } else if (c == '/') {
        ++pos_;
        ExactPoly d = factor();
        if (d.degree() > 0 || d.is_zero()) fail("division by non-constant");
        acc /= d.coefficient(0);
      } else if (starts_factor()) {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  ExactPoly factor() {
    ExactPoly base = primary();
    if (peek() == '_') {
      ++pos_;
      base = falling_factorial(base, integer());
    }
    if (peek() == '^') {
      ++pos_;
      long e = integer();
      ExactPoly r(1);
      for (long i = 0; i < e; ++i) r *= base;
      base = r;
    }
    return base;
  }

  ExactPoly primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      ExactPoly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'k') {
      ++pos_;
      return ExactPoly::variable();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return ExactPoly(integer());
    fail("unexpected character");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

ExactPoly parse_poly(const std::string& text) { return PolyParser(text).parse(); }

std::string data_dir() {
  if (const char* env = std::getenv("LFMOMENTS_DATA_DIR"); env && *env) return env;
  return LFM_DEFAULT_DATA_DIR;
}

std::vector<GoldenPoly> load_poly_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::vector<GoldenPoly> out;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    std::string col;
    while (std::getline(ss, col, '|')) cols.push_back(trim(col));
    if (cols.size() < 2) throw IoError("malformed table line: " + line);
    GoldenPoly g{Partition::parse(cols[0]), parse_poly(cols[1]), ExactPoly(1)};
    if (cols.size() > 2) g.aux = parse_poly(cols[2]);
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<GoldenValue> load_value_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::vector<GoldenValue> out;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    GoldenValue v;
    if (!(ss >> v.k >> v.r >> v.text)) throw IoError("malformed value line: " + line);
    out.push_back(v);
  }
  return out;
}

}  // namespace lfm
