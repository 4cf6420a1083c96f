// SPDX-License-Identifier: Apache-2.0
#include "algebra.hpp"

#include <algorithm>
#include <sstream>

namespace lfm {

ExactPoly::ExactPoly(std::vector<ExactRational> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

ExactPoly::ExactPoly(const ExactRational& c) {
  if (c != 0) c_.push_back(c);
}

ExactPoly ExactPoly::variable() { return monomial(1, 1); }

ExactPoly ExactPoly::monomial(const ExactRational& c, std::size_t power) {
  if (c == 0) return {};
  std::vector<ExactRational> v(power + 1);
  v[power] = c;
  return ExactPoly(std::move(v));
}

ExactPoly ExactPoly::from_roots(const std::vector<ExactRational>& roots, const ExactRational& lead) {
  ExactPoly p(lead);
  for (const auto& r : roots) p *= ExactPoly(std::vector<ExactRational>{-r, 1});
  return p;
}

void ExactPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ExactRational ExactPoly::eval(const ExactRational& x) const {
  ExactRational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ExactPoly ExactPoly::shifted(const ExactRational& shift) const {
  // Horner in polynomial arithmetic.
  ExactPoly lin(std::vector<ExactRational>{shift, 1});
  ExactPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= lin;
    acc += ExactPoly(*it);
  }
  return acc;
}

ExactPoly& ExactPoly::operator+=(const ExactPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

ExactPoly& ExactPoly::operator-=(const ExactPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<ExactRational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return ExactPoly(std::move(out));
}

ExactPoly& ExactPoly::operator*=(const ExactPoly& o) { return *this = *this * o; }

ExactPoly& ExactPoly::operator*=(const ExactRational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

ExactPoly& ExactPoly::operator/=(const ExactRational& s) {
  if (s == 0) throw DomainError("polynomial division by zero");
  for (auto& c : c_) c /= s;
  return *this;
}

ExactPoly ExactPoly::operator-() const {
  ExactPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

std::string ExactPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const ExactRational& c = c_[i];
    if (c == 0) continue;
    ExactRational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (a == 1);
    if (!unit || i == 0) os << a.get_str();
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::string factored_string(const ExactPoly& p, const std::string& var, int root_bound) {
  if (p.is_zero()) return "0";
  ExactPoly rest = p;
  std::vector<std::pair<long, int>> roots;
  for (long a = -root_bound; a <= root_bound && rest.degree() > 0; ++a) {
    int mult = 0;
    ExactPoly lin(std::vector<ExactRational>{ExactRational(-a), ExactRational(1)});
    while (rest.degree() > 0 && rest.eval(ExactRational(a)) == 0) {
      rest = divmod(rest, lin).first;
      ++mult;
    }
    if (mult) roots.emplace_back(a, mult);
  }
  std::ostringstream os;
  ExactRational lead = rest.leading();
  if (rest.degree() > 0) {
    rest /= lead;
  }
  const bool bare = roots.empty() && rest.degree() <= 0;
  if (bare || lead != 1) {
    if (lead == -1 && !bare) {
      os << "-";
    } else if (lead.get_den() != 1 && !bare) {
      os << "(" << lead.get_str() << ")";
    } else {
      os << lead.get_str();
    }
  }
  std::vector<std::string> factors;
  // Largest root first, as in "(k - 3) (k + 1)".
  for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
    std::string f = it->first == 0 ? var
                                   : "(" + var + (it->first > 0 ? " - " : " + ") +
                                         std::to_string(it->first < 0 ? -it->first : it->first) + ")";
    if (it->second > 1) f += "^" + std::to_string(it->second);
    factors.push_back(f);
  }
  if (rest.degree() > 0) factors.push_back("(" + rest.to_string(var) + ")");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i || (os.tellp() > 0 && os.str() != "-")) os << " ";
    os << factors[i];
  }
  return os.str();
}

std::pair<ExactPoly, ExactPoly> divmod(const ExactPoly& a, const ExactPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  ExactPoly r = a;
  std::vector<ExactRational> q(std::max(0, a.degree() - b.degree() + 1));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    ExactRational f = r.leading() / b.leading();
    q[shift] = f;
    r -= ExactPoly::monomial(f, shift) * b;
  }
  return {ExactPoly(std::move(q)), r};
}

ExactInt factorial(long n) {
  if (n < 0) throw DomainError("factorial of negative integer");
  ExactInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

ExactInt binomial(long n, long m) {
  if (m < 0) return 0;
  if (n >= 0) {
    if (m > n) return 0;
    ExactInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(m));
    return r;
  }
  ExactInt r;
  mpz_bin_ui(r.get_mpz_t(), ExactInt(n).get_mpz_t(), static_cast<unsigned long>(m));
  return r;
}

ExactInt falling_factorial(const ExactInt& x, long n) {
  if (n < 0) throw DomainError("falling factorial of negative length");
  ExactInt r = 1;
  for (long i = 0; i < n; ++i) r *= (x - i);
  return r;
}

ExactPoly falling_factorial(const ExactPoly& x, long n) {
  if (n < 0) throw DomainError("falling factorial of negative length");
  ExactPoly r(1);
  for (long i = 0; i < n; ++i) r *= (x - ExactPoly(i));
  return r;
}

ExactPoly binomial_poly(const ExactPoly& x, long m) {
  if (m < 0) return {};
  return falling_factorial(x, m) / ExactRational(factorial(m));
}

ExactPoly interpolate(const std::vector<std::pair<ExactRational, ExactRational>>& points) {
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (points[i].first == points[j].first) throw InvalidArgument("degenerate nodes");
  // Newton divided differences.
  std::vector<ExactRational> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
  for (std::size_t lvl = 1; lvl < n; ++lvl)
    for (std::size_t i = n - 1; i >= lvl; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - lvl].first);
  ExactPoly acc;
  for (std::size_t i = n; i-- > 0;) {
    acc *= ExactPoly(std::vector<ExactRational>{-points[i].first, 1});
    acc += ExactPoly(dd[i]);
  }
  return acc;
}

ExactInt det_bareiss(IntMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw InvalidArgument("determinant of non-square matrix");
  if (n == 0) return 1;
  int sign = 1;
  ExactInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

ExactRational det_rational(RationalMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw InvalidArgument("determinant of non-square matrix");
  ExactRational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(m[k], m[piv]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      ExactRational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

std::string rational_to_string(const ExactRational& q) {
  ExactRational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

ExactRational rational_from_string(const std::string& s) {
  ExactRational q;
  if (q.set_str(s, 10) != 0) throw InvalidArgument("not a rational: " + s);
  if (q.get_den() == 0) throw InvalidArgument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

}  // namespace lfm
