// SPDX-License-Identifier: Apache-2.0
#include "mseries.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>

namespace lfm {

namespace {

constexpr std::size_t kDenseLimit = std::size_t(1) << 22;

}  // namespace

MonomialSet::MonomialSet(int vars, std::vector<Exponent> members) : vars_(vars) {
  if (vars < 0) throw InvalidArgument("negative number of variables");
  for (auto& m : members)
    if (static_cast<int>(m.size()) != vars) throw InvalidArgument("exponent of wrong length");
  auto deg = [](const Exponent& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
  };
  std::sort(members.begin(), members.end(), [&](const Exponent& a, const Exponent& b) {
    int da = deg(a), db = deg(b);
    if (da != db) return da < db;
    return a > b;
  });
  members.erase(std::unique(members.begin(), members.end()), members.end());
  caps_.assign(vars, 0);
  flat_.reserve(members.size() * vars);
  for (const auto& m : members) {
    for (int v = 0; v < vars; ++v) {
      if (m[v] < 0) throw InvalidArgument("negative exponent");
      caps_[v] = std::max(caps_[v], m[v]);
      flat_.push_back(m[v]);
    }
    degree_.push_back(deg(m));
  }
  std::size_t box = 1;
  bool overflow = false;
  strides_.assign(vars, 0);
  for (int v = vars - 1; v >= 0; --v) {
    strides_[v] = box;
    std::size_t w = static_cast<std::size_t>(caps_[v]) + 1;
    if (box > kDenseLimit / w) overflow = true;
    box *= w;
  }
  dense_ = !overflow && box <= kDenseLimit;
  if (dense_) {
    dense_index_.assign(box, -1);
    for (std::size_t i = 0; i < size(); ++i) {
      std::size_t k = 0;
      for (int v = 0; v < vars; ++v) k += strides_[v] * exponent(i)[v];
      dense_index_[k] = static_cast<std::int32_t>(i);
    }
  } else {
    bits_.resize(vars);
    int total = 0;
    for (int v = 0; v < vars; ++v) {
      bits_[v] = std::bit_width(static_cast<unsigned>(caps_[v]));
      total += bits_[v];
    }
    if (total > 64) throw InvalidArgument("monomial set too wide to index");
    hash_index_.reserve(size() * 2);
    for (std::size_t i = 0; i < size(); ++i) hash_index_.emplace(key(exponent(i)), static_cast<std::uint32_t>(i));
  }
  // Downward closure check: every e - unit_v must be present.
  std::vector<int> tmp(vars);
  for (std::size_t i = 0; i < size(); ++i) {
    const int* e = exponent(i);
    for (int v = 0; v < vars; ++v) {
      if (e[v] == 0) continue;
      std::copy(e, e + vars, tmp.begin());
      --tmp[v];
      if (index_of(tmp.data()) < 0) throw InvalidArgument("monomial set is not downward closed");
    }
  }
}

std::uint64_t MonomialSet::key(const int* e) const {
  std::uint64_t k = 0;
  for (int v = 0; v < vars_; ++v) k = (k << bits_[v]) | static_cast<std::uint64_t>(e[v]);
  return k;
}

long MonomialSet::index_of(const int* e) const {
  for (int v = 0; v < vars_; ++v)
    if (e[v] < 0 || e[v] > caps_[v]) return -1;
  if (dense_) {
    std::size_t k = 0;
    for (int v = 0; v < vars_; ++v) k += strides_[v] * e[v];
    return dense_index_[k];
  }
  auto it = hash_index_.find(key(e));
  return it == hash_index_.end() ? -1 : static_cast<long>(it->second);
}

long MonomialSet::index_of(const Exponent& e) const {
  if (static_cast<int>(e.size()) != vars_) return -1;
  return index_of(e.data());
}

bool MonomialSet::same_shape(const MonomialSet& o) const {
  return vars_ == o.vars_ && flat_ == o.flat_;
}

const MonomialSet::Convolution& MonomialSet::convolution() const {
  std::call_once(conv_once_, [this] {
    conv_.offsets.assign(size() + 1, 0);
    std::vector<int> sub(vars_), rest(vars_);
    for (std::size_t t = 0; t < size(); ++t) {
      conv_.offsets[t] = static_cast<std::uint32_t>(conv_.first.size());
      const int* e = exponent(t);
      std::fill(sub.begin(), sub.end(), 0);
      // Odometer over the sub-box 0 <= sub <= e.
      while (true) {
        for (int v = 0; v < vars_; ++v) rest[v] = e[v] - sub[v];
        conv_.first.push_back(static_cast<std::uint32_t>(index_of(sub.data())));
        conv_.second.push_back(static_cast<std::uint32_t>(index_of(rest.data())));
        int v = vars_ - 1;
        while (v >= 0 && sub[v] == e[v]) sub[v--] = 0;
        if (v < 0) break;
        ++sub[v];
      }
    }
    conv_.offsets[size()] = static_cast<std::uint32_t>(conv_.first.size());
  });
  return conv_;
}

MonomialSet::Ptr MonomialSet::total_degree(int vars, int max_degree, std::vector<int> caps) {
  if (max_degree < 0) throw InvalidArgument("negative total degree");
  if (!caps.empty() && static_cast<int>(caps.size()) != vars) throw InvalidArgument("caps of wrong length");
  std::vector<Exponent> out;
  Exponent cur(vars, 0);
  std::function<void(int, int)> rec = [&](int v, int budget) {
    if (v == vars) {
      out.push_back(cur);
      return;
    }
    int hi = caps.empty() ? budget : std::min(budget, caps[v]);
    for (int a = 0; a <= hi; ++a) {
      cur[v] = a;
      rec(v + 1, budget - a);
    }
    cur[v] = 0;
  };
  rec(0, max_degree);
  return std::make_shared<MonomialSet>(vars, std::move(out));
}

MonomialSet::Ptr MonomialSet::box(std::vector<int> caps) {
  const int vars = static_cast<int>(caps.size());
  for (int c : caps)
    if (c < 0) throw InvalidArgument("negative cap");
  std::vector<Exponent> out;
  Exponent cur(vars, 0);
  while (true) {
    out.push_back(cur);
    int v = vars - 1;
    while (v >= 0 && cur[v] == caps[v]) cur[v--] = 0;
    if (v < 0) break;
    ++cur[v];
  }
  return std::make_shared<MonomialSet>(vars, std::move(out));
}

MonomialSet::Ptr MonomialSet::partition_dominated(int vars, int max_weight) {
  if (max_weight < 0) throw InvalidArgument("negative weight");
  // Cost of e is sum_i max_{j >= i} e_j; assign from the last variable backwards.
  std::vector<Exponent> out;
  Exponent cur(vars, 0);
  std::function<void(int, int, int)> rec = [&](int v, int suffix_max, int cost) {
    if (v < 0) {
      out.push_back(cur);
      return;
    }
    for (int a = 0;; ++a) {
      int m = std::max(suffix_max, a);
      if (cost + m > max_weight) break;
      cur[v] = a;
      rec(v - 1, m, cost + m);
    }
    cur[v] = 0;
  };
  rec(vars - 1, 0, 0);
  return std::make_shared<MonomialSet>(vars, std::move(out));
}

MonomialSet::Ptr MonomialSet::from_generators(int vars, const std::vector<Exponent>& generators) {
  std::vector<Exponent> out;
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != vars) throw InvalidArgument("generator of wrong length");
    Exponent cur(vars, 0);
    while (true) {
      out.push_back(cur);
      int v = vars - 1;
      while (v >= 0 && cur[v] == g[v]) cur[v--] = 0;
      if (v < 0) break;
      ++cur[v];
    }
  }
  if (out.empty()) out.push_back(Exponent(vars, 0));
  return std::make_shared<MonomialSet>(vars, std::move(out));
}

// QSeries

QSeries QSeries::constant(const PrecReal& v, std::size_t length) {
  QSeries s(length, v.precision());
  if (length) s.c_[0] = v;
  return s;
}

QSeries QSeries::variable(std::size_t length, mpfr_prec_t prec) {
  QSeries s(length, prec);
  if (length > 1) s.c_[1] = PrecReal(1L, prec);
  return s;
}

bool QSeries::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

QSeries QSeries::even_part() const {
  std::vector<PrecReal> e;
  for (std::size_t i = 0; i < c_.size(); i += 2) e.push_back(c_[i]);
  return QSeries(std::move(e));
}

PrecReal QSeries::odd_magnitude() const {
  PrecReal m(precision());
  for (std::size_t i = 1; i < c_.size(); i += 2) m = max(m, abs(c_[i]));
  return m;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  if (o.c_.size() != c_.size()) throw InvalidArgument("mismatched series lengths");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  if (o.c_.size() != c_.size()) throw InvalidArgument("mismatched series lengths");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

QSeries& QSeries::operator*=(long s) {
  for (auto& c : c_) c *= s;
  return *this;
}

QSeries& QSeries::operator/=(long s) {
  for (auto& c : c_) c /= s;
  return *this;
}

QSeries QSeries::operator-() const {
  QSeries r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  if (a.length() != b.length()) throw InvalidArgument("mismatched series lengths");
  QSeries r = a.zero_like();
  CoeffTraits<QSeries>::fma(r, a, b);
  return r;
}

QSeries operator*(QSeries a, const PrecReal& s) {
  for (auto& c : a.c_) c *= s;
  return a;
}

QSeries CoeffTraits<QSeries>::one(const QSeries& z) {
  QSeries r = z.zero_like();
  if (r.length()) r[0] = PrecReal(1L, z.precision());
  return r;
}

bool CoeffTraits<QSeries>::is_one(const QSeries& a) {
  if (a.length() == 0 || mpfr_cmp_si(a[0].raw(), 1) != 0) return false;
  for (std::size_t i = 1; i < a.length(); ++i)
    if (!a[i].is_zero()) return false;
  return true;
}

void CoeffTraits<QSeries>::fma(QSeries& acc, const QSeries& a, const QSeries& b) {
  const std::size_t n = acc.length();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) fma_acc(acc[i + j], a[i], b[j]);
  }
}

QSeries CoeffTraits<QSeries>::inverse(const QSeries& a) {
  return QSeries(series1::inverse(a.coefficients(), a.length(), PrecReal(a.precision())));
}

QSeries CoeffTraits<QSeries>::log(const QSeries& a) {
  return QSeries(series1::log(a.coefficients(), a.length(), PrecReal(a.precision())));
}

QSeries CoeffTraits<QSeries>::exp(const QSeries& a) {
  return QSeries(series1::exp(a.coefficients(), a.length(), PrecReal(a.precision())));
}

}  // namespace lfm
