// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "partitions.hpp"
#include "series1.hpp"

namespace lfm {

using Exponent = std::vector<int>;

// Downward-closed finite set of exponent vectors, ordered by total degree.
class MonomialSet {
 public:
  using Ptr = std::shared_ptr<const MonomialSet>;

  // sum(e) <= T and e_i <= caps_i (caps may be empty).
  static Ptr total_degree(int vars, int max_degree, std::vector<int> caps = {});
  static Ptr box(std::vector<int> caps);
  // Downward closure of the partitions of weight <= max_weight, read as exponents
  // in variable order (so z1^2 z2 is present but z1 z2^2 is not).
  static Ptr partition_dominated(int vars, int max_weight);
  // Downward closure of the generators.
  static Ptr from_generators(int vars, const std::vector<Exponent>& generators);

  int num_vars() const { return vars_; }
  std::size_t size() const { return degree_.size(); }
  const int* exponent(std::size_t i) const { return &flat_[i * vars_]; }
  Exponent exponent_vec(std::size_t i) const { return Exponent(exponent(i), exponent(i) + vars_); }
  int degree(std::size_t i) const { return degree_[i]; }
  int max_degree() const { return degree_.empty() ? 0 : degree_.back(); }
  const std::vector<int>& caps() const { return caps_; }
  // -1 when absent.
  long index_of(const int* e) const;
  long index_of(const Exponent& e) const;
  bool same_shape(const MonomialSet& o) const;

  // Pairs (i, j) with e_i + e_j = e_t, grouped by t.
  struct Convolution {
    std::vector<std::uint32_t> offsets;
    std::vector<std::uint32_t> first;
    std::vector<std::uint32_t> second;
    std::size_t pairs() const { return first.size(); }
  };
  const Convolution& convolution() const;

  explicit MonomialSet(int vars, std::vector<Exponent> members);

 private:
  std::uint64_t key(const int* e) const;

  int vars_;
  std::vector<int> flat_;
  std::vector<int> degree_;
  std::vector<int> caps_;
  std::vector<int> bits_;
  bool dense_ = false;
  std::vector<std::int32_t> dense_index_;
  std::vector<std::size_t> strides_;
  std::unordered_map<std::uint64_t, std::uint32_t> hash_index_;
  mutable std::once_flag conv_once_;
  mutable Convolution conv_;
};

template <class C>
class MultiSeries {
 public:
  MultiSeries(MonomialSet::Ptr set, C zero) : set_(std::move(set)), zero_(zero), c_(set_->size(), zero) {}

  const MonomialSet& set() const { return *set_; }
  const MonomialSet::Ptr& set_ptr() const { return set_; }
  std::size_t size() const { return c_.size(); }
  const C& zero() const { return zero_; }
  C& operator[](std::size_t i) { return c_[i]; }
  const C& operator[](std::size_t i) const { return c_[i]; }
  // Zero for exponents outside the set.
  const C& coeff(const Exponent& e) const {
    long i = set_->index_of(e);
    return i < 0 ? zero_ : c_[i];
  }
  void set_coeff(const Exponent& e, const C& v) {
    long i = set_->index_of(e);
    if (i < 0) throw InvalidArgument("exponent outside monomial set");
    c_[i] = v;
  }
  std::vector<C>& coefficients() { return c_; }
  const std::vector<C>& coefficients() const { return c_; }

  void require_same_shape(const MultiSeries& o) const {
    if (set_ != o.set_ && !set_->same_shape(*o.set_)) throw InvalidArgument("mismatched series shapes");
  }
  MultiSeries& operator+=(const MultiSeries& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  MultiSeries& operator-=(const MultiSeries& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
  friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }

 private:
  MonomialSet::Ptr set_;
  C zero_;
  std::vector<C> c_;
};

template <class C>
MultiSeries<C> ms_scale(MultiSeries<C> f, const C& s) {
  for (auto& c : f.coefficients()) c = c * s;
  return f;
}

template <class C>
MultiSeries<C> ms_mul(const MultiSeries<C>& a, const MultiSeries<C>& b) {
  a.require_same_shape(b);
  const auto& conv = a.set().convolution();
  MultiSeries<C> out(a.set_ptr(), a.zero());
  for (std::size_t t = 0; t < a.size(); ++t) {
    C& acc = out[t];
    for (std::uint32_t p = conv.offsets[t]; p < conv.offsets[t + 1]; ++p)
      CoeffTraits<C>::fma(acc, a[conv.first[p]], b[conv.second[p]]);
  }
  return out;
}

template <class C>
struct SparseTerm {
  Exponent exponent;
  C coeff;
};

// f times a sparse polynomial, truncated to the set of f. Zero coefficients of f are skipped.
template <class C>
MultiSeries<C> ms_mul_sparse(const MultiSeries<C>& f, const std::vector<SparseTerm<C>>& terms) {
  const MonomialSet& s = f.set();
  const int n = s.num_vars();
  MultiSeries<C> out(f.set_ptr(), f.zero());
  std::vector<int> tgt(n);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (CoeffTraits<C>::is_zero(f[i])) continue;
    const int* e = s.exponent(i);
    for (const auto& t : terms) {
      if (static_cast<int>(t.exponent.size()) != n) throw InvalidArgument("mismatched series shapes");
      for (int v = 0; v < n; ++v) tgt[v] = e[v] + t.exponent[v];
      long j = s.index_of(tgt.data());
      if (j >= 0) CoeffTraits<C>::fma(out[j], f[i], t.coeff);
    }
  }
  return out;
}

// f(z) * h(z_var) for a univariate h.
template <class C>
MultiSeries<C> ms_mul_univariate(const MultiSeries<C>& f, int var, const std::vector<C>& h) {
  const MonomialSet& s = f.set();
  if (var < 0 || var >= s.num_vars()) throw InvalidArgument("variable index out of range");
  MultiSeries<C> out(f.set_ptr(), f.zero());
  std::vector<int> e(s.num_vars());
  for (std::size_t t = 0; t < s.size(); ++t) {
    std::copy(s.exponent(t), s.exponent(t) + s.num_vars(), e.begin());
    const int top = e[var];
    C& acc = out[t];
    for (int a = 0; a <= top && static_cast<std::size_t>(a) < h.size(); ++a) {
      e[var] = top - a;
      long j = s.index_of(e.data());
      if (j >= 0) CoeffTraits<C>::fma(acc, f[j], h[a]);
    }
  }
  return out;
}

// Sum_a h_a z_var^a.
template <class C>
MultiSeries<C> embed_univariate(MonomialSet::Ptr set, int var, const std::vector<C>& h, const C& zero) {
  MultiSeries<C> out(set, zero);
  const MonomialSet& s = *set;
  if (var < 0 || var >= s.num_vars()) throw InvalidArgument("variable index out of range");
  for (std::size_t i = 0; i < s.size(); ++i) {
    const int* e = s.exponent(i);
    if (e[var] != s.degree(i)) continue;
    if (static_cast<std::size_t>(e[var]) < h.size()) out[i] = h[e[var]];
  }
  return out;
}

// h(z_i + z_j); for i == j this is h(2 z_i).
template <class C>
MultiSeries<C> embed_pair_sum(MonomialSet::Ptr set, int vi, int vj, const std::vector<C>& h, const C& zero) {
  MultiSeries<C> out(set, zero);
  const MonomialSet& s = *set;
  if (vi < 0 || vj < 0 || vi >= s.num_vars() || vj >= s.num_vars()) throw InvalidArgument("variable index out of range");
  for (std::size_t idx = 0; idx < s.size(); ++idx) {
    const int* e = s.exponent(idx);
    int d = s.degree(idx);
    if (static_cast<std::size_t>(d) >= h.size()) continue;
    if (vi == vj) {
      if (e[vi] != d) continue;
      C v = h[d];
      CoeffTraits<C>::mul_int(v, 1L << d);
      out[idx] = v;
    } else {
      if (e[vi] + e[vj] != d) continue;
      C v = h[d];
      ExactInt b = binomial(d, e[vi]);
      if (!b.fits_slong_p()) throw DomainError("binomial overflow in pair embedding");
      CoeffTraits<C>::mul_int(v, b.get_si());
      out[idx] = v;
    }
  }
  return out;
}

// exp(f) for f with zero constant term, via n g_e = sum |e1| f_e1 g_e2.
template <class C>
MultiSeries<C> ms_exp(const MultiSeries<C>& f) {
  if (!CoeffTraits<C>::is_zero(f[0])) throw DomainError("exp requires zero constant term");
  const MonomialSet& s = f.set();
  const auto& conv = s.convolution();
  MultiSeries<C> g(f.set_ptr(), f.zero());
  std::vector<C> df(f.size(), f.zero());
  for (std::size_t i = 1; i < f.size(); ++i) {
    df[i] = f[i];
    CoeffTraits<C>::mul_int(df[i], s.degree(i));
  }
  g[0] = CoeffTraits<C>::one(f.zero());
  for (std::size_t t = 1; t < f.size(); ++t) {
    C acc = f.zero();
    for (std::uint32_t p = conv.offsets[t]; p < conv.offsets[t + 1]; ++p) {
      std::uint32_t a = conv.first[p];
      if (a == 0) continue;
      CoeffTraits<C>::fma(acc, df[a], g[conv.second[p]]);
    }
    CoeffTraits<C>::div_int(acc, s.degree(t));
    g[t] = std::move(acc);
  }
  return g;
}

// log(g) for g with invertible constant term g0; the constant of the result is log(g0).
template <class C>
MultiSeries<C> ms_log_general(const MultiSeries<C>& g) {
  const MonomialSet& s = g.set();
  const auto& conv = s.convolution();
  MultiSeries<C> f(g.set_ptr(), g.zero());
  std::vector<C> df(g.size(), g.zero());
  const bool unit = CoeffTraits<C>::is_one(g[0]);
  C inv0 = g.zero();
  if (!unit) {
    if constexpr (requires(const C& c) { CoeffTraits<C>::inverse(c); CoeffTraits<C>::log(c); }) {
      inv0 = CoeffTraits<C>::inverse(g[0]);
      f[0] = CoeffTraits<C>::log(g[0]);
    } else {
      throw DomainError("log normalization");
    }
  }
  for (std::size_t t = 1; t < g.size(); ++t) {
    C acc = g[t];
    CoeffTraits<C>::mul_int(acc, s.degree(t));
    for (std::uint32_t p = conv.offsets[t]; p < conv.offsets[t + 1]; ++p) {
      std::uint32_t a = conv.first[p], b = conv.second[p];
      if (a == 0 || b == 0) continue;
      acc -= df[a] * g[b];
    }
    if (!unit) acc = acc * inv0;
    df[t] = acc;
    CoeffTraits<C>::div_int(acc, s.degree(t));
    f[t] = std::move(acc);
  }
  return f;
}

// log(g) for g with constant term exactly one.
template <class C>
MultiSeries<C> ms_log(const MultiSeries<C>& g) {
  if (!CoeffTraits<C>::is_one(g[0])) throw DomainError("log normalization");
  return ms_log_general(g);
}

// Coefficient of z_1^{lambda_1} ... z_l^{lambda_l}.
template <class C>
C extract_mlambda(const MultiSeries<C>& f, const Partition& lambda) {
  const int n = f.set().num_vars();
  if (lambda.length() > n) throw InvalidArgument("partition longer than number of variables");
  Exponent e(n, 0);
  for (int i = 0; i < lambda.length(); ++i) e[i] = lambda.part(i);
  return f.coeff(e);
}

}  // namespace lfm
