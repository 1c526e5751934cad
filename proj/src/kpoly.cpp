// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mchow/kpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace mchow {

namespace {

constexpr std::uint64_t kLowNibbleBits = 0x1111111111111111ULL;

// Adds packed exponent vectors; throws if any exponent passes 15.
std::uint64_t add_keys(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t s = a + b;
  if (((a ^ b ^ s) & (kLowNibbleBits & ~std::uint64_t{1})) != 0 || s < a) {
    throw std::overflow_error("polynomial exponent exceeds 15");
  }
  return s;
}

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
  return r;
}

}  // namespace

KPolynomial::KPolynomial(int k, int n) : k_(k), n_(n) {
  if (k < 0 || n < 0 || k + n > kMaxVars) {
    throw std::invalid_argument("KPolynomial supports at most 16 variables");
  }
}

KPolynomial KPolynomial::constant(int k, int n, long long c) {
  KPolynomial p(k, n);
  if (c != 0) p.terms_.emplace_back(0, c);
  return p;
}

KPolynomial KPolynomial::u(int k, int n, int i) {
  if (i < 1 || i > k) throw std::invalid_argument("u index out of range");
  KPolynomial p(k, n);
  p.terms_.emplace_back(Key{1} << (4 * (i - 1)), 1);
  return p;
}

KPolynomial KPolynomial::t(int k, int n, int j) {
  KPolynomial p(k, n);
  p.terms_.emplace_back(Key{1} << (4 * p.t_var(j)), 1);
  return p;
}

int KPolynomial::t_var(int j) const {
  if (j < 1 || j > n_) throw std::invalid_argument("t index out of range");
  return k_ + j - 1;
}

std::vector<int> KPolynomial::exponents(Key key) const {
  std::vector<int> e(k_ + n_);
  for (int v = 0; v < k_ + n_; ++v) e[v] = exp_at(key, v);
  return e;
}

KPolynomial::Key KPolynomial::key_of(const std::vector<int>& exps) const {
  if (static_cast<int>(exps.size()) != k_ + n_) {
    throw std::invalid_argument("exponent vector has the wrong length");
  }
  Key key = 0;
  for (int v = 0; v < k_ + n_; ++v) {
    if (exps[v] < 0 || exps[v] > kMaxExponent) {
      throw std::overflow_error("polynomial exponent out of range");
    }
    key |= Key(exps[v]) << (4 * v);
  }
  return key;
}

long long KPolynomial::coefficient(const std::vector<int>& exps) const {
  const Key key = key_of(exps);
  const auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{key, 0},
                                   [](const Term& a, const Term& b) { return a.first < b.first; });
  return it != terms_.end() && it->first == key ? it->second : 0;
}

void KPolynomial::add_term(const std::vector<int>& exps, long long c) { add_raw(key_of(exps), c); }

void KPolynomial::add_raw(Key key, long long c) {
  if (c == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{key, 0},
                             [](const Term& a, const Term& b) { return a.first < b.first; });
  if (it != terms_.end() && it->first == key) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, Term{key, c});
  }
}

void KPolynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms_.size();) {
    const Key key = terms_[i].first;
    long long c = 0;
    for (; i < terms_.size() && terms_[i].first == key; ++i) c = checked_add(c, terms_[i].second);
    if (c != 0) terms_[out++] = Term{key, c};
  }
  terms_.resize(out);
}

std::vector<KPolynomial::Term> KPolynomial::merge(const std::vector<Term>& a,
                                                  const std::vector<Term>& b, Key shift_a,
                                                  Key shift_b, long long scale_b) {
  std::vector<Term> r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    const Key ka = i < a.size() ? add_keys(a[i].first, shift_a) : ~Key{0};
    const Key kb = j < b.size() ? add_keys(b[j].first, shift_b) : ~Key{0};
    if (j == b.size() || (i < a.size() && ka < kb)) {
      r.emplace_back(ka, a[i++].second);
    } else if (i == a.size() || kb < ka) {
      r.emplace_back(kb, checked_mul(b[j++].second, scale_b));
    } else {
      const long long c = checked_add(a[i++].second, checked_mul(b[j++].second, scale_b));
      if (c != 0) r.emplace_back(ka, c);
    }
  }
  return r;
}

std::vector<std::pair<std::vector<int>, long long>> KPolynomial::sorted_terms() const {
  std::vector<std::pair<std::vector<int>, long long>> out;
  out.reserve(terms_.size());
  for (const auto& [key, c] : terms_) out.emplace_back(exponents(key), c);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  return out;
}

KPolynomial& KPolynomial::operator+=(const KPolynomial& o) {
  if (o.k_ != k_ || o.n_ != n_) throw std::invalid_argument("polynomial rings differ");
  terms_ = merge(terms_, o.terms_, 0, 0, 1);
  return *this;
}

KPolynomial& KPolynomial::operator-=(const KPolynomial& o) {
  if (o.k_ != k_ || o.n_ != n_) throw std::invalid_argument("polynomial rings differ");
  terms_ = merge(terms_, o.terms_, 0, 0, -1);
  return *this;
}

KPolynomial KPolynomial::operator*(const KPolynomial& o) const {
  if (o.k_ != k_ || o.n_ != n_) throw std::invalid_argument("polynomial rings differ");
  KPolynomial r(k_, n_);
  if (o.terms_.size() == 1) {
    const auto [kb, cb] = o.terms_.front();
    r.terms_.reserve(terms_.size());
    for (const auto& [ka, ca] : terms_) r.terms_.emplace_back(add_keys(ka, kb), checked_mul(ca, cb));
    return r;
  }
  r.terms_.reserve(terms_.size() * o.terms_.size());
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : o.terms_) r.terms_.emplace_back(add_keys(ka, kb), checked_mul(ca, cb));
  }
  r.normalize();
  return r;
}

KPolynomial KPolynomial::operator*(long long c) const {
  KPolynomial r(k_, n_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& [key, x] : terms_) r.terms_.emplace_back(key, checked_mul(x, c));
  return r;
}

bool KPolynomial::operator==(const KPolynomial& o) const {
  return k_ == o.k_ && n_ == o.n_ && terms_ == o.terms_;
}

KPolynomial KPolynomial::shifted(const std::vector<int>& exps) const {
  const Key s = key_of(exps);
  KPolynomial r(k_, n_);
  r.terms_.reserve(terms_.size());
  for (const auto& [key, c] : terms_) r.terms_.emplace_back(add_keys(key, s), c);
  return r;
}

KPolynomial KPolynomial::times_difference(int a, int b) const {
  const Key ka = Key{1} << (4 * t_var(a));
  const Key kb = Key{1} << (4 * t_var(b));
  KPolynomial r(k_, n_);
  r.terms_ = merge(terms_, terms_, ka, kb, -1);
  return r;
}

KPolynomial KPolynomial::divide_difference(int a, int b) const {
  const int va = t_var(a), vb = t_var(b);
  if (va == vb) throw std::invalid_argument("cannot divide by zero");
  // Group by the monomial in the other variables and by total degree in
  // (t_a, t_b); each group is a binary form divided by (x - y).
  const Key clear = ~((Key{0xF} << (4 * va)) | (Key{0xF} << (4 * vb)));
  struct GroupKey {
    Key rest;
    int d;
    bool operator==(const GroupKey& o) const { return rest == o.rest && d == o.d; }
  };
  struct GroupHash {
    std::size_t operator()(const GroupKey& g) const {
      return std::hash<Key>()(g.rest * 31 + static_cast<Key>(g.d));
    }
  };
  std::unordered_map<GroupKey, std::vector<long long>, GroupHash> groups;
  for (const auto& [key, c] : terms_) {
    const int ea = exp_at(key, va), eb = exp_at(key, vb);
    auto& coeffs = groups[{key & clear, ea + eb}];
    if (coeffs.empty()) coeffs.assign(ea + eb + 1, 0);
    coeffs[ea] = c;
  }
  KPolynomial r(k_, n_);
  r.terms_.reserve(terms_.size());
  for (const auto& [g, coeff] : groups) {
    const int d = g.d;
    if (d == 0) throw std::domain_error("polynomial is not divisible by the difference");
    // a_i = b_{i-1} - b_i, where g = sum b_i x^i y^(d-1-i)
    std::vector<long long> bq(d);
    bq[d - 1] = coeff[d];
    for (int i = d - 1; i >= 1; --i) bq[i - 1] = checked_add(coeff[i], bq[i]);
    if (checked_add(coeff[0], bq[0]) != 0) {
      throw std::domain_error("polynomial is not divisible by the difference");
    }
    for (int i = 0; i < d; ++i) {
      if (bq[i] == 0) continue;
      const Key key = g.rest | (Key(i) << (4 * va)) | (Key(d - 1 - i) << (4 * vb));
      r.terms_.emplace_back(key, bq[i]);
    }
  }
  r.normalize();
  return r;
}

KPolynomial KPolynomial::swap_t(int i, int j) const {
  const int vi = t_var(i), vj = t_var(j);
  const Key clear = ~((Key{0xF} << (4 * vi)) | (Key{0xF} << (4 * vj)));
  KPolynomial r(k_, n_);
  r.terms_.reserve(terms_.size());
  for (const auto& [key, c] : terms_) {
    const Key ei = exp_at(key, vi), ej = exp_at(key, vj);
    r.terms_.emplace_back((key & clear) | (ej << (4 * vi)) | (ei << (4 * vj)), c);
  }
  r.normalize();
  return r;
}

KPolynomial KPolynomial::embed(int k, int n) const {
  KPolynomial r(k, n);
  for (const auto& [key, c] : terms_) {
    std::vector<int> e = exponents(key);
    for (int i = k; i < k_; ++i) {
      if (e[i] != 0) throw std::invalid_argument("embedding drops a used u variable");
    }
    for (int j = n; j < n_; ++j) {
      if (e[k_ + j] != 0) throw std::invalid_argument("embedding drops a used t variable");
    }
    std::vector<int> big(k + n, 0);
    for (int i = 0; i < std::min(k, k_); ++i) big[i] = e[i];
    for (int j = 0; j < std::min(n, n_); ++j) big[k + j] = e[k_ + j];
    r.terms_.emplace_back(r.key_of(big), c);
  }
  r.normalize();
  return r;
}

int KPolynomial::degree_of(Key key) const {
  int d = 0;
  for (int v = 0; v < k_ + n_; ++v) d += exp_at(key, v);
  return d;
}

int KPolynomial::min_degree() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no degree");
  int d = 1 << 30;
  for (const auto& [key, c] : terms_) d = std::min(d, degree_of(key));
  return d;
}

int KPolynomial::max_degree() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no degree");
  int d = 0;
  for (const auto& [key, c] : terms_) d = std::max(d, degree_of(key));
  return d;
}

KPolynomial KPolynomial::homogeneous_part(int d) const {
  KPolynomial r(k_, n_);
  for (const auto& [key, c] : terms_) {
    if (degree_of(key) == d) r.terms_.emplace_back(key, c);
  }
  return r;
}

KPolynomial KPolynomial::t_zero() const {
  const Key u_mask = k_ == 0 ? 0 : (k_ >= 16 ? ~Key{0} : (Key{1} << (4 * k_)) - 1);
  KPolynomial r(k_, n_);
  for (const auto& [key, c] : terms_) {
    if ((key & ~u_mask) == 0) r.terms_.emplace_back(key, c);
  }
  return r;
}

bool KPolynomial::uses_t(int j) const {
  const int v = t_var(j);
  for (const auto& [key, c] : terms_) {
    if (exp_at(key, v) != 0) return true;
  }
  return false;
}

bool KPolynomial::symmetric_in_u() const {
  // Invariance under the adjacent transpositions of u-variables.
  for (int i = 0; i + 1 < k_; ++i) {
    for (const auto& [key, c] : terms_) {
      const Key clear = ~((Key{0xF} << (4 * i)) | (Key{0xF} << (4 * (i + 1))));
      const Key a = exp_at(key, i), b = exp_at(key, i + 1);
      const Key swapped = (key & clear) | (b << (4 * i)) | (a << (4 * (i + 1)));
      const auto it = std::lower_bound(
          terms_.begin(), terms_.end(), Term{swapped, 0},
          [](const Term& x, const Term& y) { return x.first < y.first; });
      if (it == terms_.end() || it->first != swapped || it->second != c) return false;
    }
  }
  return true;
}

std::string KPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [exps, c] : sorted_terms()) {
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    os << (c < 0 ? -c : c);
    for (int v = 0; v < k_ + n_; ++v) {
      if (exps[v] == 0) continue;
      os << "*" << (v < k_ ? "u" : "t") << (v < k_ ? v + 1 : v - k_ + 1);
      if (exps[v] > 1) os << "^" << exps[v];
    }
  }
  return os.str();
}

}  // namespace mchow
