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

#ifndef MCHOW_KPOLY_HPP_
#define MCHOW_KPOLY_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mchow {

// Sparse integer polynomial in u_1..u_k, t_1..t_n. Monomials are packed four
// bits per variable, so k + n <= 16 and every exponent stays below 16.
// Coefficient overflow throws std::overflow_error. Terms are kept sorted by
// packed key, so shifting by a monomial preserves order and sums are merges.
class KPolynomial {
 public:
  using Key = std::uint64_t;
  using Term = std::pair<Key, long long>;
  static constexpr int kMaxVars = 16;
  static constexpr int kMaxExponent = 15;

  KPolynomial(int k, int n);
  static KPolynomial constant(int k, int n, long long c);
  static KPolynomial u(int k, int n, int i);
  static KPolynomial t(int k, int n, int j);

  int k() const { return k_; }
  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // Exponent vector (u_1..u_k, t_1..t_n) of a packed key.
  std::vector<int> exponents(Key key) const;
  Key key_of(const std::vector<int>& exps) const;
  long long coefficient(const std::vector<int>& exps) const;
  void add_term(const std::vector<int>& exps, long long c);
  const std::vector<Term>& raw() const& { return terms_; }

  // Terms sorted by descending exponent vector.
  std::vector<std::pair<std::vector<int>, long long>> sorted_terms() const;

  KPolynomial& operator+=(const KPolynomial& o);
  KPolynomial& operator-=(const KPolynomial& o);
  KPolynomial operator*(const KPolynomial& o) const;
  KPolynomial operator*(long long c) const;
  friend KPolynomial operator+(KPolynomial a, const KPolynomial& b) { return a += b; }
  friend KPolynomial operator-(KPolynomial a, const KPolynomial& b) { return a -= b; }
  bool operator==(const KPolynomial& o) const;
  bool operator!=(const KPolynomial& o) const { return !(*this == o); }

  // Multiply by the monomial with the given exponents.
  KPolynomial shifted(const std::vector<int>& exps) const;
  // Multiply by (t_a - t_b).
  KPolynomial times_difference(int a, int b) const;
  // Exact division by (t_a - t_b); throws std::domain_error on a remainder.
  KPolynomial divide_difference(int a, int b) const;
  // Swap t_i and t_j.
  KPolynomial swap_t(int i, int j) const;
  // Same polynomial in a ring with more variables.
  // Re-home into another ring; dropped variables must be unused.
  KPolynomial embed(int k, int n) const;

  int min_degree() const;
  int max_degree() const;
  KPolynomial homogeneous_part(int d) const;
  KPolynomial t_zero() const;
  bool uses_t(int j) const;
  bool symmetric_in_u() const;

  // "2*u1^3*u2^2*t1 - 1*t2 + 1"; zero renders as "0".
  std::string to_string() const;

 private:
  void add_raw(Key key, long long c);
  // Sorts, merges duplicate keys and drops zeros.
  void normalize();
  static std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b,
                                 Key shift_a, Key shift_b, long long scale_b);
  int degree_of(Key key) const;
  int exp_at(Key key, int var) const { return static_cast<int>((key >> (4 * var)) & 0xF); }
  int t_var(int j) const;

  int k_;
  int n_;
  std::vector<Term> terms_;
};

}  // namespace mchow

#endif  // MCHOW_KPOLY_HPP_
