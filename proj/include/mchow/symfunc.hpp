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

#ifndef MCHOW_SYMFUNC_HPP_
#define MCHOW_SYMFUNC_HPP_

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mchow/integer.hpp"
#include "mchow/shapes.hpp"

namespace mchow {

// Finite integer combination of Schur functions. Terms iterate in reverse
// lexicographic order of partitions. When a rectangle bound (k, w) is set,
// terms outside k x w are discarded on insertion.
class SchurExpansion {
 public:
  using Terms = std::map<Partition, Integer, std::greater<Partition>>;

  SchurExpansion() = default;
  static SchurExpansion schur(const Partition& p, const Integer& c = 1);
  static SchurExpansion one() { return schur(Partition()); }

  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }
  Integer coefficient(const Partition& p) const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add(const Partition& p, const Integer& c);
  void set_bound(int k, int w);
  const std::optional<std::pair<int, int>>& bound() const { return bound_; }

  SchurExpansion& operator+=(const SchurExpansion& o);
  SchurExpansion& operator-=(const SchurExpansion& o);
  SchurExpansion& operator*=(const Integer& c);
  friend SchurExpansion operator+(SchurExpansion a, const SchurExpansion& b) {
    return a += b;
  }
  friend SchurExpansion operator-(SchurExpansion a, const SchurExpansion& b) {
    return a -= b;
  }
  friend SchurExpansion operator*(SchurExpansion a, const Integer& c) {
    return a *= c;
  }

  // Compares coefficients only; the rectangle bound is ignored.
  bool operator==(const SchurExpansion& o) const { return terms_ == o.terms_; }

  // "3*s[2] + 1*s[1,1]"; the zero element renders as "0".
  std::string to_string() const;

 private:
  Terms terms_;
  std::optional<std::pair<int, int>> bound_;
};

SchurExpansion pieri_row(const SchurExpansion& f, int b);
SchurExpansion pieri_col(const SchurExpansion& f, int b);

// Calls `visit(content)` for each LR filling of lambda/mu. With `cap`, only
// fillings whose content is bounded by cap (hence equal to it) are produced.
void for_each_lr_filling(const Partition& lambda, const Partition& mu,
                         const Partition* cap,
                         const std::function<void(const std::vector<int>&)>& visit);

Integer lr_coefficient(const Partition& lambda, const Partition& mu,
                       const Partition& eta);
SchurExpansion schur_multiply(const SchurExpansion& f, const SchurExpansion& g);

SchurExpansion skew_schur(const Partition& lambda, const Partition& mu);
SchurExpansion skew_schur(const SkewShape& s);

// Ribbon Schur function of rho(b) by three independent routes.
SchurExpansion jacobi_trudi_ribbon(const Composition& b);
SchurExpansion ribbon_schur_recursive(const Composition& b);
SchurExpansion ribbon_schur_alternating(const Composition& b);

SchurExpansion rmv(const SchurExpansion& f, int b);
SchurExpansion truncate(const SchurExpansion& f, int k, int w);

}  // namespace mchow

#endif  // MCHOW_SYMFUNC_HPP_
