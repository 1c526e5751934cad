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

#ifndef MCHOW_TABLEAUX_HPP_
#define MCHOW_TABLEAUX_HPP_

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "mchow/integer.hpp"
#include "mchow/shapes.hpp"

namespace mchow {

class StandardTableau {
 public:
  StandardTableau(Partition shape, std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  // Zero-based row holding `value`.
  int row_of(int value) const { return row_of_.at(value - 1); }

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
  std::vector<int> row_of_;
};

// Calls `visit` once per SYT of shape eta. Values are placed in increasing
// order, each in the highest row available first, which fixes the order.
void for_each_syt(const Partition& eta,
                  const std::function<void(const StandardTableau&)>& visit);
std::vector<StandardTableau> enumerate_syt(const Partition& eta);

DescentSet descent_set_of(const StandardTableau& t);

std::uint64_t count_syt_with_descents(const Partition& eta, const DescentSet& d);
std::uint64_t count_syt_with_num_descents(const Partition& eta, int d);

// Closed integer intervals [first, second].
using Interval = std::pair<int, int>;
// SYT whose descents x_1 < ... < x_r satisfy x_i in intervals[i], r = #intervals.
std::uint64_t count_syt_transversal(const Partition& eta,
                                    const std::vector<Interval>& intervals);

// A cap (h, c) asks that at most c descents lie in [1, h-1].
struct DescentCap {
  int h;
  int max_descents;
};
// SYT with exactly `d` descents that respect every cap.
std::uint64_t count_syt_with_caps(const Partition& eta, int d,
                                  const std::vector<DescentCap>& caps);

// SSYT of shape eta whose content is b (b_i copies of i; zeros allowed).
std::uint64_t kostka(const Partition& eta, const std::vector<int>& content);
std::uint64_t kostka(const Partition& eta, const Composition& b);

Integer hook_length_count(const Partition& eta);

// Brute force over S_m.
std::uint64_t count_permutations_with_descents(const DescentSet& d, int m);
// Same count for every descent set at once, indexed by bitmask (bit i-1 = i).
std::vector<std::uint64_t> permutation_descent_histogram(int m);

// det[binom(a_i, b_j)] with a = D u {n-1}, b = {0} u D.
Integer gessel_viennot(const DescentSet& d, int n);

// Exact determinant by fraction-free elimination.
Integer determinant(std::vector<std::vector<Integer>> m);

}  // namespace mchow

#endif  // MCHOW_TABLEAUX_HPP_
