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

#ifndef MCHOW_SHAPES_HPP_
#define MCHOW_SHAPES_HPP_

#include <compare>
#include <initializer_list>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace mchow {

// Weakly decreasing sequence of positive integers. Trailing zeros passed to
// the constructor are dropped, so equal partitions compare equal.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const& { return parts_; }
  std::vector<int> parts() && { return std::move(parts_); }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  // Zero-based row access; rows past the end have length zero.
  int operator[](std::size_t i) const {
    return i < parts_.size() ? parts_[i] : 0;
  }

  // True if `other` fits inside this diagram.
  bool contains(const Partition& other) const;
  bool fits_in(int rows, int width) const;

  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// Sequence of positive integers.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts)
      : Composition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const& { return parts_; }
  std::vector<int> parts() && { return std::move(parts_); }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_.at(i); }

  std::string to_string() const;

  auto operator<=>(const Composition&) const = default;
  bool operator==(const Composition&) const = default;

 private:
  std::vector<int> parts_;
};

// outer / inner with inner contained in outer.
class SkewShape {
 public:
  SkewShape(Partition outer, Partition inner);

  const Partition& outer() const& { return outer_; }
  Partition outer() && { return std::move(outer_); }
  const Partition& inner() const& { return inner_; }
  Partition inner() && { return std::move(inner_); }
  int size() const { return outer_.size() - inner_.size(); }
  int rows() const { return outer_.length(); }

  bool operator==(const SkewShape&) const = default;

 private:
  Partition outer_;
  Partition inner_;
};

// Strictly increasing positive integers bounded by `ambient`.
class DescentSet {
 public:
  DescentSet() = default;
  DescentSet(std::vector<int> elements, int ambient);

  const std::vector<int>& elements() const& { return elements_; }
  std::vector<int> elements() && { return std::move(elements_); }
  int ambient() const { return ambient_; }
  int count() const { return static_cast<int>(elements_.size()); }
  bool contains(int i) const;

  bool operator==(const DescentSet&) const = default;

 private:
  std::vector<int> elements_;
  int ambient_ = 0;
};

// eta^c inside the k x w rectangle.
Partition complement(const Partition& eta, int k, int w);
Partition transpose(const Partition& eta);

// b_1 is the bottom row.
SkewShape ribbon_from_composition(const Composition& b);
// Row lengths of a ribbon read bottom to top. Throws if `s` is not a ribbon.
Composition composition_from_ribbon(const SkewShape& s);
bool is_ribbon(const SkewShape& s);
// Edge-connected and without empty rows.
bool is_connected(const SkewShape& s);

DescentSet descent_set(const Composition& b);
// Inverse of descent_set for compositions of `size`.
Composition composition_from_descents(const DescentSet& d, int size);
// Keeps the cuts listed in `cuts` (1-based positions in [length(b)-1]).
Composition coarsen(const Composition& b, const std::vector<int>& cuts);
Composition reversed(const Composition& b);

// (rows(b), cols(b)) for the ribbon of b.
std::pair<Partition, Partition> rows_cols(const Composition& b);
bool dominance_leq(const Partition& mu, const Partition& lambda);

std::vector<Partition> partitions_of(int n);
// Partitions of `n` with at most `rows` parts and first part at most `width`.
std::vector<Partition> partitions_in_box(int n, int rows, int width);
std::vector<Composition> compositions_of(int n);
std::vector<Composition> compositions_of(int n, int parts);

}  // namespace mchow

#endif  // MCHOW_SHAPES_HPP_
