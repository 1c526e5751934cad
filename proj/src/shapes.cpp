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

#include "mchow/shapes.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mchow {
namespace {

std::string join_parts(const std::vector<int>& v) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << v[i];
  }
  out << ']';
  return out.str();
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) {
      throw std::invalid_argument("partition parts must be positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int i = 0; i < other.length(); ++i) {
    if (other.parts_[i] > parts_[i]) return false;
  }
  return true;
}

bool Partition::fits_in(int rows, int width) const {
  return length() <= rows && (empty() || parts_[0] <= width);
}

std::string Partition::to_string() const { return join_parts(parts_); }

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw std::invalid_argument("composition parts must be positive");
  }
}

int Composition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Composition::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ',';
    out << parts_[i];
  }
  out << ')';
  return out.str();
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_)) {
    throw std::invalid_argument("inner partition not contained in outer");
  }
}

DescentSet::DescentSet(std::vector<int> elements, int ambient)
    : elements_(std::move(elements)), ambient_(ambient) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] < 1 || elements_[i] > ambient_) {
      throw std::invalid_argument("descent out of range");
    }
    if (i > 0 && elements_[i] <= elements_[i - 1]) {
      throw std::invalid_argument("descents must be strictly increasing");
    }
  }
}

bool DescentSet::contains(int i) const {
  return std::binary_search(elements_.begin(), elements_.end(), i);
}

Partition complement(const Partition& eta, int k, int w) {
  if (!eta.fits_in(k, w)) {
    throw std::invalid_argument("partition " + eta.to_string() +
                                " does not fit the rectangle");
  }
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = w - eta[k - 1 - i];
  return Partition(std::move(c));
}

Partition transpose(const Partition& eta) {
  if (eta.empty()) return {};
  std::vector<int> t(eta[0], 0);
  for (int p : eta.parts()) {
    for (int j = 0; j < p; ++j) ++t[j];
  }
  return Partition(std::move(t));
}

SkewShape ribbon_from_composition(const Composition& b) {
  if (b.empty()) throw std::invalid_argument("empty composition has no ribbon");
  const int k = b.length();
  std::vector<int> outer(k), inner(k);
  int partial = 0;
  for (int j = 1; j <= k; ++j) {  // j counts rows from the bottom
    partial += b[j - 1];
    const int row = k - j;
    outer[row] = partial - (j - 1);
    inner[row] = outer[row] - b[j - 1];
  }
  return SkewShape(Partition(outer), Partition(inner));
}

bool is_connected(const SkewShape& s) {
  const int r = s.rows();
  if (r == 0) return false;
  for (int i = 0; i < r; ++i) {
    if (s.outer()[i] <= s.inner()[i]) return false;
  }
  for (int i = 0; i + 1 < r; ++i) {
    if (s.outer()[i + 1] <= s.inner()[i]) return false;
  }
  return true;
}

bool is_ribbon(const SkewShape& s) {
  if (!is_connected(s)) return false;
  for (int i = 0; i + 1 < s.rows(); ++i) {
    if (s.outer()[i + 1] - s.inner()[i] != 1) return false;
  }
  return true;
}

Composition composition_from_ribbon(const SkewShape& s) {
  if (!is_ribbon(s)) throw std::invalid_argument("shape is not a ribbon");
  std::vector<int> b;
  for (int i = s.rows() - 1; i >= 0; --i) {
    b.push_back(s.outer()[i] - s.inner()[i]);
  }
  return Composition(std::move(b));
}

DescentSet descent_set(const Composition& b) {
  std::vector<int> d;
  int partial = 0;
  for (int i = 0; i + 1 < b.length(); ++i) {
    partial += b[i];
    d.push_back(partial);
  }
  return DescentSet(std::move(d), std::max(0, b.size() - 1));
}

Composition composition_from_descents(const DescentSet& d, int size) {
  std::vector<int> parts;
  int prev = 0;
  for (int x : d.elements()) {
    if (x >= size) throw std::invalid_argument("descent beyond composition size");
    parts.push_back(x - prev);
    prev = x;
  }
  parts.push_back(size - prev);
  return Composition(std::move(parts));
}

Composition coarsen(const Composition& b, const std::vector<int>& cuts) {
  std::vector<int> sorted = cuts;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int c : sorted) {
    if (c < 1 || c > b.length() - 1) {
      throw std::invalid_argument("cut index out of range");
    }
  }
  std::vector<int> parts;
  int acc = 0;
  std::size_t next = 0;
  for (int i = 0; i < b.length(); ++i) {
    acc += b[i];
    const bool cut_here = next < sorted.size() && sorted[next] == i + 1;
    if (cut_here || i + 1 == b.length()) {
      parts.push_back(acc);
      acc = 0;
      if (cut_here) ++next;
    }
  }
  return Composition(std::move(parts));
}

Composition reversed(const Composition& b) {
  std::vector<int> p = b.parts();
  std::reverse(p.begin(), p.end());
  return Composition(std::move(p));
}

std::pair<Partition, Partition> rows_cols(const Composition& b) {
  std::vector<int> rows = b.parts();
  std::sort(rows.begin(), rows.end(), std::greater<>());
  const SkewShape s = ribbon_from_composition(b);
  const int width = s.outer()[0];
  std::vector<int> cols;
  for (int c = 1; c <= width; ++c) {
    int len = 0;
    for (int i = 0; i < s.rows(); ++i) {
      if (s.inner()[i] < c && c <= s.outer()[i]) ++len;
    }
    cols.push_back(len);
  }
  std::sort(cols.begin(), cols.end(), std::greater<>());
  return {Partition(std::move(rows)), Partition(std::move(cols))};
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size()) {
    throw std::invalid_argument("dominance needs partitions of equal size");
  }
  int a = 0, b = 0;
  const int len = std::max(mu.length(), lambda.length());
  for (int i = 0; i < len; ++i) {
    a += mu[i];
    b += lambda[i];
    if (a > b) return false;
  }
  return true;
}

std::vector<Partition> partitions_in_box(int n, int rows, int width) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == rows) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, width);
  return out;
}

std::vector<Partition> partitions_of(int n) { return partitions_in_box(n, n, n); }

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  if (n <= 0) return out;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> parts;
    int acc = 0;
    for (int i = 1; i <= n; ++i) {
      ++acc;
      if (i == n || (mask >> (i - 1) & 1u)) {
        parts.push_back(acc);
        acc = 0;
      }
    }
    out.emplace_back(std::move(parts));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Composition> compositions_of(int n, int parts) {
  std::vector<Composition> out;
  for (auto& c : compositions_of(n)) {
    if (c.length() == parts) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace mchow
