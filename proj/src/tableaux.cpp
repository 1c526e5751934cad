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

#include "mchow/tableaux.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace mchow {
namespace {

// Counts SYT of shape eta by placing 1..n one at a time. The rule sees each
// adjacent pair (pos, pos+1) as it is decided and may reject the branch.
template <class Rule>
class SytCounter {
 public:
  SytCounter(const Partition& eta, const Rule& rule)
      : eta_(eta.parts()), rule_(rule), n_(eta.size()), cur_(eta_.size(), 0) {}

  std::uint64_t run() {
    if (n_ == 0) return rule_.final_ok(0) ? 1 : 0;
    return place(1, -1, 0);
  }

 private:
  std::uint64_t place(int val, int last_row, int count) {
    if (val > n_) return rule_.final_ok(count) ? 1 : 0;
    auto key = std::make_tuple(cur_, last_row, count);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::uint64_t total = 0;
    for (std::size_t r = 0; r < eta_.size(); ++r) {
      if (cur_[r] == eta_[r]) continue;
      if (r > 0 && cur_[r - 1] <= cur_[r]) continue;
      int c = count;
      if (val >= 2 && !rule_.step(val - 1, static_cast<int>(r) > last_row, c)) {
        continue;
      }
      if (!rule_.placed(val, c)) continue;
      ++cur_[r];
      total += place(val + 1, static_cast<int>(r), c);
      --cur_[r];
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

  std::vector<int> eta_;
  const Rule& rule_;
  int n_;
  std::vector<int> cur_;
  std::map<std::tuple<std::vector<int>, int, int>, std::uint64_t> memo_;
};

struct ExactDescentRule {
  const DescentSet& d;
  bool step(int pos, bool desc, int&) const { return desc == d.contains(pos); }
  bool placed(int, int) const { return true; }
  bool final_ok(int) const { return true; }
};

struct NumDescentRule {
  int d;
  bool step(int, bool desc, int& c) const {
    if (desc) ++c;
    return c <= d;
  }
  bool placed(int, int) const { return true; }
  bool final_ok(int c) const { return c == d; }
};

struct TransversalRule {
  const std::vector<Interval>& iv;
  bool step(int pos, bool desc, int& c) const {
    const int r = static_cast<int>(iv.size());
    if (desc) {
      if (c >= r || pos < iv[c].first || pos > iv[c].second) return false;
      ++c;
      return true;
    }
    // The next descent can no longer land in its interval.
    return c >= r || pos < iv[c].second;
  }
  bool placed(int, int) const { return true; }
  bool final_ok(int c) const { return c == static_cast<int>(iv.size()); }
};

struct CapRule {
  int d;
  int n;
  const std::vector<DescentCap>& caps;
  bool step(int, bool desc, int& c) const {
    if (desc) ++c;
    return c <= d;
  }
  bool placed(int val, int c) const {
    for (const auto& cap : caps) {
      if (cap.h == val && c > cap.max_descents) return false;
    }
    return true;
  }
  bool final_ok(int c) const {
    if (c != d) return false;
    for (const auto& cap : caps) {
      if (cap.h > n && c > cap.max_descents) return false;
      if (cap.h <= 1 && cap.max_descents < 0) return false;
    }
    return true;
  }
};

void enumerate_rec(const std::vector<int>& eta, int n, int val,
                   std::vector<std::vector<int>>& rows,
                   const Partition& shape,
                   const std::function<void(const StandardTableau&)>& visit) {
  if (val > n) {
    visit(StandardTableau(shape, rows));
    return;
  }
  for (std::size_t r = 0; r < eta.size(); ++r) {
    const int len = static_cast<int>(rows[r].size());
    if (len == eta[r]) continue;
    if (r > 0 && static_cast<int>(rows[r - 1].size()) <= len) continue;
    rows[r].push_back(val);
    enumerate_rec(eta, n, val + 1, rows, shape, visit);
    rows[r].pop_back();
  }
}

// Shapes nu' with nu <= nu' <= eta and nu'/nu a horizontal strip of `size`.
void horizontal_strips(const std::vector<int>& nu, const std::vector<int>& eta,
                       int size, std::vector<int>& cur, std::size_t row,
                       std::vector<std::vector<int>>& out) {
  if (row == eta.size()) {
    if (size == 0) out.push_back(cur);
    return;
  }
  const int hi_bound = row == 0 ? eta[0] : std::min(eta[row], nu[row - 1]);
  const int max_add = std::min(size, hi_bound - nu[row]);
  for (int a = max_add; a >= 0; --a) {
    cur[row] = nu[row] + a;
    horizontal_strips(nu, eta, size - a, cur, row + 1, out);
  }
  cur[row] = nu[row];
}

}  // namespace

StandardTableau::StandardTableau(Partition shape,
                                 std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  const int n = shape_.size();
  if (static_cast<int>(rows_.size()) != shape_.length()) {
    throw std::invalid_argument("tableau rows do not match shape");
  }
  row_of_.assign(n, -1);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (static_cast<int>(rows_[r].size()) != shape_[r]) {
      throw std::invalid_argument("tableau row length does not match shape");
    }
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      const int v = rows_[r][c];
      if (v < 1 || v > n || row_of_[v - 1] != -1) {
        throw std::invalid_argument("tableau entries must be 1..n once each");
      }
      row_of_[v - 1] = static_cast<int>(r);
      if (c > 0 && rows_[r][c - 1] >= v) {
        throw std::invalid_argument("tableau rows must increase");
      }
      if (r > 0 && rows_[r - 1][c] >= v) {
        throw std::invalid_argument("tableau columns must increase");
      }
    }
  }
}

void for_each_syt(const Partition& eta,
                  const std::function<void(const StandardTableau&)>& visit) {
  std::vector<std::vector<int>> rows(eta.length());
  enumerate_rec(eta.parts(), eta.size(), 1, rows, eta, visit);
}

std::vector<StandardTableau> enumerate_syt(const Partition& eta) {
  std::vector<StandardTableau> out;
  for_each_syt(eta, [&](const StandardTableau& t) { out.push_back(t); });
  return out;
}

DescentSet descent_set_of(const StandardTableau& t) {
  const int n = t.shape().size();
  std::vector<int> d;
  for (int i = 1; i < n; ++i) {
    if (t.row_of(i + 1) > t.row_of(i)) d.push_back(i);
  }
  return DescentSet(std::move(d), std::max(0, n - 1));
}

std::uint64_t count_syt_with_descents(const Partition& eta, const DescentSet& d) {
  const int n = eta.size();
  if (!d.elements().empty() && d.elements().back() >= n) return 0;
  ExactDescentRule rule{d};
  return SytCounter<ExactDescentRule>(eta, rule).run();
}

std::uint64_t count_syt_with_num_descents(const Partition& eta, int d) {
  if (d < 0) return 0;
  NumDescentRule rule{d};
  return SytCounter<NumDescentRule>(eta, rule).run();
}

std::uint64_t count_syt_transversal(const Partition& eta,
                                    const std::vector<Interval>& intervals) {
  TransversalRule rule{intervals};
  return SytCounter<TransversalRule>(eta, rule).run();
}

std::uint64_t count_syt_with_caps(const Partition& eta, int d,
                                  const std::vector<DescentCap>& caps) {
  if (d < 0) return 0;
  CapRule rule{d, eta.size(), caps};
  return SytCounter<CapRule>(eta, rule).run();
}

std::uint64_t kostka(const Partition& eta, const std::vector<int>& content) {
  int total = 0;
  for (int c : content) {
    if (c < 0) throw std::invalid_argument("negative content");
    total += c;
  }
  if (total != eta.size()) {
    throw std::invalid_argument("content size differs from shape size");
  }
  const std::vector<int>& target = eta.parts();
  std::map<std::pair<std::size_t, std::vector<int>>, std::uint64_t> memo;
  std::function<std::uint64_t(std::size_t, const std::vector<int>&)> rec =
      [&](std::size_t letter, const std::vector<int>& nu) -> std::uint64_t {
    if (letter == content.size()) return nu == target ? 1 : 0;
    auto key = std::make_pair(letter, nu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<std::vector<int>> next;
    std::vector<int> cur = nu;
    horizontal_strips(nu, target, content[letter], cur, 0, next);
    std::uint64_t sum = 0;
    for (const auto& s : next) sum += rec(letter + 1, s);
    memo.emplace(std::move(key), sum);
    return sum;
  };
  return rec(0, std::vector<int>(target.size(), 0));
}

std::uint64_t kostka(const Partition& eta, const Composition& b) {
  return kostka(eta, b.parts());
}

Integer hook_length_count(const Partition& eta) {
  const Partition t = transpose(eta);
  Integer num = factorial(eta.size());
  Integer den = 1;
  for (int i = 0; i < eta.length(); ++i) {
    for (int j = 0; j < eta[i]; ++j) {
      den *= (eta[i] - j - 1) + (t[j] - i - 1) + 1;
    }
  }
  return num / den;
}

std::vector<std::uint64_t> permutation_descent_histogram(int m) {
  if (m < 0) throw std::invalid_argument("negative permutation length");
  std::vector<std::uint64_t> hist(std::size_t{1} << std::max(0, m - 1), 0);
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 1);
  do {
    std::size_t mask = 0;
    for (int i = 0; i + 1 < m; ++i) {
      if (p[i] > p[i + 1]) mask |= std::size_t{1} << i;
    }
    ++hist[mask];
  } while (std::next_permutation(p.begin(), p.end()));
  return hist;
}

std::uint64_t count_permutations_with_descents(const DescentSet& d, int m) {
  for (int x : d.elements()) {
    if (x >= m) return 0;
  }
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 1);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (int i = 1; i < m && ok; ++i) {
      ok = (p[i - 1] > p[i]) == d.contains(i);
    }
    if (ok) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

Integer determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Integer gessel_viennot(const DescentSet& d, int n) {
  std::vector<int> a = d.elements();
  a.push_back(n - 1);
  std::vector<int> b = {0};
  b.insert(b.end(), d.elements().begin(), d.elements().end());
  std::vector<std::vector<Integer>> m(a.size(), std::vector<Integer>(b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) m[i][j] = binomial(a[i], b[j]);
  }
  return determinant(std::move(m));
}

}  // namespace mchow
