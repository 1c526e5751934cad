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

#include "mchow/symfunc.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace mchow {
namespace {

// Partitions nu with nu / eta a horizontal strip of size b.
void add_horizontal(const std::vector<int>& eta, int b, std::vector<int>& cur,
                    std::size_t row, std::vector<Partition>& out) {
  const std::size_t rows = eta.size() + 1;
  if (row == rows) {
    if (b == 0) out.emplace_back(cur);
    return;
  }
  const int base = row < eta.size() ? eta[row] : 0;
  const int limit = row == 0 ? base + b : std::min(base + b, eta[row - 1]);
  for (int v = limit; v >= base; --v) {
    cur[row] = v;
    add_horizontal(eta, b - (v - base), cur, row + 1, out);
  }
  cur[row] = base;
}

// Partitions nu with nu / eta a vertical strip of size b.
void add_vertical(const std::vector<int>& eta, int b, std::vector<int>& cur,
                  std::size_t row, std::vector<Partition>& out) {
  const std::size_t rows = cur.size();
  if (b == 0) {
    std::vector<int> done = cur;
    out.emplace_back(std::move(done));
    return;
  }
  if (row == rows) return;
  const int base = row < eta.size() ? eta[row] : 0;
  const int above = row == 0 ? base + 1 : cur[row - 1];
  if (base + 1 <= above) {
    cur[row] = base + 1;
    add_vertical(eta, b - 1, cur, row + 1, out);
  }
  cur[row] = base;
  if (rows - row - 1 >= static_cast<std::size_t>(b)) {
    add_vertical(eta, b, cur, row + 1, out);
  }
}

// Partitions mu with eta / mu a horizontal strip of size b.
void remove_horizontal(const std::vector<int>& eta, int b, std::vector<int>& cur,
                       std::size_t row, std::vector<Partition>& out) {
  if (row == eta.size()) {
    if (b == 0) out.emplace_back(cur);
    return;
  }
  const int below = row + 1 < eta.size() ? eta[row + 1] : 0;
  for (int v = eta[row]; v >= below; --v) {
    if (eta[row] - v > b) break;
    cur[row] = v;
    remove_horizontal(eta, b - (eta[row] - v), cur, row + 1, out);
  }
  cur[row] = eta[row];
}

class LrFiller {
 public:
  LrFiller(const Partition& lambda, const Partition& mu, const Partition* cap,
           const std::function<void(const std::vector<int>&)>& visit)
      : lambda_(lambda), mu_(mu), cap_(cap), visit_(visit) {
    rows_ = lambda.length();
    grid_.resize(rows_);
    for (int r = 0; r < rows_; ++r) grid_[r].assign(lambda[r], 0);
    count_.assign(rows_ + 2, 0);
  }

  void run() {
    if (rows_ == 0) {
      visit_({});
      return;
    }
    fill(0, lambda_[0] - 1);
  }

 private:
  void fill(int r, int c) {
    if (c < mu_[r]) {
      if (r + 1 == rows_) {
        std::vector<int> content;
        for (std::size_t x = 1; x < count_.size() && count_[x] > 0; ++x) {
          content.push_back(count_[x]);
        }
        visit_(content);
        return;
      }
      fill(r + 1, lambda_[r + 1] - 1);
      return;
    }
    int hi = r + 1;
    if (c + 1 < lambda_[r]) hi = std::min(hi, grid_[r][c + 1]);
    int lo = 1;
    const bool above_in_shape = r > 0 && c >= mu_[r - 1];
    if (above_in_shape) lo = grid_[r - 1][c] + 1;
    for (int x = lo; x <= hi; ++x) {
      if (x > 1 && count_[x] + 1 > count_[x - 1]) continue;
      if (cap_ && count_[x] + 1 > (*cap_)[x - 1]) continue;
      grid_[r][c] = x;
      ++count_[x];
      fill(r, c - 1);
      --count_[x];
    }
    grid_[r][c] = 0;
  }

  const Partition& lambda_;
  const Partition& mu_;
  const Partition* cap_;
  const std::function<void(const std::vector<int>&)>& visit_;
  int rows_ = 0;
  std::vector<std::vector<int>> grid_;
  std::vector<int> count_;
};

// Candidate shapes for s_mu * s_nu: mu, nu contained, first row and length
// bounded by the sums.
void product_candidates(const Partition& mu, const Partition& nu,
                        const std::optional<std::pair<int, int>>& bound,
                        std::vector<Partition>& out) {
  const int total = mu.size() + nu.size();
  int max_rows = mu.length() + nu.length();
  int max_width = mu[0] + nu[0];
  if (bound) {
    max_rows = std::min(max_rows, bound->first);
    max_width = std::min(max_width, bound->second);
  }
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    const int row = static_cast<int>(cur.size());
    if (remaining == 0) {
      if (row >= mu.length() && row >= nu.length()) out.emplace_back(cur);
      return;
    }
    if (row == max_rows) return;
    const int lo = std::max(mu[row], nu[row]);
    for (int p = std::min(remaining, max_part); p >= std::max(lo, 1); --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(total, max_width);
}

SchurExpansion like(const SchurExpansion& f) {
  SchurExpansion r;
  if (f.bound()) r.set_bound(f.bound()->first, f.bound()->second);
  return r;
}

}  // namespace

SchurExpansion SchurExpansion::schur(const Partition& p, const Integer& c) {
  SchurExpansion r;
  r.add(p, c);
  return r;
}

Integer SchurExpansion::coefficient(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Integer(0) : it->second;
}

void SchurExpansion::add(const Partition& p, const Integer& c) {
  if (c == 0) return;
  if (bound_ && !p.fits_in(bound_->first, bound_->second)) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void SchurExpansion::set_bound(int k, int w) {
  bound_ = std::make_pair(k, w);
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (!it->first.fits_in(k, w)) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

SchurExpansion& SchurExpansion::operator+=(const SchurExpansion& o) {
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

SchurExpansion& SchurExpansion::operator-=(const SchurExpansion& o) {
  for (const auto& [p, c] : o.terms_) add(p, -c);
  return *this;
}

SchurExpansion& SchurExpansion::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

std::string SchurExpansion::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    out << mag << "*s" << p.to_string();
    first = false;
  }
  return out.str();
}

SchurExpansion pieri_row(const SchurExpansion& f, int b) {
  if (b < 0) throw std::invalid_argument("negative Pieri length");
  SchurExpansion r = like(f);
  for (const auto& [eta, c] : f.terms()) {
    std::vector<Partition> out;
    std::vector<int> cur = eta.parts();
    cur.push_back(0);
    add_horizontal(eta.parts(), b, cur, 0, out);
    for (const auto& nu : out) r.add(nu, c);
  }
  return r;
}

SchurExpansion pieri_col(const SchurExpansion& f, int b) {
  if (b < 0) throw std::invalid_argument("negative Pieri length");
  SchurExpansion r = like(f);
  for (const auto& [eta, c] : f.terms()) {
    std::vector<Partition> out;
    std::vector<int> cur = eta.parts();
    cur.resize(eta.parts().size() + b, 0);
    add_vertical(eta.parts(), b, cur, 0, out);
    for (const auto& nu : out) r.add(nu, c);
  }
  return r;
}

void for_each_lr_filling(const Partition& lambda, const Partition& mu,
                         const Partition* cap,
                         const std::function<void(const std::vector<int>&)>& visit) {
  if (!lambda.contains(mu)) {
    throw std::invalid_argument("inner shape not contained in outer shape");
  }
  LrFiller(lambda, mu, cap, visit).run();
}

Integer lr_coefficient(const Partition& lambda, const Partition& mu,
                       const Partition& eta) {
  if (!lambda.contains(mu)) {
    throw std::invalid_argument("mu must be contained in lambda");
  }
  if (lambda.size() != mu.size() + eta.size()) {
    throw std::invalid_argument("LR coefficient sizes do not add up");
  }
  Integer count = 0;
  for_each_lr_filling(lambda, mu, &eta,
                      [&](const std::vector<int>&) { ++count; });
  return count;
}

SchurExpansion schur_multiply(const SchurExpansion& f, const SchurExpansion& g) {
  SchurExpansion r = like(f);
  if (!r.bound() && g.bound()) r.set_bound(g.bound()->first, g.bound()->second);
  for (const auto& [mu, a] : f.terms()) {
    for (const auto& [nu, b] : g.terms()) {
      std::vector<Partition> cand;
      product_candidates(mu, nu, r.bound(), cand);
      const Integer ab = a * b;
      for (const auto& lambda : cand) {
        const Integer c = lr_coefficient(lambda, mu, nu);
        if (c != 0) r.add(lambda, ab * c);
      }
    }
  }
  return r;
}

SchurExpansion skew_schur(const Partition& lambda, const Partition& mu) {
  if (!lambda.contains(mu)) {
    throw std::invalid_argument("mu must be contained in lambda");
  }
  std::map<std::vector<int>, Integer> counts;
  for_each_lr_filling(lambda, mu, nullptr,
                      [&](const std::vector<int>& content) { ++counts[content]; });
  SchurExpansion r;
  for (const auto& [content, c] : counts) r.add(Partition(content), c);
  return r;
}

SchurExpansion skew_schur(const SkewShape& s) {
  return skew_schur(s.outer(), s.inner());
}

SchurExpansion jacobi_trudi_ribbon(const Composition& b) {
  if (b.empty()) throw std::invalid_argument("empty composition");
  const int k = b.length();
  const DescentSet des = descent_set(b);
  const auto& d = des.elements();
  std::vector<int> rows = {0};
  rows.insert(rows.end(), d.begin(), d.end());
  std::vector<int> cols(d.begin(), d.end());
  cols.push_back(b.size());
  // Laplace expansion along the first remaining column, memoized on the set
  // of rows still in play.
  std::map<unsigned, SchurExpansion> memo;
  std::function<SchurExpansion(unsigned)> minor = [&](unsigned row_mask) {
    const int used = k - std::popcount(row_mask);
    if (row_mask == 0) return SchurExpansion::one();
    if (auto it = memo.find(row_mask); it != memo.end()) return it->second;
    SchurExpansion acc;
    int position = 0;
    for (int i = 0; i < k; ++i) {
      if (!(row_mask >> i & 1u)) continue;
      const int entry = cols[used] - rows[i];
      if (entry >= 0) {
        SchurExpansion term = pieri_row(minor(row_mask & ~(1u << i)), entry);
        if (position % 2 == 0) {
          acc += term;
        } else {
          acc -= term;
        }
      }
      ++position;
    }
    memo.emplace(row_mask, acc);
    return acc;
  };
  return minor((1u << k) - 1);
}

SchurExpansion ribbon_schur_recursive(const Composition& b) {
  if (b.empty()) throw std::invalid_argument("empty composition");
  const int k = b.length();
  if (k == 1) return SchurExpansion::schur(Partition({b[0]}));
  std::vector<int> shorter(b.parts().begin(), b.parts().end() - 1);
  std::vector<int> merged = shorter;
  merged.back() += b[k - 1];
  return pieri_row(ribbon_schur_recursive(Composition(shorter)), b[k - 1]) -
         ribbon_schur_recursive(Composition(merged));
}

SchurExpansion ribbon_schur_alternating(const Composition& b) {
  if (b.empty()) throw std::invalid_argument("empty composition");
  const int k = b.length();
  SchurExpansion total;
  for (unsigned mask = 0; mask < (1u << (k - 1)); ++mask) {
    std::vector<int> cuts;
    for (int i = 0; i < k - 1; ++i) {
      if (mask >> i & 1u) cuts.push_back(i + 1);
    }
    SchurExpansion prod = SchurExpansion::one();
    const Composition merged = coarsen(b, cuts);
    for (int part : merged.parts()) prod = pieri_row(prod, part);
    if ((k - 1 - static_cast<int>(cuts.size())) % 2 == 0) {
      total += prod;
    } else {
      total -= prod;
    }
  }
  return total;
}

SchurExpansion rmv(const SchurExpansion& f, int b) {
  if (b < 0) throw std::invalid_argument("negative strip size");
  SchurExpansion r = like(f);
  for (const auto& [eta, c] : f.terms()) {
    std::vector<Partition> out;
    std::vector<int> cur = eta.parts();
    remove_horizontal(eta.parts(), b, cur, 0, out);
    for (const auto& mu : out) r.add(mu, c);
  }
  return r;
}

SchurExpansion truncate(const SchurExpansion& f, int k, int w) {
  SchurExpansion r = f;
  r.set_bound(k, w);
  return r;
}

}  // namespace mchow
