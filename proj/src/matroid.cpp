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

#include "mchow/matroid.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace mchow {
namespace {

void check_ground(int n) {
  if (n < 0 || n > 64) throw std::invalid_argument("ground set size must be in [0, 64]");
}

// Every k-subset of [n], in increasing bitmask order.
std::vector<Subset> k_subsets(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  if (k == 0) return {0};
  Subset s = (Subset{1} << k) - 1;
  const Subset limit = full_set(n);
  while (s <= limit) {
    out.push_back(s);
    const Subset c = s & (~s + 1);
    const Subset r = s + c;
    if (r == 0 || r > limit) break;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return out;
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) { return parent_[x] == x ? x : parent_[x] = find(parent_[x]); }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

}  // namespace

std::vector<int> subset_elements(Subset s) {
  std::vector<int> out;
  for (int e = 1; s; ++e, s >>= 1) {
    if (s & 1) out.push_back(e);
  }
  return out;
}

Subset subset_of(const std::vector<int>& elements) {
  Subset s = 0;
  for (int e : elements) {
    if (e < 1 || e > 64) throw std::invalid_argument("element out of range");
    s |= element_bit(e);
  }
  return s;
}

Matroid::Matroid(int n, std::vector<Subset> bases) : n_(n), bases_(std::move(bases)) {
  check_ground(n);
  if (bases_.empty()) throw std::invalid_argument("a matroid needs at least one basis");
  std::sort(bases_.begin(), bases_.end());
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
  k_ = subset_size(bases_.front());
  for (Subset b : bases_) {
    if (subset_size(b) != k_) throw std::invalid_argument("bases have different sizes");
    if (b & ~full_set(n_)) throw std::invalid_argument("basis element outside ground set");
  }
}

Matroid Matroid::checked(int n, std::vector<Subset> bases) {
  Matroid m(n, std::move(bases));
  if (!satisfies_exchange(m)) {
    throw std::invalid_argument("bases violate the exchange axiom");
  }
  return m;
}

bool Matroid::is_basis(Subset s) const {
  return std::binary_search(bases_.begin(), bases_.end(), s);
}

int Matroid::rank_of(Subset s) const {
  int best = 0;
  for (Subset b : bases_) {
    best = std::max(best, subset_size(b & s));
    if (best == k_) break;
  }
  return best;
}

bool Matroid::is_independent(Subset s) const {
  for (Subset b : bases_) {
    if ((s & ~b) == 0) return true;
  }
  return false;
}

Subset Matroid::closure(Subset s) const {
  const int r = rank_of(s);
  Subset out = s;
  for (int e = 1; e <= n_; ++e) {
    if (!(s & element_bit(e)) && rank_of(s | element_bit(e)) == r) out |= element_bit(e);
  }
  return out;
}

Subset Matroid::loops() const {
  Subset used = 0;
  for (Subset b : bases_) used |= b;
  return ground() & ~used;
}

Subset Matroid::coloops() const {
  Subset common = ground();
  for (Subset b : bases_) common &= b;
  return common;
}

bool satisfies_exchange(const Matroid& m) {
  for (Subset b1 : m.bases()) {
    for (Subset b2 : m.bases()) {
      for (Subset x = b1 & ~b2; x; x &= x - 1) {
        const Subset xb = x & (~x + 1);
        bool found = false;
        for (Subset y = b2 & ~b1; y && !found; y &= y - 1) {
          const Subset yb = y & (~y + 1);
          found = m.is_basis((b1 & ~xb) | yb);
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

std::vector<int> rank_table(const Matroid& m) {
  if (m.n() > 24) throw std::invalid_argument("rank table needs n <= 24");
  const std::size_t size = std::size_t{1} << m.n();
  std::vector<char> indep(size, 0);
  for (Subset b : m.bases()) indep[b] = 1;
  for (std::size_t s = size; s-- > 0;) {
    if (indep[s]) continue;
    for (int e = 0; e < m.n(); ++e) {
      const std::size_t bit = std::size_t{1} << e;
      if (!(s & bit) && indep[s | bit]) {
        indep[s] = 1;
        break;
      }
    }
  }
  std::vector<int> rank(size, 0);
  for (std::size_t s = 1; s < size; ++s) {
    if (indep[s]) {
      rank[s] = __builtin_popcountll(s);
    } else {
      rank[s] = rank[s & (s - 1)];
      for (Subset t = s; t; t &= t - 1) {
        rank[s] = std::max(rank[s], rank[s & ~(t & (~t + 1))]);
      }
    }
  }
  return rank;
}

std::string outline_path(const Partition& p, int k, int w) {
  if (!p.fits_in(k, w)) throw std::invalid_argument("partition exceeds the frame");
  std::string path;
  for (int i = k; i >= 1; --i) {
    path.append(p[i - 1] - p[i], 'E');
    path.push_back('N');
  }
  path.append(w - p[0], 'E');
  return path;
}

Partition partition_of_path(const std::string& path) {
  std::vector<int> easts;
  int e = 0;
  for (char c : path) {
    if (c == 'E') {
      ++e;
    } else if (c == 'N') {
      easts.push_back(e);
    } else {
      throw std::invalid_argument("paths use only N and E steps");
    }
  }
  std::reverse(easts.begin(), easts.end());
  return Partition(easts);
}

LatticePathSpec LatticePathSpec::from_paths(const std::string& lower,
                                            const std::string& upper) {
  if (lower.size() != upper.size()) {
    throw std::invalid_argument("bounding paths have different lengths");
  }
  const auto count_n = [](const std::string& s) {
    return static_cast<int>(std::count(s.begin(), s.end(), 'N'));
  };
  LatticePathSpec spec;
  spec.k = count_n(lower);
  if (count_n(upper) != spec.k) {
    throw std::invalid_argument("bounding paths end at different points");
  }
  spec.w = static_cast<int>(lower.size()) - spec.k;
  spec.outer = partition_of_path(lower);
  spec.inner = partition_of_path(upper);
  if (!spec.outer.contains(spec.inner)) {
    throw std::invalid_argument("upper path must stay weakly above the lower path");
  }
  return spec;
}

LatticePathSpec LatticePathSpec::from_shape(const Partition& outer, const Partition& inner) {
  return from_shape(outer, inner, outer.length(), outer[0]);
}

LatticePathSpec LatticePathSpec::from_shape(const Partition& outer, const Partition& inner,
                                            int k, int w) {
  if (!outer.contains(inner)) throw std::invalid_argument("inner shape not inside outer");
  if (!outer.fits_in(k, w)) throw std::invalid_argument("shape exceeds the frame");
  return LatticePathSpec{k, w, outer, inner};
}

std::string LatticePathSpec::lower_path() const { return outline_path(outer, k, w); }
std::string LatticePathSpec::upper_path() const { return outline_path(inner, k, w); }

namespace {
std::vector<int> north_positions(const std::string& path) {
  std::vector<int> out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] == 'N') out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}
}  // namespace

std::vector<int> LatticePathSpec::lower_north() const { return north_positions(lower_path()); }
std::vector<int> LatticePathSpec::upper_north() const { return north_positions(upper_path()); }

bool LatticePathSpec::connected() const {
  if (k == 0 || w == 0) return false;
  if (outer.length() != k || outer[0] != w) return false;
  // a full first column of the inner shape means the first element is a loop
  if (inner.length() >= k) return false;
  return is_connected(SkewShape(outer, inner));
}

Matroid lattice_path(const LatticePathSpec& spec) {
  const std::vector<int> lo = spec.upper_north();
  const std::vector<int> hi = spec.lower_north();
  std::vector<Subset> bases;
  std::function<void(int, int, Subset)> rec = [&](int i, int prev, Subset acc) {
    if (i == spec.k) {
      bases.push_back(acc);
      return;
    }
    for (int x = std::max(lo[i], prev + 1); x <= hi[i]; ++x) {
      rec(i + 1, x, acc | element_bit(x));
    }
  };
  rec(0, 0, 0);
  return Matroid(spec.n(), std::move(bases));
}

Matroid uniform(int k, int n) {
  if (k < 0 || k > n) throw std::invalid_argument("uniform matroid needs 0 <= k <= n");
  check_ground(n);
  return Matroid(n, k_subsets(n, k));
}

LatticePathSpec snake_spec(const Composition& b) {
  const SkewShape r = ribbon_from_composition(b);
  return LatticePathSpec::from_shape(r.outer(), r.inner(), b.length(),
                                     b.size() - b.length() + 1);
}

Matroid snake(const Composition& b) { return lattice_path(snake_spec(b)); }

void validate_nested_chain(const std::vector<std::pair<int, int>>& chain, int n) {
  if (chain.empty()) throw std::invalid_argument("nested chain is empty");
  int ph = 0, pr = 0;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const auto [h, r] = chain[i];
    if (i == 0 && h == 0 && r == 0) continue;
    if (h > n) throw std::invalid_argument("chain flat larger than the ground set");
    if (r < 0 || r > h) throw std::invalid_argument("chain rank out of range");
    if (i == 0 && r == 0) {  // loops at the bottom
      ph = h;
      continue;
    }
    if (h <= ph || r <= pr || h - r <= ph - pr) {
      throw std::invalid_argument(
          "chain must grow strictly in size, rank and nullity");
    }
    ph = h;
    pr = r;
  }
}

Matroid nested_from_chain(const std::vector<std::pair<int, int>>& chain, int n) {
  validate_nested_chain(chain, n);
  std::string upper;
  int ph = 0, pr = 0;
  for (const auto& [h, r] : chain) {
    upper.append(r - pr, 'N');
    upper.append((h - ph) - (r - pr), 'E');
    ph = h;
    pr = r;
  }
  upper.append(n - ph, 'N');
  const int k = pr + (n - ph);
  std::string lower(n - k, 'E');
  lower.append(k, 'N');
  return lattice_path(LatticePathSpec::from_paths(lower, upper));
}

Matroid minimal(int k, int n) {
  if (k < 1 || k >= n) throw std::invalid_argument("minimal matroid needs 1 <= k < n");
  std::vector<int> parts(k, 1);
  parts[0] = n - k;
  return snake(Composition(parts));
}

Matroid panhandle(int k, int h, int n) {
  if (k < 1 || h < k || h >= n) {
    throw std::invalid_argument("panhandle needs 1 <= k <= h < n");
  }
  std::vector<int> rows(k, h - k + 1);
  rows[0] = n - k;
  return lattice_path(LatticePathSpec::from_shape(Partition(rows), Partition(), k, n - k));
}

Matroid dual(const Matroid& m) {
  std::vector<Subset> b;
  for (Subset x : m.bases()) b.push_back(m.ground() & ~x);
  return Matroid(m.n(), std::move(b));
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  std::vector<Subset> bases;
  for (Subset x : a.bases()) {
    for (Subset y : b.bases()) bases.push_back(x | (y << a.n()));
  }
  return Matroid(a.n() + b.n(), std::move(bases));
}

Matroid add_loop(const Matroid& m) { return Matroid(m.n() + 1, m.bases()); }

Matroid add_coloop(const Matroid& m) {
  std::vector<Subset> b;
  for (Subset x : m.bases()) b.push_back(x | element_bit(m.n() + 1));
  return Matroid(m.n() + 1, std::move(b));
}

Matroid parallel_ext(const Matroid& m) {
  const Subset e = element_bit(m.n()), f = element_bit(m.n() + 1);
  std::vector<Subset> b = m.bases();
  for (Subset x : m.bases()) {
    if (x & e) b.push_back((x & ~e) | f);
  }
  return Matroid(m.n() + 1, std::move(b));
}

Matroid series_ext(const Matroid& m) {
  const Subset e = element_bit(m.n()), f = element_bit(m.n() + 1);
  std::vector<Subset> b;
  for (Subset x : m.bases()) {
    b.push_back(x | f);
    if (!(x & e)) b.push_back(x | e);
  }
  return Matroid(m.n() + 1, std::move(b));
}

Matroid restriction(const Matroid& m, Subset s) {
  const std::vector<int> keep = subset_elements(s & m.ground());
  const int r = m.rank_of(s);
  std::vector<Subset> bases;
  for (Subset b : m.bases()) {
    const Subset part = b & s;
    if (subset_size(part) != r) continue;
    Subset relabelled = 0;
    for (std::size_t i = 0; i < keep.size(); ++i) {
      if (part & element_bit(keep[i])) relabelled |= element_bit(static_cast<int>(i) + 1);
    }
    bases.push_back(relabelled);
  }
  return Matroid(static_cast<int>(keep.size()), std::move(bases));
}

Matroid relabel(const Matroid& m, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != m.n()) {
    throw std::invalid_argument("relabelling must cover the ground set");
  }
  std::vector<Subset> bases;
  for (Subset b : m.bases()) {
    Subset x = 0;
    for (int e : subset_elements(b)) x |= element_bit(perm[e - 1]);
    bases.push_back(x);
  }
  return Matroid(m.n(), std::move(bases));
}

std::vector<Subset> connected_components(const Matroid& m) {
  UnionFind uf(m.n());
  for (Subset b : m.bases()) {
    for (int x : subset_elements(b)) {
      for (int y : subset_elements(m.ground() & ~b)) {
        if (uf.find(x - 1) == uf.find(y - 1)) continue;
        if (m.is_basis((b & ~element_bit(x)) | element_bit(y))) uf.unite(x - 1, y - 1);
      }
    }
  }
  std::map<int, Subset> groups;
  for (int e = 1; e <= m.n(); ++e) groups[uf.find(e - 1)] |= element_bit(e);
  std::vector<Subset> out;
  for (const auto& [root, s] : groups) out.push_back(s);
  std::sort(out.begin(), out.end(), [](Subset a, Subset b) {
    return (a & (~a + 1)) < (b & (~b + 1));
  });
  return out;
}

namespace {

bool flat_order(const FlatWithRank& a, const FlatWithRank& b) {
  if (a.rank != b.rank) return a.rank < b.rank;
  if (subset_size(a.flat) != subset_size(b.flat)) {
    return subset_size(a.flat) < subset_size(b.flat);
  }
  return a.flat < b.flat;
}

bool is_flat(const std::vector<int>& rank, int n, Subset s) {
  for (int e = 1; e <= n; ++e) {
    const Subset bit = element_bit(e);
    if (!(s & bit) && rank[s | bit] == rank[s]) return false;
  }
  return true;
}

}  // namespace

std::vector<FlatWithRank> cyclic_flats(const Matroid& m) {
  const std::vector<int> rank = rank_table(m);
  std::vector<FlatWithRank> out;
  for (Subset s = 0; s <= m.ground(); ++s) {
    if (!is_flat(rank, m.n(), s)) continue;
    bool cyclic = true;
    for (Subset t = s; t && cyclic; t &= t - 1) {
      cyclic = rank[s & ~(t & (~t + 1))] == rank[s];
    }
    if (cyclic) out.push_back({s, rank[s]});
    if (s == m.ground()) break;
  }
  std::sort(out.begin(), out.end(), flat_order);
  return out;
}

std::vector<FlatWithRank> flats_of_rank(const Matroid& m, int r) {
  const std::vector<int> rank = rank_table(m);
  std::vector<FlatWithRank> out;
  for (Subset s = 0; s <= m.ground(); ++s) {
    if (rank[s] == r && is_flat(rank, m.n(), s)) out.push_back({s, r});
    if (s == m.ground()) break;
  }
  std::sort(out.begin(), out.end(), flat_order);
  return out;
}

long long beta(const Matroid& m) {
  const std::vector<int> rank = rank_table(m);
  long long sum = 0;
  for (std::size_t s = 0; s < rank.size(); ++s) {
    sum += (__builtin_popcountll(s) % 2 ? -1 : 1) * static_cast<long long>(rank[s]);
  }
  return m.rank() % 2 ? -sum : sum;
}

std::vector<std::pair<int, int>> CyclicChain::profile() const {
  std::vector<std::pair<int, int>> p;
  for (const auto& f : chain) p.emplace_back(subset_size(f.flat), f.rank);
  return p;
}

std::vector<CyclicChain> cyclic_chains(const Matroid& m) {
  const std::vector<FlatWithRank> z = cyclic_flats(m);
  const FlatWithRank bottom = z.front();
  const FlatWithRank top = z.back();
  std::vector<CyclicChain> out;
  std::vector<FlatWithRank> cur = {bottom};
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    const Subset last = cur.back().flat;
    if (last == top.flat) {
      out.push_back({cur});
      return;
    }
    for (std::size_t i = from; i < z.size(); ++i) {
      const Subset f = z[i].flat;
      if (f == last || (f & last) != last) continue;
      if (f != top.flat && (f & top.flat) != f) continue;
      cur.push_back(z[i]);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(1);
  if (bottom.flat == top.flat) out = {CyclicChain{{bottom}}};
  std::sort(out.begin(), out.end(), [](const CyclicChain& a, const CyclicChain& b) {
    if (a.chain.size() != b.chain.size()) return a.chain.size() < b.chain.size();
    for (std::size_t i = 0; i < a.chain.size(); ++i) {
      if (a.chain[i].flat != b.chain[i].flat) {
        return flat_order(a.chain[i], b.chain[i]);
      }
    }
    return false;
  });
  return out;
}

std::vector<long long> chain_mobius(const Matroid& m) {
  const std::vector<CyclicChain> chains = cyclic_chains(m);
  const std::size_t count = chains.size();
  // Chains as sorted member lists; refinement is set inclusion.
  std::vector<std::vector<Subset>> members(count);
  for (std::size_t i = 0; i < count; ++i) {
    for (const auto& f : chains[i].chain) members[i].push_back(f.flat);
    std::sort(members[i].begin(), members[i].end());
  }
  std::vector<long long> mu(count, 0);
  // Longer chains come last, so walk backwards: mu(x) = -(1 + sum_{y > x} mu(y)).
  for (std::size_t i = count; i-- > 0;) {
    long long sum = 1;  // the artificial top
    for (std::size_t j = i + 1; j < count; ++j) {
      if (members[j].size() > members[i].size() &&
          std::includes(members[j].begin(), members[j].end(), members[i].begin(),
                        members[i].end())) {
        sum += mu[j];
      }
    }
    mu[i] = -sum;
  }
  return mu;
}

std::vector<HampeTerm> hampe_coefficients(const Matroid& m) {
  const std::vector<CyclicChain> chains = cyclic_chains(m);
  const std::vector<long long> mu = chain_mobius(m);
  std::vector<HampeTerm> out;
  for (std::size_t i = 0; i < chains.size(); ++i) {
    if (mu[i] != 0) out.push_back({chains[i], -mu[i]});
  }
  return out;
}

Matroid nested_of_chain(int n, int k, const CyclicChain& c) {
  std::vector<Subset> bases;
  for (Subset b : k_subsets(n, k)) {
    bool ok = true;
    for (const auto& f : c.chain) {
      if (subset_size(b & f.flat) > f.rank) {
        ok = false;
        break;
      }
    }
    if (ok) bases.push_back(b);
  }
  return Matroid(n, std::move(bases));
}

std::vector<Composition> snakes_in(const LatticePathSpec& spec) {
  if (!spec.connected()) throw std::invalid_argument("lattice path spec is not connected");
  std::vector<Composition> out;
  for (const auto& b : compositions_of(spec.n() - 1, spec.k)) {
    const SkewShape r = ribbon_from_composition(b);
    if (spec.outer.contains(r.outer()) && r.inner().contains(spec.inner)) {
      out.push_back(b);
    }
  }
  return out;
}

std::vector<std::pair<int, int>> transversal_intervals(const LatticePathSpec& spec) {
  if (!spec.connected()) throw std::invalid_argument("lattice path spec is not connected");
  const int k = spec.k;
  std::vector<std::pair<int, int>> out;
  for (int j = 1; j <= k - 1; ++j) {
    // Uppermost snake hugs the inner boundary, lowermost the outer one.
    const int c = spec.inner[k - j - 1] + j;
    const int d = spec.outer[k - j] + j - 1;
    out.emplace_back(c, d);
  }
  return out;
}

bool is_paving(const Matroid& m) {
  if (m.rank() == 0) return true;
  const std::vector<int> rank = rank_table(m);
  for (Subset s : k_subsets(m.n(), m.rank() - 1)) {
    if (rank[s] != m.rank() - 1) return false;
  }
  return true;
}

std::map<int, int> paving_flat_counts(const Matroid& m) {
  std::map<int, int> counts;
  if (m.rank() == 0) return counts;
  for (const auto& f : flats_of_rank(m, m.rank() - 1)) {
    const int h = subset_size(f.flat);
    if (h >= m.rank()) ++counts[h];
  }
  return counts;
}

}  // namespace mchow
