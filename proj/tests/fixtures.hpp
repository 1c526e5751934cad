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

// Matroid fixtures shared by the test binaries.

#ifndef MCHOW_TESTS_FIXTURES_HPP_
#define MCHOW_TESTS_FIXTURES_HPP_

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "mchow/matroid.hpp"
#include "mchow/tableaux.hpp"

namespace fixtures {

using namespace mchow;

// Rank 3 on [7], cut out by its proper nontrivial cyclic flats.
inline Matroid rank3_n7_matroid() {
  const std::vector<std::pair<Subset, int>> z = {
      {subset_of({1, 2}), 1},
      {subset_of({3, 4}), 1},
      {subset_of({1, 2, 3, 4}), 2},
      {subset_of({3, 4, 5, 6}), 2}};
  std::vector<Subset> bases;
  for (Subset b : uniform(3, 7).bases()) {
    bool ok = true;
    for (const auto& [f, r] : z) ok = ok && subset_size(b & f) <= r;
    if (ok) bases.push_back(b);
  }
  return Matroid(7, bases);
}

// Lattice-path matroid on [7] covered by the snakes (2,3,1), (3,2,1), (4,1,1).
inline LatticePathSpec three_snake_spec() {
  return LatticePathSpec::from_paths("EEEENNN", "NENEENE");
}

// Rank-3 paving matroid on [6] with one 3-point line.
inline Matroid line_in_rank3() {
  std::vector<Subset> bases;
  for (Subset b : uniform(3, 6).bases()) {
    if (b != subset_of({1, 2, 3})) bases.push_back(b);
  }
  return Matroid(6, bases);
}

// Column matroid of a random small-integer k x n matrix of full rank.
inline Matroid random_representable(std::mt19937& rng, int k, int n) {
  std::uniform_int_distribution<int> entry(-2, 2);
  std::uniform_int_distribution<int> zero(0, 3);
  while (true) {
    std::vector<std::vector<int>> a(k, std::vector<int>(n));
    for (auto& row : a) {
      for (auto& x : row) x = zero(rng) == 0 ? 0 : entry(rng);
    }
    std::vector<Subset> bases;
    for (Subset b : uniform(k, n).bases()) {
      const auto cols = subset_elements(b);
      std::vector<std::vector<Integer>> m(k, std::vector<Integer>(k));
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) m[i][j] = a[i][cols[j] - 1];
      }
      if (determinant(m) != 0) bases.push_back(b);
    }
    if (!bases.empty()) return Matroid(n, bases);
  }
}

// Random connected skew shape in a k x w frame.
inline LatticePathSpec random_lattice_path(std::mt19937& rng, int k, int w) {
  while (true) {
    std::vector<int> outer(k), inner(k);
    outer[0] = w;
    for (int i = 1; i < k; ++i) {
      outer[i] = std::uniform_int_distribution<int>(1, outer[i - 1])(rng);
    }
    for (int i = 0; i < k; ++i) {
      const int hi = std::min(outer[i] - 1, i == 0 ? w - 1 : inner[i - 1]);
      inner[i] = std::uniform_int_distribution<int>(0, std::max(0, hi))(rng);
    }
    for (int i = k - 1; i >= 0; --i) {
      if (i + 1 < k) inner[i] = std::max(inner[i], inner[i + 1]);
    }
    try {
      auto spec = LatticePathSpec::from_shape(Partition(outer), Partition(inner), k, w);
      if (spec.connected()) return spec;
    } catch (const std::invalid_argument&) {
    }
  }
}

struct Named {
  std::string name;
  Matroid m;
};

// Families plus two fixed rank-3 examples, every member with n <= max_n.
inline std::vector<Named> family_corpus(int max_n) {
  std::vector<Named> out;
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 0; k <= n; ++k) {
      out.push_back({"U" + std::to_string(k) + "," + std::to_string(n), uniform(k, n)});
    }
    for (const auto& b : compositions_of(n - 1)) {
      if (n >= 2) out.push_back({"S" + b.to_string(), snake(b)});
    }
    for (int k = 2; k < n; ++k) {
      for (int h = k; h < n - 1; ++h) {
        out.push_back({"panhandle" + std::to_string(k) + "," + std::to_string(h) + "," +
                           std::to_string(n),
                       panhandle(k, h, n)});
      }
    }
  }
  if (max_n >= 7) {
    out.push_back({"rank3 n7", rank3_n7_matroid()});
    out.push_back({"three-snake lpm", lattice_path(three_snake_spec())});
  }
  if (max_n >= 6) out.push_back({"line", line_in_rank3()});
  if (max_n >= 4) {
    out.push_back({"U12+U12", direct_sum(uniform(1, 2), uniform(1, 2))});
    out.push_back({"U12+U01+U11", add_coloop(add_loop(uniform(1, 2)))});
  }
  if (max_n >= 5) out.push_back({"U12+U23", direct_sum(uniform(1, 2), uniform(2, 3))});
  if (max_n >= 6) out.push_back({"U24+U12", direct_sum(uniform(2, 4), uniform(1, 2))});
  return out;
}

inline std::vector<Named> random_corpus(int count, int max_n, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Named> out;
  for (int i = 0; i < count; ++i) {
    const int n = std::uniform_int_distribution<int>(2, max_n)(rng);
    const int k = std::uniform_int_distribution<int>(1, n - 1)(rng);
    out.push_back({"random" + std::to_string(i), random_representable(rng, k, n)});
  }
  return out;
}

// Connected paving matroids: uniform ones, rank-3 matroids of random partial
// linear spaces and sparse paving rank-4 matroids, all with n <= max_n.
inline std::vector<Named> paving_corpus(int count, int max_n, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Named> out;
  for (int n = 4; n <= max_n; ++n) {
    for (int k = 2; k < n - 1; ++k) {
      out.push_back({"U" + std::to_string(k) + "," + std::to_string(n), uniform(k, n)});
    }
  }
  out.push_back({"line", line_in_rank3()});
  int made = 0;
  for (int attempt = 0; made < count && attempt < 50 * count; ++attempt) {
    const int k = attempt % 2 == 0 ? 3 : 4;
    const int n = std::uniform_int_distribution<int>(k + 2, max_n)(rng);
    // Rank 3: lines of size 3 or 4 meeting pairwise in at most one point.
    // Rank 4: circuit-hyperplanes of size 4 meeting pairwise in at most two.
    std::vector<Subset> blocks;
    for (int tries = 0; tries < 3 * n; ++tries) {
      const int size = k == 3 ? std::uniform_int_distribution<int>(3, 4)(rng) : 4;
      std::vector<int> pool(n);
      std::iota(pool.begin(), pool.end(), 1);
      std::shuffle(pool.begin(), pool.end(), rng);
      const Subset blk = subset_of(std::vector<int>(pool.begin(), pool.begin() + size));
      bool ok = true;
      for (Subset other : blocks) ok = ok && subset_size(blk & other) <= k - 2;
      if (ok) blocks.push_back(blk);
    }
    std::vector<Subset> bases;
    for (Subset b : uniform(k, n).bases()) {
      bool ok = true;
      for (Subset blk : blocks) ok = ok && (b & ~blk) != 0;
      if (ok) bases.push_back(b);
    }
    const Matroid m = Matroid::checked(n, bases);
    if (!is_paving(m) || connected_components(m).size() != 1) continue;
    out.push_back({"paving" + std::to_string(made++), m});
  }
  return out;
}

}  // namespace fixtures

#endif  // MCHOW_TESTS_FIXTURES_HPP_
