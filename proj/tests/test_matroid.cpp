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

#include <map>

#include "doctest.h"
#include "fixtures.hpp"
#include "mchow/matroid.hpp"

using namespace mchow;
using fixtures::rank3_n7_matroid;

namespace {

// Monotone paths between the bounding paths, counted cell by cell.
std::uint64_t count_paths(const LatticePathSpec& spec) {
  // Point (x, y): x east steps, y north steps. Allowed iff it lies weakly
  // right of the upper path and weakly left of the lower path.
  const std::string lo = spec.lower_path(), up = spec.upper_path();
  std::vector<int> lo_x(spec.k + 1, 0), up_x(spec.k + 1, 0);
  // For each height y: min x reached by the upper path, max by the lower.
  auto sweep = [](const std::string& p, std::vector<int>& xs, bool take_max) {
    int x = 0, y = 0;
    xs.assign(xs.size(), take_max ? 0 : 1 << 20);
    xs[0] = take_max ? 0 : 0;
    for (char c : p) {
      c == 'E' ? ++x : ++y;
      xs[y] = take_max ? std::max(xs[y], x) : std::min(xs[y], x);
    }
  };
  sweep(lo, lo_x, true);
  sweep(up, up_x, false);
  // x range allowed at height y: [min x of upper at y, max x of lower at y].
  std::vector<std::vector<std::uint64_t>> ways(spec.k + 1,
                                               std::vector<std::uint64_t>(spec.w + 1, 0));
  for (int y = 0; y <= spec.k; ++y) {
    for (int x = 0; x <= spec.w; ++x) {
      if (x < up_x[y] || x > lo_x[y]) continue;
      if (x == 0 && y == 0) {
        ways[y][x] = 1;
        continue;
      }
      std::uint64_t v = 0;
      if (x > 0) v += ways[y][x - 1];
      if (y > 0) v += ways[y - 1][x];
      ways[y][x] = v;
    }
  }
  return ways[spec.k][spec.w];
}

Matroid pow_par(Matroid m, int times) {
  for (int i = 0; i < times; ++i) m = parallel_ext(m);
  return m;
}

}  // namespace

TEST_CASE("rank and closure") {
  const Matroid u24 = uniform(2, 4);
  CHECK(u24.rank_of(subset_of({1})) == 1);
  CHECK(u24.rank_of(0) == 0);
  CHECK(u24.closure(subset_of({1, 2})) == u24.ground());
  const Matroid a = rank3_n7_matroid();
  CHECK(a.rank_of(subset_of({1, 2, 3, 4})) == 2);
  CHECK(a.closure(subset_of({1, 2})) == subset_of({1, 2}));
  CHECK(a.closure(subset_of({1, 3})) == subset_of({1, 2, 3, 4}));
  const auto table = rank_table(a);
  for (Subset s = 0; s <= a.ground(); ++s) CHECK(table[s] == a.rank_of(s));
}

TEST_CASE("matroid construction validates bases") {
  CHECK_THROWS(Matroid(3, {}));
  CHECK_THROWS(Matroid(3, {subset_of({1}), subset_of({1, 2})}));
  CHECK_THROWS(Matroid(2, {subset_of({3})}));
  CHECK_THROWS(Matroid::checked(4, {subset_of({1, 2}), subset_of({3, 4})}));
  CHECK_NOTHROW(Matroid::checked(4, uniform(2, 4).bases()));
}

TEST_CASE("family constructors") {
  const LatticePathSpec s = snake_spec(Composition({2, 1, 2, 3}));
  CHECK(s.upper_path() == "NENNENEEE");
  CHECK(s.lower_path() == "EENNENEEN");
  CHECK(uniform(2, 4).bases().size() == 6);
  for (int n = 2; n <= 9; ++n) {
    for (int k = 1; k < n; ++k) {
      CHECK(minimal(k, n).bases().size() == static_cast<std::size_t>(k * (n - k) + 1));
    }
  }
  CHECK_THROWS(uniform(3, 2));
  CHECK_THROWS(panhandle(3, 2, 6));
  CHECK_THROWS(panhandle(3, 6, 6));
  CHECK_THROWS(nested_from_chain({{2, 2}, {4, 2}}, 4));
  CHECK_THROWS(nested_from_chain({{3, 1}, {2, 2}}, 5));
  // Panhandle: at least k-1 elements in [h].
  const Matroid p = panhandle(3, 4, 6);
  for (Subset b : uniform(3, 6).bases()) {
    CHECK(p.is_basis(b) == (subset_size(b & subset_of({1, 2, 3, 4})) >= 2));
  }
  CHECK(panhandle(3, 5, 6) == uniform(3, 6));
  CHECK(nested_from_chain({{6, 3}}, 6) == uniform(3, 6));
  // Nested chain realization: |B ∩ [h_i]| <= r_i.
  const Matroid nm = nested_from_chain({{2, 1}, {4, 2}, {7, 3}}, 7);
  for (Subset b : uniform(3, 7).bases()) {
    const bool expect = subset_size(b & subset_of({1, 2})) <= 1 &&
                        subset_size(b & subset_of({1, 2, 3, 4})) <= 2;
    CHECK(nm.is_basis(b) == expect);
  }
  const Matroid with_coloop = nested_from_chain({{3, 1}}, 4);
  CHECK(with_coloop.coloops() == subset_of({4}));
  const Matroid with_loops = nested_from_chain({{2, 0}, {5, 2}}, 5);
  CHECK(with_loops.loops() == subset_of({1, 2}));
}

TEST_CASE("families satisfy the exchange axiom") {
  for (const auto& [name, m] : fixtures::family_corpus(8)) {
    INFO(name);
    CHECK(satisfies_exchange(m));
  }
  for (const auto& b : compositions_of(8)) CHECK(satisfies_exchange(snake(b)));
  CHECK(satisfies_exchange(uniform(4, 9)));
  for (const auto& [name, m] : fixtures::random_corpus(30, 7, 11)) CHECK(satisfies_exchange(m));
}

TEST_CASE("basis counts equal path counts") {
  for (int n = 2; n <= 9; ++n) {
    for (const auto& b : compositions_of(n - 1)) {
      const auto spec = snake_spec(b);
      CHECK(lattice_path(spec).bases().size() == count_paths(spec));
    }
  }
  std::mt19937 rng(3);
  for (int t = 0; t < 40; ++t) {
    const int k = std::uniform_int_distribution<int>(1, 4)(rng);
    const int w = std::uniform_int_distribution<int>(1, 5)(rng);
    const auto spec = fixtures::random_lattice_path(rng, k, w);
    CHECK(lattice_path(spec).bases().size() == count_paths(spec));
  }
  CHECK(lattice_path(fixtures::three_snake_spec()).bases().size() ==
        count_paths(fixtures::three_snake_spec()));
}

TEST_CASE("lattice path specs") {
  const auto f3 = fixtures::three_snake_spec();
  CHECK(f3.outer == Partition({4, 4, 4}));
  CHECK(f3.inner == Partition({3, 1}));
  CHECK(f3.connected());
  CHECK_THROWS(LatticePathSpec::from_paths("NNEE", "EENN"));
  CHECK_THROWS(LatticePathSpec::from_paths("ENE", "NE"));
  CHECK_FALSE(LatticePathSpec::from_shape(Partition({2, 1}), Partition({1})).connected());
  CHECK(snake(Composition({2, 1, 2, 3})) == lattice_path(LatticePathSpec::from_shape(
                                               Partition({5, 3, 2, 2}), Partition({2, 1, 1}))));
  // connected() agrees with the component count on every shape in a 3x3 box
  int shapes = 0;
  for (int size = 3; size <= 9; ++size) {
    for (const auto& outer : partitions_in_box(size, 3, 3)) {
      if (outer.length() != 3 || outer[0] != 3) continue;
      for (int s = 0; s < outer.size(); ++s) {
        for (const auto& inner : partitions_in_box(s, 3, 3)) {
          if (!outer.contains(inner) || inner.size() == outer.size()) continue;
          const auto spec = LatticePathSpec::from_shape(outer, inner, 3, 3);
          CHECK(spec.connected() == (connected_components(lattice_path(spec)).size() == 1));
          ++shapes;
        }
      }
    }
  }
  CHECK(shapes > 50);
}

TEST_CASE("duality, sums, loops and coloops") {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(dual(uniform(k, n)) == uniform(n - k, n));
    }
  }
  for (const auto& [name, m] : fixtures::family_corpus(7)) {
    CHECK(dual(dual(m)) == m);
    CHECK(dual(m).rank_of(m.ground()) == m.n() - m.rank());
  }
  const Matroid u12 = uniform(1, 2);
  CHECK(add_loop(u12).bases() == u12.bases());
  CHECK(add_loop(u12).loops() == element_bit(3));
  CHECK(add_coloop(u12).coloops() == element_bit(3));
  const Matroid s = direct_sum(u12, uniform(1, 1));
  CHECK(s.bases() == std::vector<Subset>{subset_of({1, 3}), subset_of({2, 3})});
  CHECK(parallel_ext(u12) == uniform(1, 3));
  CHECK(series_ext(u12) == uniform(2, 3));
  // Snakes grow by one series then repeated parallel extensions.
  for (int n = 2; n <= 8; ++n) {
    for (const auto& b : compositions_of(n)) {
      if (b.length() < 2) continue;
      std::vector<int> shorter(b.parts().begin(), b.parts().end() - 1);
      const Matroid grown =
          pow_par(series_ext(snake(Composition(shorter))), b.parts().back() - 1);
      CHECK(grown == snake(b));
    }
  }
  // Duals of snakes are snakes.
  for (int n = 2; n <= 7; ++n) {
    for (const auto& b : compositions_of(n - 1)) {
      const Matroid d = dual(snake(b));
      bool found = false;
      for (const auto& c : compositions_of(n - 1, n - b.length())) {
        if (snake(c) == d) found = true;
      }
      CHECK(found);
    }
  }
}

TEST_CASE("connected components") {
  CHECK(connected_components(uniform(2, 4)).size() == 1);
  const Matroid two = direct_sum(uniform(1, 1), uniform(1, 1));
  CHECK(connected_components(two).size() == 2);
  CHECK(connected_components(rank3_n7_matroid()).size() == 1);
  const Matroid mixed = add_coloop(add_loop(direct_sum(uniform(2, 4), uniform(1, 3))));
  const auto comps = connected_components(mixed);
  REQUIRE(comps.size() == 4);
  CHECK(comps[0] == subset_of({1, 2, 3, 4}));
  CHECK(comps[1] == subset_of({5, 6, 7}));
  CHECK(comps[2] == subset_of({8}));
  CHECK(comps[3] == subset_of({9}));
  for (const auto& b : compositions_of(6)) {
    CHECK(connected_components(snake(b)).size() == 1);
  }
}

TEST_CASE("cyclic flats") {
  const auto z = cyclic_flats(rank3_n7_matroid());
  const std::vector<FlatWithRank> expected = {
      {0, 0},
      {subset_of({1, 2}), 1},
      {subset_of({3, 4}), 1},
      {subset_of({1, 2, 3, 4}), 2},
      {subset_of({3, 4, 5, 6}), 2},
      {subset_of({1, 2, 3, 4, 5, 6, 7}), 3}};
  CHECK(z == expected);
  for (int n = 2; n <= 7; ++n) {
    for (int k = 1; k < n; ++k) {
      const auto zu = cyclic_flats(uniform(k, n));
      REQUIRE(zu.size() == 2);
      CHECK(zu[0].flat == 0);
      CHECK(zu[1].flat == full_set(n));
    }
  }
  const auto zn = cyclic_flats(nested_from_chain({{2, 1}, {4, 2}, {7, 3}}, 7));
  REQUIRE(zn.size() == 4);
  for (std::size_t i = 0; i + 1 < zn.size(); ++i) {
    CHECK((zn[i].flat & zn[i + 1].flat) == zn[i].flat);
  }
  const auto zl = cyclic_flats(add_coloop(add_loop(uniform(2, 3))));
  CHECK(zl.front().flat == element_bit(4));
  CHECK(zl.back().flat == subset_of({1, 2, 3, 4}));
}

TEST_CASE("beta invariant") {
  CHECK(beta(uniform(2, 5)) == 3);
  CHECK(beta(direct_sum(uniform(1, 1), uniform(1, 1))) == 0);
  CHECK(beta(uniform(3, 7)) == 10);
  for (int n = 2; n <= 9; ++n) {
    for (const auto& b : compositions_of(n - 1)) CHECK(beta(snake(b)) == 1);
  }
  for (const auto& [name, m] : fixtures::family_corpus(7)) {
    INFO(name);
    CHECK(beta(m) >= 0);
    if (m.n() >= 2) CHECK((beta(m) == 0) == (connected_components(m).size() > 1));
  }
}

TEST_CASE("Hampe decomposition of the rank-3 matroid on 7 elements") {
  const Matroid a = rank3_n7_matroid();
  const auto chains = cyclic_chains(a);
  REQUIRE(chains.size() == 8);
  const auto mu = chain_mobius(a);
  std::map<std::vector<Subset>, long long> by_chain;
  for (std::size_t i = 0; i < chains.size(); ++i) {
    std::vector<Subset> inner;
    for (std::size_t j = 1; j + 1 < chains[i].chain.size(); ++j) {
      inner.push_back(chains[i].chain[j].flat);
    }
    by_chain[inner] = mu[i];
  }
  const Subset f12 = subset_of({1, 2}), f34 = subset_of({3, 4}),
               f14 = subset_of({1, 2, 3, 4}), f36 = subset_of({3, 4, 5, 6});
  CHECK(by_chain[{}] == 0);
  CHECK(by_chain[{f12}] == 0);
  CHECK(by_chain[{f14}] == 1);
  CHECK(by_chain[{f34}] == 1);
  CHECK(by_chain[{f36}] == 0);
  CHECK(by_chain[{f12, f14}] == -1);
  CHECK(by_chain[{f34, f14}] == -1);
  CHECK(by_chain[{f34, f36}] == -1);

  std::map<std::vector<std::pair<int, int>>, long long> grouped;
  for (const auto& t : hampe_coefficients(a)) grouped[t.chain.profile()] += t.coefficient;
  using P = std::vector<std::pair<int, int>>;
  CHECK(grouped.size() == 3);
  CHECK(grouped[P{{0, 0}, {2, 1}, {4, 2}, {7, 3}}] == 3);
  CHECK(grouped[P{{0, 0}, {4, 2}, {7, 3}}] == -1);
  CHECK(grouped[P{{0, 0}, {2, 1}, {7, 3}}] == -1);
}

TEST_CASE("Hampe coefficients reproduce valuations") {
  const auto nested = nested_from_chain({{2, 1}, {5, 3}}, 7);
  const auto single = hampe_coefficients(nested);
  REQUIRE(single.size() == 1);
  CHECK(single[0].coefficient == 1);
  CHECK(nested_of_chain(7, nested.rank(), single[0].chain) == nested);

  auto corpus = fixtures::family_corpus(8);
  for (auto& r : fixtures::random_corpus(30, 8, 5)) corpus.push_back(r);
  for (const auto& [name, m] : corpus) {
    INFO(name);
    long long bases = 0, b = 0;
    for (const auto& t : hampe_coefficients(m)) {
      const Matroid nm = nested_of_chain(m.n(), m.rank(), t.chain);
      bases += t.coefficient * static_cast<long long>(nm.bases().size());
      b += t.coefficient * beta(nm);
    }
    CHECK(bases == static_cast<long long>(m.bases().size()));
    CHECK(b == beta(m));
  }
}

TEST_CASE("snakes inside lattice path shapes") {
  const auto f3 = snakes_in(fixtures::three_snake_spec());
  CHECK(f3 == std::vector<Composition>{Composition({2, 3, 1}), Composition({3, 2, 1}),
                                       Composition({4, 1, 1})});
  CHECK(transversal_intervals(fixtures::three_snake_spec()) ==
        std::vector<std::pair<int, int>>{{2, 4}, {5, 5}});
  for (int n = 2; n <= 8; ++n) {
    for (const auto& b : compositions_of(n - 1)) {
      CHECK(snakes_in(snake_spec(b)) == std::vector<Composition>{b});
      const auto iv = transversal_intervals(snake_spec(b));
      const auto d = descent_set(b).elements();
      REQUIRE(iv.size() == d.size());
      for (std::size_t i = 0; i < d.size(); ++i) {
        CHECK(iv[i] == std::make_pair(d[i], d[i]));
      }
    }
    for (int k = 1; k < n; ++k) {
      const auto spec = LatticePathSpec::from_paths(
          std::string(n - k, 'E') + std::string(k, 'N'),
          std::string(k, 'N') + std::string(n - k, 'E'));
      CHECK(lattice_path(spec) == uniform(k, n));
      CHECK(snakes_in(spec) == compositions_of(n - 1, k));
    }
  }
  // Snakes correspond to transversals of the interval system.
  std::mt19937 rng(9);
  for (int t = 0; t < 40; ++t) {
    const int k = std::uniform_int_distribution<int>(1, 4)(rng);
    const int w = std::uniform_int_distribution<int>(1, 5)(rng);
    const auto spec = fixtures::random_lattice_path(rng, k, w);
    const auto iv = transversal_intervals(spec);
    std::vector<std::vector<int>> expected;
    for (const auto& b : compositions_of(spec.n() - 1, k)) {
      const auto d = descent_set(b).elements();
      bool ok = true;
      for (std::size_t i = 0; i < d.size(); ++i) {
        ok = ok && iv[i].first <= d[i] && d[i] <= iv[i].second;
      }
      if (ok) expected.push_back(d);
    }
    std::vector<std::vector<int>> got;
    for (const auto& b : snakes_in(spec)) got.push_back(descent_set(b).elements());
    CHECK(got == expected);
  }
  CHECK_THROWS(snakes_in(LatticePathSpec::from_shape(Partition({2, 1}), Partition({1}))));
}

TEST_CASE("paving matroids") {
  for (int n = 2; n <= 7; ++n) {
    for (int k = 1; k < n; ++k) {
      CHECK(is_paving(uniform(k, n)));
      CHECK(paving_flat_counts(uniform(k, n)).empty());
    }
  }
  const Matroid line = fixtures::line_in_rank3();
  CHECK(is_paving(line));
  CHECK(paving_flat_counts(line) == std::map<int, int>{{3, 1}});
  CHECK(is_paving(panhandle(2, 3, 6)));
  CHECK_FALSE(is_paving(snake(Composition({2, 1, 2}))));
  // rank 2 without loops is paving
  CHECK(is_paving(direct_sum(uniform(1, 2), uniform(1, 3))));
}
