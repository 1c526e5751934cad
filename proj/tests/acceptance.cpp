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

// Acceptance suite: one PASS/FAIL line per criterion, with wall time against
// its budget. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "fixtures.hpp"
#include "mchow/chow.hpp"
#include "mchow/kclass.hpp"
#include "mchow/symfunc.hpp"
#include "mchow/tableaux.hpp"

using namespace mchow;

namespace {

// Collects the first few failure notes of a criterion.
struct Check {
  int failures = 0;
  std::int64_t checks = 0;
  std::ostringstream notes;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ < 3) notes << " [" << what << "]";
  }
};

SchurExpansion terms(std::initializer_list<std::pair<Partition, int>> list) {
  SchurExpansion e;
  for (const auto& [p, c] : list) e.add(p, c);
  return e;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

std::uint64_t transversal_permutations(const std::vector<std::pair<int, int>>& iv, int n) {
  const auto hist = permutation_descent_histogram(n - 1);
  std::uint64_t total = 0;
  for (std::size_t mask = 0; mask < hist.size(); ++mask) {
    std::vector<int> des;
    for (int i = 1; i < n - 1; ++i) {
      if (mask & (std::size_t{1} << (i - 1))) des.push_back(i);
    }
    if (des.size() != iv.size()) continue;
    bool ok = true;
    for (std::size_t j = 0; j < des.size(); ++j) {
      ok = ok && iv[j].first <= des[j] && des[j] <= iv[j].second;
    }
    if (ok) total += hist[mask];
  }
  return total;
}

void criterion1(Check& c) {
  const ChowClass u = sc_general(uniform(2, 5));
  c.expect(u.coeffs == terms({{{2}, 3}, {{1, 1}, 1}}), "sc_general " + u.coeffs.to_string());
  c.expect(sc_uniform(2, 5) == u, "sc_uniform");
  c.expect(u.m == 2 && u.k == 2 && u.n == 5, "degree");
}

void criterion2(Check& c) {
  const SchurExpansion expected = terms({{{5, 2, 1}, 1},
                                         {{5, 1, 1, 1}, 1},
                                         {{4, 3, 1}, 1},
                                         {{4, 2, 2}, 1},
                                         {{4, 2, 1, 1}, 2},
                                         {{3, 3, 1, 1}, 1},
                                         {{3, 2, 2, 1}, 1}});
  const Composition b{2, 1, 2, 3};
  for (auto [route, name] : std::vector<std::pair<SnakeRoute, const char*>>{
           {SnakeRoute::kJacobiTrudi, "ribbon determinant"},
           {SnakeRoute::kSkewSchur, "skew Schur"},
           {SnakeRoute::kSytDescents, "SYT descents"},
           {SnakeRoute::kRecursion, "recursion"}}) {
    c.expect(sc_snake(b, route).dual() == expected, name);
  }
  c.expect(sc_general(snake(b)).dual() == expected, "general pipeline");
}

void criterion3(Check& c) {
  const Matroid m = fixtures::rank3_n7_matroid();
  const auto summands = nested_summands(m);
  std::vector<long long> coeffs;
  for (const auto& s : summands) coeffs.push_back(s.coefficient);
  std::vector<long long> sorted = coeffs;
  std::sort(sorted.begin(), sorted.end());
  c.expect(sorted == std::vector<long long>{-1, -1, 3}, "coefficients");
  const std::vector<std::pair<std::vector<std::pair<int, int>>, SchurExpansion>> displays = {
      {{{0, 0}, {2, 1}, {4, 2}, {7, 3}},
       terms({{{4, 2}, 3}, {{3, 3}, 5}, {{4, 1, 1}, 2}, {{3, 2, 1}, 5}, {{2, 2, 2}, 1}})},
      {{{0, 0}, {4, 2}, {7, 3}},
       terms({{{4, 2}, 5}, {{3, 3}, 7}, {{4, 1, 1}, 3}, {{3, 2, 1}, 6}, {{2, 2, 2}, 1}})},
      {{{0, 0}, {2, 1}, {7, 3}},
       terms({{{4, 2}, 3}, {{3, 3}, 6}, {{4, 1, 1}, 2}, {{3, 2, 1}, 6}, {{2, 2, 2}, 1}})}};
  for (const auto& [profile, cls] : displays) {
    bool found = false;
    for (const auto& s : summands) {
      if (s.profile == profile) {
        found = true;
        c.expect(s.cls.coeffs == cls, "nested class " + s.cls.coeffs.to_string());
        c.expect(s.coefficient == (profile.size() == 4 ? 3 : -1), "coefficient per chain");
      }
    }
    c.expect(found, "chain present");
  }
  c.expect(sc_general(m).coeffs ==
               terms({{{4, 2}, 1}, {{3, 3}, 2}, {{4, 1, 1}, 1}, {{3, 2, 1}, 3}, {{2, 2, 2}, 1}}),
           "final class");
}

void criterion4(Check& c) {
  int count = 0;
  for (int size = 1; size <= 9; ++size) {
    const auto shapes = partitions_of(size);
    for (const auto& b : compositions_of(size)) {
      ++count;
      const SchurExpansion jt = jacobi_trudi_ribbon(b);
      SchurExpansion syt;
      for (const auto& eta : shapes) {
        const auto k = count_syt_with_descents(eta, descent_set(b));
        if (k != 0) syt.add(eta, Integer(k));
      }
      c.expect(jt == skew_schur(ribbon_from_composition(b)), "skew " + join(b.parts()));
      c.expect(jt == syt, "SYT " + join(b.parts()));
      if (size <= 8) c.expect(jt == ribbon_schur_alternating(b), "alternating " + join(b.parts()));
    }
  }
  c.expect(count == 511, "composition count");
}

void criterion5(Check& c) {
  std::vector<fixtures::Named> list;
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) list.push_back({"U" + std::to_string(k) + "," + std::to_string(n), uniform(k, n)});
    if (n >= 2) {
      for (const auto& b : compositions_of(n - 1)) list.push_back({"S" + join(b.parts()), snake(b)});
    }
  }
  list.push_back({"three-snake lpm", lattice_path(fixtures::three_snake_spec())});
  list.push_back({"rank3 n7", fixtures::rank3_n7_matroid()});
  list.push_back({"U3,7", uniform(3, 7)});
  for (const auto& [name, m] : list) c.expect(chow_from_k(m) == sc_general(m), name);
}

void criterion6(Check& c) {
  for (const Matroid& m : {uniform(1, 2), uniform(2, 4), snake(Composition({2, 1}))}) {
    c.expect(verify_parext(m), "parallel extension");
    c.expect(verify_serext(m), "series extension");
    c.expect(verify_add_loop(m), "added loop");
  }
  for (auto [k, b] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}, {3, 2}}) {
    c.expect(verify_last_step(k, b), "last step " + std::to_string(k) + "," + std::to_string(b));
  }
  for (int size = 1; size <= 7; ++size) {
    for (const auto& b : compositions_of(size)) {
      for (int p = 1; p <= 2; ++p) c.expect(check_main_identity(snake(b), p), "snake " + join(b.parts()));
    }
  }
  for (int p = 1; p <= 3; ++p) c.expect(check_main_identity(uniform(2, 4), p), "U2,4");
}

void criterion7(Check& c) {
  auto corpus = fixtures::family_corpus(8);
  for (auto& r : fixtures::random_corpus(30, 8, 7)) corpus.push_back(r);
  for (auto& r : fixtures::paving_corpus(10, 8, 3)) corpus.push_back(r);
  for (const auto& [name, m] : corpus) c.expect(beta_from_chow(sc_general(m)) == beta(m), name);
  c.expect(beta(uniform(2, 5)) == 3 && beta_from_chow(sc_uniform(2, 5)) == 3, "U2,5");
  for (int size = 1; size <= 7; ++size) {
    for (const auto& b : compositions_of(size)) {
      c.expect(beta(snake(b)) == 1 && beta_from_chow(sc_snake(b)) == 1, "snake " + join(b.parts()));
    }
  }
}

void criterion8(Check& c) {
  for (int n = 2; n <= 9; ++n) {
    const int m = n - 1;
    const auto hist = permutation_descent_histogram(m);
    for (std::size_t mask = 0; mask < hist.size(); ++mask) {
      std::vector<int> d;
      for (int i = 1; i <= n - 2; ++i) {
        if (mask & (std::size_t{1} << (i - 1))) d.push_back(i);
      }
      c.expect(gessel_viennot(DescentSet(d, n - 2), n) == hist[mask],
               "n=" + std::to_string(n) + " D={" + join(d) + "}");
    }
  }
}

void criterion9(Check& c) {
  for (int size = 1; size <= 8; ++size) {
    const auto hist = permutation_descent_histogram(size);
    for (const auto& b : compositions_of(size)) {
      std::size_t mask = 0;
      for (int x : descent_set(b).elements()) mask |= std::size_t{1} << (x - 1);
      c.expect(volume_from_chow(sc_snake(b)) == hist[mask], "snake " + join(b.parts()));
    }
  }
  std::mt19937 rng(41);
  for (int t = 0; t < 10; ++t) {
    const int n = std::uniform_int_distribution<int>(4, 9)(rng);
    const int k = std::uniform_int_distribution<int>(1, n - 1)(rng);
    const auto spec = fixtures::random_lattice_path(rng, k, n - k);
    const auto brute = transversal_permutations(transversal_intervals(spec), spec.n());
    c.expect(volume_from_chow(sc_lattice_path(spec)) == brute, "lattice path");
    c.expect(volume_from_chow(sc_general(lattice_path(spec))) == brute, "lattice path, general");
  }
  for (int n = 2; n <= 9; ++n) {
    for (int k = 1; k <= 4 && k < n; ++k) {
      c.expect(volume_from_chow(sc_general(minimal(k, n))) == binomial(n - 2, k - 1),
               "minimal " + std::to_string(k) + "," + std::to_string(n));
    }
  }
}

void criterion10(Check& c) {
  auto corpus = fixtures::family_corpus(7);
  for (auto& r : fixtures::random_corpus(20, 7, 19)) corpus.push_back(r);
  for (const auto& [name, m] : corpus) {
    c.expect(transform_dual_matroid(sc_general(m)) == sc_general(dual(m)), name);
  }
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 5}, {3, 6}, {2, 6}, {3, 7}}) {
    c.expect(check_product_identities(k, n), "products " + std::to_string(k) + "," + std::to_string(n));
  }
}

void criterion11(Check& c) {
  for (int size = 1; size <= 9; ++size) {
    for (const auto& b : compositions_of(size)) c.expect(check_support_bounds(b), "snake " + join(b.parts()));
  }
  auto absent = [](const Composition& b, const Partition& p) {
    const auto s = support_of(sc_snake(b));
    return std::find(s.begin(), s.end(), p) == s.end();
  };
  c.expect(absent(Composition({1, 2, 3}), Partition({3, 3})), "[3,3] in S(1,2,3)");
  c.expect(absent(Composition({2, 1, 5, 1}), Partition({3, 3, 3})), "[3,3,3] in S(2,1,5,1)");
  c.expect(absent(Composition({2, 1, 5, 1}), Partition({3, 2, 2, 2})), "[3,2,2,2] in S(2,1,5,1)");
}

void criterion12(Check& c) {
  for (int n = 4; n <= 10; ++n) {
    for (int k = 2; k <= 5 && k < n - 1; ++k) {
      const SchurExpansion u = sc_uniform(k, n).dual();
      for (int m = 0; m <= k - 2 && m + 1 <= n - k; ++m) {
        const Partition eta = eta_m(k, n, m);
        c.expect(u.coefficient(eta) == closed_form_uniform(k, n, m), "uniform");
        for (int h = k; h < n; ++h) {
          c.expect(sc_general(panhandle(k, h, n)).dual().coefficient(eta) ==
                       closed_form_panhandle(k, h, n, m),
                   "panhandle " + std::to_string(k) + "," + std::to_string(h) + "," + std::to_string(n));
        }
      }
    }
  }
  c.expect(closed_form_uniform(3, 7, 0) == 10, "U3,7 closed form");
  c.expect(sc_uniform(3, 7).dual().coefficient(eta_m(3, 7, 0)) == 10, "U3,7 class");
  for (const auto& [name, m] : fixtures::paving_corpus(25, 9, 5)) {
    const int k = m.rank(), n = m.n();
    const SchurExpansion d = sc_general(m).dual();
    for (int deg = 0; deg <= k - 2 && deg + 1 <= n - k; ++deg) {
      const Integer p = paving_schubert(m, deg);
      c.expect(p > 0, name + " positive");
      c.expect(p == d.coefficient(eta_m(k, n, deg)), name + " vs pipeline");
    }
  }
}

void criterion13(Check& c) {
  auto corpus = fixtures::family_corpus(9);
  for (auto& r : fixtures::paving_corpus(10, 9, 13)) corpus.push_back(r);
  const auto randoms = fixtures::random_corpus(50, 7, 2026);
  for (auto& r : randoms) corpus.push_back(r);
  for (const auto& [name, m] : corpus) {
    for (const auto& [eta, x] : sc_general(m).coeffs.terms()) c.expect(x >= 0, name);
  }
  c.expect(randoms.size() == 50, "random count");
}

}  // namespace

int main() {
  const std::vector<std::tuple<int, std::string, double, std::function<void(Check&)>>> criteria = {
      {1, "U(2,5) class", 1, criterion1},
      {2, "S(2,1,2,3) dual class by all snake routes", 1, criterion2},
      {3, "decomposition of the rank-3 matroid on 7 elements", 5, criterion3},
      {4, "ribbon Schur triple agreement, compositions up to size 9", 120, criterion4},
      {5, "K-class oracle equals the combinatorial pipeline", 180, criterion5},
      {6, "extension, last-step and series/parallel identities", 120, criterion6},
      {7, "beta from the class equals the rank-sum beta", 60, criterion7},
      {8, "binomial determinant equals brute-force descent counts", 120, criterion8},
      {9, "volume equals permutation counts", 180, criterion9},
      {10, "duality and product identities", 120, criterion10},
      {11, "support bounds of snake classes", 60, criterion11},
      {12, "paving closed forms and positivity", 120, criterion12},
      {13, "nonnegativity over the corpus", 600, criterion13},
  };
  int failed = 0;
  for (const auto& [id, name, budget, fn] : criteria) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < budget;
    const bool ok = c.failures == 0 && in_time && c.checks > 0;
    if (!ok) ++failed;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << std::setw(2) << id << ": " << name
              << " (" << c.checks << " checks, " << std::fixed << std::setprecision(2) << secs
              << " s, budget " << std::setprecision(0) << budget << " s)";
    if (c.failures) std::cout << " " << c.failures << " failures:" << c.notes.str();
    if (!in_time) std::cout << " over budget";
    std::cout << "\n" << std::flush;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << "\n";
  return failed == 0 ? 0 : 1;
}
