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

#include "mchow/chow.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "mchow/tableaux.hpp"

namespace mchow {

namespace {

SchurExpansion bounded(int k, int w) {
  SchurExpansion e;
  e.set_bound(k, w);
  return e;
}

// Dual expansion of a connected matroid of rank k on [n] from a per-shape count.
template <class F>
SchurExpansion count_dual(int k, int n, F&& count) {
  SchurExpansion dual = bounded(k, n - k);
  for (const auto& eta : partitions_in_box(n - 1, k, n - k)) {
    const Integer c = count(eta);
    if (c != 0) dual.add(eta, c);
  }
  return dual;
}

Matroid parallel_times(Matroid m, int times) {
  for (int i = 0; i < times; ++i) m = parallel_ext(m);
  return m;
}

// Dual class of a connected matroid with at least two elements.
SchurExpansion connected_dual(const Matroid& m) {
  SchurExpansion dual = bounded(m.rank(), m.n() - m.rank());
  for (const auto& s : nested_summands(m)) dual += s.cls.dual() * Integer(s.coefficient);
  return dual;
}

}  // namespace

std::vector<NestedSummand> nested_summands(const Matroid& m) {
  if (m.n() < 2 || connected_components(m).size() != 1) {
    throw std::invalid_argument("nested_summands needs a connected matroid on >= 2 elements");
  }
  std::map<std::vector<std::pair<int, int>>, long long> grouped;
  for (const auto& t : hampe_coefficients(m)) grouped[t.chain.profile()] += t.coefficient;
  std::vector<NestedSummand> out;
  for (const auto& [profile, c] : grouped) {
    if (c != 0) out.push_back({profile, c, sc_nested(profile, m.n())});
  }
  return out;
}

SchurExpansion ChowClass::dual() const {
  SchurExpansion d = bounded(k, width());
  for (const auto& [eta, c] : coeffs.terms()) d.add(complement(eta, k, width()), c);
  return d;
}

ChowClass ChowClass::from_dual(int k, int n, int m, const SchurExpansion& dual) {
  ChowClass out{k, n, m, bounded(k, n - k)};
  for (const auto& [eta, c] : dual.terms()) {
    if (!eta.fits_in(k, n - k)) continue;
    if (eta.size() != k * (n - k) - m) {
      throw std::logic_error("dual term " + eta.to_string() + " has the wrong degree");
    }
    out.coeffs.add(complement(eta, k, n - k), c);
  }
  return out;
}

int chow_degree(int k, int n, int components) { return k * (n - k) - (n - components); }

ChowClass sc_snake(const Composition& b, SnakeRoute route) {
  if (b.empty()) throw std::invalid_argument("snake needs a nonempty composition");
  const int k = b.length();
  const int n = b.size() + 1;
  SchurExpansion dual;
  switch (route) {
    case SnakeRoute::kJacobiTrudi:
      dual = jacobi_trudi_ribbon(b);
      break;
    case SnakeRoute::kSkewSchur:
      dual = skew_schur(ribbon_from_composition(b));
      break;
    case SnakeRoute::kRecursion:
      dual = ribbon_schur_recursive(b);
      break;
    case SnakeRoute::kSytDescents: {
      const DescentSet des = descent_set(b);
      dual = count_dual(k, n, [&](const Partition& eta) {
        return Integer(count_syt_with_descents(eta, des));
      });
      break;
    }
  }
  return ChowClass::from_dual(k, n, chow_degree(k, n, 1), dual);
}

ChowClass sc_lattice_path(const LatticePathSpec& spec, LatticeRoute route) {
  if (!spec.connected()) throw std::invalid_argument("lattice path spec is not connected");
  const int k = spec.k;
  const int n = spec.n();
  SchurExpansion dual = bounded(k, n - k);
  if (route == LatticeRoute::kSnakeSum) {
    for (const auto& b : snakes_in(spec)) dual += sc_snake(b, SnakeRoute::kSytDescents).dual();
  } else {
    const auto intervals = transversal_intervals(spec);
    dual = count_dual(k, n, [&](const Partition& eta) {
      return Integer(count_syt_transversal(eta, intervals));
    });
  }
  return ChowClass::from_dual(k, n, chow_degree(k, n, 1), dual);
}

ChowClass sc_nested(const std::vector<std::pair<int, int>>& chain, int n) {
  validate_nested_chain(chain, n);
  std::vector<std::pair<int, int>> c = chain;
  if (!c.empty() && c.front() == std::make_pair(0, 0)) c.erase(c.begin());
  if (c.empty() || c.front().second == 0 || c.back().first != n) {
    throw std::invalid_argument("nested chain does not describe a connected matroid");
  }
  const int k = c.back().second;
  if (k == n) throw std::invalid_argument("nested chain does not describe a connected matroid");
  std::vector<DescentCap> caps;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) caps.push_back({c[i].first, c[i].second - 1});
  const SchurExpansion dual = count_dual(k, n, [&](const Partition& eta) {
    return Integer(count_syt_with_caps(eta, k - 1, caps));
  });
  return ChowClass::from_dual(k, n, chow_degree(k, n, 1), dual);
}

ChowClass sc_uniform(int k, int n) {
  if (k <= 0 || k >= n) throw std::invalid_argument("sc_uniform needs 0 < k < n");
  const SchurExpansion dual = count_dual(k, n, [&](const Partition& eta) {
    return Integer(count_syt_with_num_descents(eta, k - 1));
  });
  return ChowClass::from_dual(k, n, chow_degree(k, n, 1), dual);
}

ChowClass sc_general(const Matroid& m) {
  const int k = m.rank();
  const int n = m.n();
  const auto comps = connected_components(m);
  SchurExpansion dual = SchurExpansion::one();
  for (Subset c : comps) {
    if (subset_size(c) < 2) continue;  // loops and coloops leave the dual class alone
    const SchurExpansion part = connected_dual(restriction(m, c));
    dual = schur_multiply(dual, part);
    dual.set_bound(k, n - k);
  }
  return ChowClass::from_dual(k, n, chow_degree(k, n, static_cast<int>(comps.size())), dual);
}

ChowClass poincare_dual(const ChowClass& c) {
  ChowClass out{c.k, c.n, c.k * c.width() - c.m, c.dual()};
  return out;
}

ChowClass transform_dual_matroid(const ChowClass& c) {
  ChowClass out{c.width(), c.n, c.m, bounded(c.width(), c.k)};
  for (const auto& [eta, x] : c.coeffs.terms()) out.coeffs.add(transpose(eta), x);
  return out;
}

Partition hook_partition(int k, int n) {
  if (k < 1 || k > n) throw std::invalid_argument("hook needs 1 <= k <= n");
  std::vector<int> h(k, 1);
  h[0] = n - k;
  return Partition(std::move(h));
}

Integer beta_from_chow(const ChowClass& c) {
  if (c.k == 0 || c.m != chow_degree(c.k, c.n, 1)) return 0;
  return c.coeffs.coefficient(complement(hook_partition(c.k, c.n), c.k, c.width()));
}

Integer volume_from_chow(const ChowClass& c) {
  Integer v = 0;
  for (const auto& [eta, x] : c.coeffs.terms()) {
    v += hook_length_count(complement(eta, c.k, c.width())) * x;
  }
  return v;
}

std::vector<Partition> support_of(const ChowClass& c) {
  std::vector<Partition> out;
  for (const auto& [eta, x] : c.dual().terms()) {
    if (x != 0) out.push_back(eta);
  }
  return out;
}

bool check_support_bounds(const Composition& b) {
  const ChowClass c = sc_snake(b);
  const int k = c.k, w = c.width();
  const Partition lambda = ribbon_from_composition(b).outer();
  const Partition lambda_rev = ribbon_from_composition(reversed(b)).outer();
  const auto [rows, cols] = rows_cols(b);
  const Partition cols_t = transpose(cols);
  const auto supp = support_of(c);
  for (const auto& eta : supp) {
    if (!lambda.contains(eta) || !lambda_rev.contains(eta)) return false;
    if (!dominance_leq(rows, eta) || !dominance_leq(eta, cols_t)) return false;
  }
  auto in_support = [&](const Partition& eta) {
    return std::find(supp.begin(), supp.end(), eta) != supp.end();
  };
  for (const auto& eta : partitions_in_box(c.n - 1, k, w)) {
    if (eta.length() == k && in_support(eta) != dominance_leq(rows, eta)) return false;
    if (eta[0] == w && in_support(eta) != dominance_leq(eta, cols_t)) return false;
  }
  return true;
}

Partition eta_m(int k, int n, int m) {
  if (k < 2 || m < 0 || m > k - 2 || n - k < m + 1) {
    throw std::invalid_argument("eta(m) needs k >= 2, 0 <= m <= k-2 and m+1 <= n-k");
  }
  std::vector<int> p{n - k, m + 1};
  p.resize(k - m, 1);
  return Partition(std::move(p));
}

namespace {

Integer exact_quotient(const Integer& num, const Integer& den) {
  if (den == 0 || num % den != 0) throw std::logic_error("closed form is not integral");
  return num / den;
}

}  // namespace

Integer closed_form_uniform(int k, int n, int m) {
  eta_m(k, n, m);
  return exact_quotient(Integer(n - k) * binomial(n - m - 2, n - k) * binomial(n - k - 1, m),
                        Integer(k - 1));
}

Integer closed_form_uniform_transposed(int k, int n, int m) {
  eta_m(n - k, n, m);
  return exact_quotient(Integer(k) * binomial(n - m - 2, k) * binomial(k - 1, m),
                        Integer(n - k - 1));
}

Integer closed_form_panhandle(int k, int h, int n, int m) {
  eta_m(k, n, m);
  if (h < k || h >= n) throw std::invalid_argument("panhandle needs k <= h < n");
  if (m > h - k) return 0;
  return exact_quotient(
      Integer(h - k + 1) * binomial(h - m - 1, h - k + 1) * binomial(h - k, m), Integer(k - 1));
}

Integer paving_schubert(const Matroid& m, int deg) {
  if (!is_paving(m)) throw std::invalid_argument("paving_schubert needs a paving matroid");
  if (connected_components(m).size() != 1) {
    throw std::invalid_argument("paving_schubert needs a connected matroid");
  }
  const int k = m.rank(), n = m.n();
  Integer d = closed_form_uniform(k, n, deg);
  for (const auto& [h, count] : paving_flat_counts(m)) {
    d -= Integer(count) * closed_form_panhandle(k, h, n, deg);
  }
  return d;
}

bool check_main_identity(const Matroid& m, int b) {
  if (b < 1) throw std::invalid_argument("check_main_identity needs b >= 1");
  const ChowClass lhs1 = sc_general(add_loop(parallel_times(series_ext(m), b - 1)));
  const ChowClass lhs2 = sc_general(add_coloop(parallel_times(m, b)));
  Matroid padded = add_coloop(m);
  for (int i = 0; i < b; ++i) padded = add_loop(padded);
  const ChowClass big = sc_general(padded);
  SchurExpansion rhs = rmv(big.coeffs, b);
  rhs.set_bound(lhs1.k, lhs1.width());
  if (lhs1.k != lhs2.k || lhs1.n != lhs2.n) return false;
  return lhs1.coeffs + lhs2.coeffs == rhs;
}

bool check_product_identities(int k, int n) {
  if (k < 1 || k >= n) throw std::invalid_argument("check_product_identities needs 0 < k < n");
  SchurExpansion total = bounded(k, n - k);
  for (int s = 0; s <= (k - 1) * (n - k - 1); ++s) {
    for (const auto& mu : partitions_in_box(s, k - 1, n - k - 1)) {
      std::vector<int> lam(k);
      lam[0] = n - k;
      for (int i = 1; i < k; ++i) lam[i] = mu[i - 1] + 1;
      const Partition lambda(lam);
      const Composition b = composition_from_ribbon(SkewShape(lambda, mu));
      SchurExpansion prod = schur_multiply(SchurExpansion::schur(mu),
                                           SchurExpansion::schur(complement(lambda, k, n - k)));
      prod.set_bound(k, n - k);
      if (sc_snake(b).coeffs != prod) return false;
      total += prod;
    }
  }
  return total == sc_uniform(k, n).coeffs;
}

ConjectureCheck check_beta_volume_conjecture(const Matroid& m) {
  if (connected_components(m).size() != 1 || m.n() < 2) {
    throw std::invalid_argument("the conjecture is stated for connected matroids");
  }
  ConjectureCheck r;
  r.lhs = Integer(beta(m)) * binomial(m.n() - 2, m.rank() - 1);
  r.volume = volume_from_chow(sc_general(m));
  r.holds = r.lhs <= r.volume;
  r.equality = r.lhs == r.volume;
  return r;
}

}  // namespace mchow
