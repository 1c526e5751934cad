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

#include "mchow/kclass.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "mchow/tableaux.hpp"

namespace mchow {

namespace {

void check_bound(const Matroid& m, int max_n) {
  if (m.n() > max_n) {
    throw OracleBoundError("ground set of size " + std::to_string(m.n()) +
                           " exceeds the oracle bound " + std::to_string(max_n));
  }
}

// sign * t_a / (t_a - t_x) times the full product over S, as a numerator
// over D_{S+x}: sign * t_a * prod_{y in S, y != a} (t_min - t_max)
KPolynomial step_factor(const KPolynomial& p, Subset s, int a, int x) {
  KPolynomial r = p;
  for (int y : subset_elements(s)) {
    if (y != a) r = r.times_difference(std::min(x, y), std::max(x, y));
  }
  std::vector<int> e(p.k() + p.n(), 0);
  e[p.k() + a - 1] = 1;
  r = r.shifted(e);
  return a < x ? r : r * -1;
}

KPolynomial divide_vandermonde(KPolynomial p) {
  for (int a = 1; a <= p.n(); ++a) {
    for (int b = a + 1; b <= p.n(); ++b) p = p.divide_difference(a, b);
  }
  return p;
}

}  // namespace

Subset lex_first_basis(const Matroid& m, const std::vector<int>& order) {
  Subset b = 0;
  int r = 0;
  for (int e : order) {
    if (m.rank_of(b | element_bit(e)) > r) {
      b |= element_bit(e);
      ++r;
    }
  }
  return b;
}

KPolynomial q_factor(int k, int n, int j) {
  KPolynomial q = KPolynomial::constant(k, n, 1);
  for (int i = 1; i <= k; ++i) {
    q = q * (KPolynomial::constant(k, n, 1) - KPolynomial::u(k, n, i) * KPolynomial::t(k, n, j));
  }
  return q;
}

KPolynomial kclass_of(const Matroid& m, int max_n) {
  check_bound(m, max_n);
  const int k = m.rank(), n = m.n();
  if (n == 0) return KPolynomial::constant(k, n, 1);
  const auto rank = rank_table(m);
  std::vector<KPolynomial> q;
  for (int j = 1; j <= n; ++j) q.push_back(q_factor(k, n, j));
  // layer[S] maps last element -> numerator over D_S
  std::map<Subset, std::map<int, KPolynomial>> layer;
  for (int a = 1; a <= n; ++a) {
    KPolynomial one = KPolynomial::constant(k, n, 1);
    layer[element_bit(a)].emplace(a, rank[element_bit(a)] == 0 ? q[a - 1] : one);
  }
  for (int size = 1; size < n; ++size) {
    std::map<Subset, std::map<int, KPolynomial>> next;
    for (const auto& [s, by_last] : layer) {
      for (int x = 1; x <= n; ++x) {
        if (s & element_bit(x)) continue;
        KPolynomial acc(k, n);
        for (const auto& [a, num] : by_last) acc += step_factor(num, s, a, x);
        if (acc.is_zero()) continue;
        const Subset sx = s | element_bit(x);
        if (rank[sx] == rank[s]) acc = acc * q[x - 1];
        auto& slot = next[sx];
        auto it = slot.find(x);
        if (it == slot.end()) {
          slot.emplace(x, std::move(acc));
        } else {
          it->second += acc;
        }
      }
    }
    layer = std::move(next);
  }
  KPolynomial total(k, n);
  for (const auto& [a, num] : layer.begin()->second) total += num;
  return divide_vandermonde(std::move(total));
}

KPolynomial kclass_streamed(const Matroid& m, int max_n) {
  check_bound(m, max_n);
  const int k = m.rank(), n = m.n();
  if (n == 0) return KPolynomial::constant(k, n, 1);
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::map<Subset, KPolynomial> numerators;
  do {
    // prod t_{w_l} / (t_{w_l} - t_{w_{l+1}}) written over D = prod_{a<b}(t_a - t_b)
    KPolynomial term = KPolynomial::constant(k, n, 1);
    std::vector<int> e(k + n, 0);
    long long sign = 1;
    std::vector<std::vector<bool>> adjacent(n + 1, std::vector<bool>(n + 1, false));
    for (int l = 0; l + 1 < n; ++l) {
      e[k + w[l] - 1] += 1;
      adjacent[w[l]][w[l + 1]] = adjacent[w[l + 1]][w[l]] = true;
      if (w[l] > w[l + 1]) sign = -sign;
    }
    term = term.shifted(e);
    for (int a = 1; a <= n; ++a) {
      for (int b = a + 1; b <= n; ++b) {
        if (!adjacent[a][b]) term = term.times_difference(a, b);
      }
    }
    const Subset basis = lex_first_basis(m, w);
    auto it = numerators.find(basis);
    if (it == numerators.end()) {
      numerators.emplace(basis, term * sign);
    } else {
      it->second += term * sign;
    }
  } while (std::next_permutation(w.begin(), w.end()));
  KPolynomial total(k, n);
  for (const auto& [basis, num] : numerators) {
    KPolynomial part = num;
    for (int j = 1; j <= n; ++j) {
      if (!(basis & element_bit(j))) part = part * q_factor(k, n, j);
    }
    total += part;
  }
  return divide_vandermonde(std::move(total));
}

KPolynomial ktosc(const KPolynomial& p) {
  if (p.is_zero()) return p;
  const int vars = p.k() + p.n();
  const int top = p.max_degree();
  for (int d = 0; d <= top; ++d) {
    KPolynomial out(p.k(), p.n());
    std::vector<int> pick(vars, 0);
    for (const auto& [key, c] : p.raw()) {
      const std::vector<int> e = p.exponents(key);
      std::vector<int> suffix(vars + 1, 0);
      for (int v = vars - 1; v >= 0; --v) suffix[v] = suffix[v + 1] + e[v];
      if (suffix[0] < d) continue;
      // (1 - x)^e contributes binom(e, j) (-1)^j x^j; collect total degree d.
      std::function<void(int, int, long long)> rec = [&](int v, int left, long long coeff) {
        if (v == vars) {
          if (left == 0) out.add_term(pick, coeff);
          return;
        }
        if (suffix[v] < left) return;
        for (int j = 0; j <= std::min(e[v], left); ++j) {
          pick[v] = j;
          long long b = static_cast<long long>(binomial(e[v], j));
          if (j % 2) b = -b;
          rec(v + 1, left - j, coeff * b);
        }
        pick[v] = 0;
      };
      rec(0, d, c);
    }
    if (!out.is_zero()) return out;
  }
  throw std::logic_error("substituted polynomial vanished");
}

KPolynomial schur_polynomial(const Partition& lambda, int vars) {
  KPolynomial s(vars, 0);
  if (lambda.length() > vars) return s;
  const int size = lambda.size();
  std::vector<int> content(vars, 0);
  std::function<void(int, int)> rec = [&](int v, int left) {
    if (v == vars - 1) {
      content[v] = left;
      const auto c = kostka(lambda, content);
      if (c != 0) s.add_term(content, static_cast<long long>(c));
      return;
    }
    for (int x = 0; x <= left; ++x) {
      content[v] = x;
      rec(v + 1, left - x);
    }
  };
  if (vars == 0) return size == 0 ? KPolynomial::constant(0, 0, 1) : s;
  rec(0, size);
  return s;
}

SchurExpansion schur_expand_u(const KPolynomial& p) {
  if (p.t_zero() != p) throw std::logic_error("polynomial still contains t variables");
  if (!p.symmetric_in_u()) throw std::logic_error("polynomial is not symmetric in u");
  const int k = p.k();
  KPolynomial rest = p.embed(k, 0);
  SchurExpansion out;
  while (!rest.is_zero()) {
    const auto lead = rest.sorted_terms().front();
    const std::vector<int>& alpha = lead.first;
    if (!std::is_sorted(alpha.begin(), alpha.end(), std::greater<>())) {
      throw std::logic_error("leading exponent is not a partition");
    }
    const Partition lambda(alpha);
    out.add(lambda, lead.second);
    rest -= schur_polynomial(lambda, k) * lead.second;
  }
  return out;
}

ChowClass chow_from_k(const Matroid& m, int max_n) {
  check_bound(m, max_n);
  const int k = m.rank(), n = m.n();
  const KPolynomial phi = ktosc(kclass_of(m, max_n));
  const int degree = phi.min_degree();
  const int kappa = static_cast<int>(connected_components(m).size());
  if (degree != chow_degree(k, n, kappa)) {
    throw std::logic_error("lowest degree " + std::to_string(degree) +
                           " does not match the expected codimension");
  }
  ChowClass c{k, n, degree, schur_expand_u(phi.t_zero().embed(k, n))};
  c.coeffs.set_bound(k, n - k);
  return c;
}

KPolynomial tau(const KPolynomial& p, int i) { return p.swap_t(i, i + 1); }

KPolynomial delta(const KPolynomial& p, int i) {
  const int k = p.k(), n = p.n();
  const KPolynomial num =
      KPolynomial::t(k, n, i) * p - KPolynomial::t(k, n, i + 1) * tau(p, i);
  return num.divide_difference(i, i + 1);
}

KPolynomial partial(const KPolynomial& p, int i) {
  return (p - tau(p, i)).divide_difference(i, i + 1);
}

bool verify_parext(const Matroid& m, int max_n) {
  const int n = m.n();
  return kclass_of(parallel_ext(m), max_n) == delta(kclass_of(add_loop(m), max_n), n);
}

bool verify_serext(const Matroid& m, int max_n) {
  const int n = m.n();
  return kclass_of(series_ext(m), max_n) ==
         delta(tau(kclass_of(add_coloop(m), max_n), n), n);
}

bool verify_add_loop(const Matroid& m, int max_n) {
  const int k = m.rank(), n = m.n();
  return kclass_of(add_loop(m), max_n) ==
         kclass_of(m, max_n).embed(k, n + 1) * q_factor(k, n + 1, n + 1);
}

bool verify_last_step(int k, int b) {
  if (k < 1 || b < 1) throw std::invalid_argument("verify_last_step needs k, b >= 1");
  const int u = k + 1, t = b + 1;
  KPolynomial f = KPolynomial::constant(u, t, 1);
  for (int j = 2; j <= b + 1; ++j) {
    for (int i = 1; i <= u; ++i) f = f * (KPolynomial::u(u, t, i) + KPolynomial::t(u, t, j));
  }
  for (int i = 1; i <= b; ++i) f = partial(f, i);
  if (b % 2) f = f * -1;
  std::vector<int> rect(k, b);
  return f.t_zero() == schur_polynomial(Partition(rect), u).embed(u, t);
}

}  // namespace mchow
