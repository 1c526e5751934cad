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

#ifndef MCHOW_CHOW_HPP_
#define MCHOW_CHOW_HPP_

#include <utility>
#include <vector>

#include "mchow/integer.hpp"
#include "mchow/matroid.hpp"
#include "mchow/shapes.hpp"
#include "mchow/symfunc.hpp"

namespace mchow {

// Class of a matroid in the Chow ring of G(k, n), written in the Schubert
// basis. `coeffs` holds d_eta for |eta| = m, all inside k x (n - k).
struct ChowClass {
  int k = 0;
  int n = 0;
  int m = 0;
  SchurExpansion coeffs;

  int width() const { return n - k; }
  // Sum of d_eta s_{eta^c}.
  SchurExpansion dual() const;
  // Builds the class from its dual expansion; terms outside the rectangle are
  // dropped first.
  static ChowClass from_dual(int k, int n, int m, const SchurExpansion& dual);

  bool operator==(const ChowClass& o) const {
    return k == o.k && n == o.n && m == o.m && coeffs == o.coeffs;
  }
};

// Codimension of the class of a matroid with `components` connected components.
int chow_degree(int k, int n, int components);

enum class SnakeRoute { kJacobiTrudi, kSkewSchur, kSytDescents, kRecursion };
ChowClass sc_snake(const Composition& b, SnakeRoute route = SnakeRoute::kJacobiTrudi);

enum class LatticeRoute { kTransversal, kSnakeSum };
ChowClass sc_lattice_path(const LatticePathSpec& spec,
                          LatticeRoute route = LatticeRoute::kTransversal);

// Chain of (|H_i|, rank H_i) for a connected nested matroid; a leading (0, 0)
// is optional and the last entry must be (n, k).
ChowClass sc_nested(const std::vector<std::pair<int, int>>& chain, int n);
ChowClass sc_uniform(int k, int n);
ChowClass sc_general(const Matroid& m);

// Hampe coefficients of a connected matroid grouped by chain profile, each
// with its nested class. Their weighted sum is sc_general(m).
struct NestedSummand {
  std::vector<std::pair<int, int>> profile;
  long long coefficient;
  ChowClass cls;
};
std::vector<NestedSummand> nested_summands(const Matroid& m);

ChowClass poincare_dual(const ChowClass& c);
ChowClass transform_dual_matroid(const ChowClass& c);

Partition hook_partition(int k, int n);
Integer beta_from_chow(const ChowClass& c);
Integer volume_from_chow(const ChowClass& c);

// Dual-indexed support {eta : d_{eta^c} != 0}, reverse lexicographic.
std::vector<Partition> support_of(const ChowClass& c);
// Containment, dominance and full-length / full-first-row checks on the
// class of S(b).
bool check_support_bounds(const Composition& b);

// eta(m) = [n-k, m+1, 1^(k-m-2)], defined for k >= 2 and 0 <= m <= k-2.
Partition eta_m(int k, int n, int m);
// Closed forms for d_{eta(m)^c}(U_{k,n}), d_{(theta^t)^c}(U_{k,n}) with
// theta = [k, m+1, 1^(n-k-m-2)], and d_{eta(m)^c} of the panhandle matroid.
Integer closed_form_uniform(int k, int n, int m);
Integer closed_form_uniform_transposed(int k, int n, int m);
Integer closed_form_panhandle(int k, int h, int n, int m);

// d_{eta(m)^c}(M) for a connected paving matroid, from the uniform value minus
// one panhandle correction per large hyperplane.
Integer paving_schubert(const Matroid& m, int deg);

// Series/parallel identity with loop and coloop padding, evaluated through
// sc_general on all three matroids.
bool check_main_identity(const Matroid& m, int b);
// Snake classes as products s_mu s_{lambda^c} and their sum over mu.
bool check_product_identities(int k, int n);

struct ConjectureCheck {
  Integer lhs;     // beta(M) binom(n-2, k-1)
  Integer volume;  // Volume(M)
  bool holds = false;
  bool equality = false;
};
ConjectureCheck check_beta_volume_conjecture(const Matroid& m);

}  // namespace mchow

#endif  // MCHOW_CHOW_HPP_
