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

#ifndef MCHOW_KCLASS_HPP_
#define MCHOW_KCLASS_HPP_

#include <stdexcept>
#include <vector>

#include "mchow/chow.hpp"
#include "mchow/kpoly.hpp"
#include "mchow/matroid.hpp"
#include "mchow/symfunc.hpp"

namespace mchow {

// Thrown when a ground set exceeds the configured oracle bound.
class OracleBoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr int kDefaultOracleBound = 7;

// Greedy basis along `order` (a permutation of 1..n).
Subset lex_first_basis(const Matroid& m, const std::vector<int>& order);

// Q^k_j = prod_i (1 - u_i t_j) in the ring with k u's and n t's.
KPolynomial q_factor(int k, int n, int j);

// K-class as an honest polynomial. The default evaluates the permutation sum
// by dynamic programming over (prefix set, last element); the streamed
// variant walks every permutation and groups by lex-first basis.
KPolynomial kclass_of(const Matroid& m, int max_n = kDefaultOracleBound);
KPolynomial kclass_streamed(const Matroid& m, int max_n = 6);

// u -> 1-u, t -> 1-t, then the lowest-degree homogeneous component.
KPolynomial ktosc(const KPolynomial& p);
// Schur expansion of a symmetric polynomial in the u's alone.
SchurExpansion schur_expand_u(const KPolynomial& p);
// s_lambda(u_1..u_vars) as a polynomial with no t's.
KPolynomial schur_polynomial(const Partition& lambda, int vars);

ChowClass chow_from_k(const Matroid& m, int max_n = kDefaultOracleBound);

KPolynomial tau(const KPolynomial& p, int i);
// (t_i f - t_{i+1} tau_i f) / (t_i - t_{i+1})
KPolynomial delta(const KPolynomial& p, int i);
// (f - tau_i f) / (t_i - t_{i+1})
KPolynomial partial(const KPolynomial& p, int i);

bool verify_parext(const Matroid& m, int max_n = kDefaultOracleBound);
bool verify_serext(const Matroid& m, int max_n = kDefaultOracleBound);
bool verify_add_loop(const Matroid& m, int max_n = kDefaultOracleBound);
bool verify_last_step(int k, int b);

}  // namespace mchow

#endif  // MCHOW_KCLASS_HPP_
