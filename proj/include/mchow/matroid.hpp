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

#ifndef MCHOW_MATROID_HPP_
#define MCHOW_MATROID_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mchow/integer.hpp"
#include "mchow/shapes.hpp"

namespace mchow {

// Bit i-1 stands for element i of the ground set [n].
using Subset = std::uint64_t;

inline Subset element_bit(int e) { return Subset{1} << (e - 1); }
inline Subset full_set(int n) {
  return n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1;
}
inline int subset_size(Subset s) { return __builtin_popcountll(s); }
std::vector<int> subset_elements(Subset s);
Subset subset_of(const std::vector<int>& elements);

class Matroid {
 public:
  // Bases are sorted and deduplicated. Sizes are checked; the exchange axiom
  // is not (see checked()).
  Matroid(int n, std::vector<Subset> bases);
  // Also verifies the basis-exchange axiom.
  static Matroid checked(int n, std::vector<Subset> bases);

  int n() const { return n_; }
  int rank() const { return k_; }
  const std::vector<Subset>& bases() const& { return bases_; }
  std::vector<Subset> bases() && { return std::move(bases_); }
  Subset ground() const { return full_set(n_); }

  bool is_basis(Subset s) const;
  int rank_of(Subset s) const;
  bool is_independent(Subset s) const;
  Subset closure(Subset s) const;
  Subset loops() const;
  Subset coloops() const;

  bool operator==(const Matroid& o) const = default;

 private:
  int n_;
  int k_;
  std::vector<Subset> bases_;
};

bool satisfies_exchange(const Matroid& m);
// rank_of for every subset, indexed by the subset's bitmask. Needs n <= 24.
std::vector<int> rank_table(const Matroid& m);

// A lattice-path matroid on [k + w] given by the skew shape outer/inner in a
// k x w frame. Paths run from the bottom-left corner with N and E steps.
struct LatticePathSpec {
  int k = 0;
  int w = 0;
  Partition outer;
  Partition inner;

  static LatticePathSpec from_paths(const std::string& lower,
                                    const std::string& upper);
  // Frame defaults to length(outer) rows and width outer_1.
  static LatticePathSpec from_shape(const Partition& outer, const Partition& inner);
  static LatticePathSpec from_shape(const Partition& outer, const Partition& inner,
                                    int k, int w);

  int n() const { return k + w; }
  std::string lower_path() const;
  std::string upper_path() const;
  // Positions of the north steps of the lower / upper path.
  std::vector<int> lower_north() const;
  std::vector<int> upper_north() const;
  // Bounding paths meet only at their endpoints.
  bool connected() const;
};

std::string outline_path(const Partition& p, int k, int w);
Partition partition_of_path(const std::string& path);

Matroid uniform(int k, int n);
Matroid lattice_path(const LatticePathSpec& spec);
Matroid snake(const Composition& b);
LatticePathSpec snake_spec(const Composition& b);
// Chain of (h_i, r_i). A leading (0, 0) is implied; elements past the last
// h_s are coloops.
Matroid nested_from_chain(const std::vector<std::pair<int, int>>& chain, int n);
void validate_nested_chain(const std::vector<std::pair<int, int>>& chain, int n);
Matroid minimal(int k, int n);
Matroid panhandle(int k, int h, int n);

Matroid dual(const Matroid& m);
Matroid direct_sum(const Matroid& a, const Matroid& b);
Matroid add_loop(const Matroid& m);
Matroid add_coloop(const Matroid& m);
Matroid parallel_ext(const Matroid& m);
Matroid series_ext(const Matroid& m);
// Restriction to `s`, relabelled to 1..|s| in increasing order.
Matroid restriction(const Matroid& m, Subset s);
// Same matroid with the ground set permuted: element e becomes perm[e-1].
Matroid relabel(const Matroid& m, const std::vector<int>& perm);

std::vector<Subset> connected_components(const Matroid& m);

struct FlatWithRank {
  Subset flat;
  int rank;
  bool operator==(const FlatWithRank&) const = default;
};
// Sorted by rank, then size, then bitmask.
std::vector<FlatWithRank> cyclic_flats(const Matroid& m);
std::vector<FlatWithRank> flats_of_rank(const Matroid& m, int r);

long long beta(const Matroid& m);

struct CyclicChain {
  std::vector<FlatWithRank> chain;
  // (|F_i|, r_i) for every member, bottom first.
  std::vector<std::pair<int, int>> profile() const;
  bool operator==(const CyclicChain&) const = default;
};

struct HampeTerm {
  CyclicChain chain;
  long long coefficient;
};

// All chains of cyclic flats from the bottom to the top element.
std::vector<CyclicChain> cyclic_chains(const Matroid& m);
// mu(N, 1) for every chain N of cyclic_chains(m), in the same order.
std::vector<long long> chain_mobius(const Matroid& m);
// Nonzero -mu(N, 1), in the order of cyclic_chains(m).
std::vector<HampeTerm> hampe_coefficients(const Matroid& m);
// The nested matroid on [n] cut out by |B ∩ F| <= r(F) over the chain.
Matroid nested_of_chain(int n, int k, const CyclicChain& c);

std::vector<Composition> snakes_in(const LatticePathSpec& spec);
// Descent intervals [c_i, d_i] of the uppermost and lowermost snakes.
std::vector<std::pair<int, int>> transversal_intervals(const LatticePathSpec& spec);

bool is_paving(const Matroid& m);
std::map<int, int> paving_flat_counts(const Matroid& m);

}  // namespace mchow

#endif  // MCHOW_MATROID_HPP_
