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

#ifndef MCHOW_INTEGER_HPP_
#define MCHOW_INTEGER_HPP_

#include <boost/multiprecision/cpp_int.hpp>

namespace mchow {

using Integer = boost::multiprecision::cpp_int;

inline Integer binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline Integer factorial(long long n) {
  Integer r = 1;
  for (long long i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace mchow

#endif  // MCHOW_INTEGER_HPP_
