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

#ifndef MCHOW_IO_HPP_
#define MCHOW_IO_HPP_

#include <string>

#include "mchow/chow.hpp"
#include "mchow/matroid.hpp"

namespace mchow {

// All parsers throw std::invalid_argument on malformed input.

// Family shorthand (uniform:k,n  snake:b1,..  lpm:U=..;L=..
// nested:(h1,r1),..;n  panhandle:k,h,n  minimal:k,n), inline JSON, or the
// path of a JSON file.
Matroid parse_matroid(const std::string& source);
Matroid parse_shorthand(const std::string& text);
// Lattice-path description for snake: and lpm: shorthands.
LatticePathSpec parse_lattice_spec(const std::string& text);

// {"n":4,"bases":[[1,2],...]}; input bases must satisfy the exchange axiom.
Matroid matroid_from_json(const std::string& text);
std::string matroid_to_json(const Matroid& m);

// {"k":2,"n":5,"m":2,"terms":[{"partition":[2],"coeff":3},...]}
std::string chow_to_json(const ChowClass& c);
ChowClass chow_from_json(const std::string& text);

}  // namespace mchow

#endif  // MCHOW_IO_HPP_
