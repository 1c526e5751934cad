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

#include "mchow/io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "json.hpp"

namespace mchow {

namespace {

using Json = nlohmann::ordered_json;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("expected an integer, got '" + item + "'");
    }
    if (used != item.size()) throw std::invalid_argument("expected an integer, got '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<int> expect_count(const std::string& what, const std::string& body, std::size_t n) {
  const auto v = parse_ints(body);
  if (v.size() != n) {
    throw std::invalid_argument(what + " expects " + std::to_string(n) + " integers");
  }
  return v;
}

std::pair<std::string, std::string> split_family(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("not a family shorthand: " + text);
  return {trim(text.substr(0, colon)), trim(text.substr(colon + 1))};
}

LatticePathSpec parse_lpm_body(const std::string& body) {
  std::string upper, lower;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ';')) {
    item = trim(item);
    if (item.rfind("U=", 0) == 0) {
      upper = item.substr(2);
    } else if (item.rfind("L=", 0) == 0) {
      lower = item.substr(2);
    } else {
      throw std::invalid_argument("lpm expects U=<path>;L=<path>");
    }
  }
  if (upper.empty() || lower.empty()) throw std::invalid_argument("lpm expects U=<path>;L=<path>");
  return LatticePathSpec::from_paths(lower, upper);
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
}

Json coeff_json(const Integer& c) {
  if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max()) {
    return Json(static_cast<long long>(c));
  }
  return Json(c.str());
}

}  // namespace

LatticePathSpec parse_lattice_spec(const std::string& text) {
  const auto [family, body] = split_family(text);
  if (family == "snake") return snake_spec(Composition(parse_ints(body)));
  if (family == "lpm") return parse_lpm_body(body);
  throw std::invalid_argument("expected a snake: or lpm: shorthand");
}

Matroid parse_shorthand(const std::string& text) {
  const auto [family, body] = split_family(text);
  if (family == "uniform") {
    const auto v = expect_count("uniform", body, 2);
    if (v[0] < 0 || v[0] > v[1] || v[1] > 64) throw std::invalid_argument("uniform needs 0 <= k <= n <= 64");
    return uniform(v[0], v[1]);
  }
  if (family == "snake") return snake(Composition(parse_ints(body)));
  if (family == "lpm") return lattice_path(parse_lpm_body(body));
  if (family == "panhandle") {
    const auto v = expect_count("panhandle", body, 3);
    return panhandle(v[0], v[1], v[2]);
  }
  if (family == "minimal") {
    const auto v = expect_count("minimal", body, 2);
    return minimal(v[0], v[1]);
  }
  if (family == "nested") {
    const auto semi = body.rfind(';');
    if (semi == std::string::npos) throw std::invalid_argument("nested expects (h,r),...;n");
    const auto nv = expect_count("nested size", body.substr(semi + 1), 1);
    const std::string chain_text = body.substr(0, semi);
    static const std::regex pair_re(R"(\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\))");
    std::vector<std::pair<int, int>> chain;
    std::string rest;
    auto it = std::sregex_iterator(chain_text.begin(), chain_text.end(), pair_re);
    std::size_t pos = 0;
    for (; it != std::sregex_iterator(); ++it) {
      rest += chain_text.substr(pos, it->position() - pos);
      pos = it->position() + it->length();
      chain.emplace_back(std::stoi((*it)[1]), std::stoi((*it)[2]));
    }
    rest += chain_text.substr(pos);
    if (chain.empty() || rest.find_first_not_of(", ") != std::string::npos) {
      throw std::invalid_argument("nested expects (h,r),...;n");
    }
    validate_nested_chain(chain, nv[0]);
    return nested_from_chain(chain, nv[0]);
  }
  throw std::invalid_argument("unknown matroid family '" + family + "'");
}

Matroid matroid_from_json(const std::string& text) {
  const Json j = parse_json(text);
  if (!j.is_object() || !j.contains("n") || !j.contains("bases") || !j["n"].is_number_integer() ||
      !j["bases"].is_array()) {
    throw std::invalid_argument("matroid JSON needs integer \"n\" and array \"bases\"");
  }
  const int n = j["n"].get<int>();
  if (n < 0 || n > 64) throw std::invalid_argument("ground set size must be in [0, 64]");
  std::vector<Subset> bases;
  for (const auto& b : j["bases"]) {
    if (!b.is_array()) throw std::invalid_argument("each basis must be an array of elements");
    Subset s = 0;
    for (const auto& e : b) {
      if (!e.is_number_integer()) throw std::invalid_argument("basis elements must be integers");
      const int x = e.get<int>();
      if (x < 1 || x > n) throw std::invalid_argument("basis element outside [1, n]");
      if (s & element_bit(x)) throw std::invalid_argument("repeated element in a basis");
      s |= element_bit(x);
    }
    bases.push_back(s);
  }
  return Matroid::checked(n, std::move(bases));
}

std::string matroid_to_json(const Matroid& m) {
  std::vector<std::vector<int>> bases;
  for (Subset b : m.bases()) bases.push_back(subset_elements(b));
  std::sort(bases.begin(), bases.end());
  Json j;
  j["n"] = m.n();
  j["bases"] = bases;
  return j.dump();
}

Matroid parse_matroid(const std::string& source) {
  const std::string s = trim(source);
  if (s.empty()) throw std::invalid_argument("empty matroid source");
  if (s.front() == '{') return matroid_from_json(s);
  std::ifstream in(s);
  if (in) {
    std::stringstream buf;
    buf << in.rdbuf();
    return matroid_from_json(buf.str());
  }
  if (s.find(':') != std::string::npos) return parse_shorthand(s);
  throw std::invalid_argument("cannot read matroid source '" + s + "'");
}

std::string chow_to_json(const ChowClass& c) {
  Json j;
  j["k"] = c.k;
  j["n"] = c.n;
  j["m"] = c.m;
  j["terms"] = Json::array();
  for (const auto& [p, coeff] : c.coeffs.terms()) {
    Json t;
    t["partition"] = p.parts();
    t["coeff"] = coeff_json(coeff);
    j["terms"].push_back(t);
  }
  return j.dump();
}

ChowClass chow_from_json(const std::string& text) {
  const Json j = parse_json(text);
  for (const char* key : {"k", "n", "m"}) {
    if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer()) {
      throw std::invalid_argument(std::string("class JSON needs integer \"") + key + "\"");
    }
  }
  if (!j.contains("terms") || !j["terms"].is_array()) {
    throw std::invalid_argument("class JSON needs a \"terms\" array");
  }
  ChowClass c{j["k"].get<int>(), j["n"].get<int>(), j["m"].get<int>(), {}};
  if (c.k < 0 || c.n < c.k || c.m < 0) throw std::invalid_argument("class JSON has invalid k, n, m");
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("partition") || !t.contains("coeff") ||
        !t["partition"].is_array()) {
      throw std::invalid_argument("each term needs \"partition\" and \"coeff\"");
    }
    std::vector<int> parts;
    for (const auto& x : t["partition"]) {
      if (!x.is_number_integer()) throw std::invalid_argument("partition parts must be integers");
      parts.push_back(x.get<int>());
    }
    const Partition p(parts);
    if (p.size() != c.m || p.length() > c.k || (!p.empty() && p.parts()[0] > c.n - c.k)) {
      throw std::invalid_argument("term partition does not fit the class degree and box");
    }
    Integer coeff;
    if (t["coeff"].is_number_integer()) {
      coeff = t["coeff"].get<long long>();
    } else if (t["coeff"].is_string()) {
      try {
        coeff = Integer(t["coeff"].get<std::string>());
      } catch (const std::exception&) {
        throw std::invalid_argument("coefficient is not an integer");
      }
    } else {
      throw std::invalid_argument("coefficient is not an integer");
    }
    if (coeff == 0) throw std::invalid_argument("zero coefficients are not stored");
    if (c.coeffs.coefficient(p) != 0) throw std::invalid_argument("repeated partition");
    c.coeffs.add(p, coeff);
  }
  c.coeffs.set_bound(c.k, c.n - c.k);
  return c;
}

}  // namespace mchow
