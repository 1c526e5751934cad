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

#include "mchow/cli.hpp"

#include <algorithm>
#include <functional>

#include "CLI11.hpp"
#include "json.hpp"
#include "mchow/chow.hpp"
#include "mchow/io.hpp"
#include "mchow/kclass.hpp"
#include "mchow/symfunc.hpp"

namespace mchow {

namespace {

using Json = nlohmann::ordered_json;

// Reported as exit code 3.
class IdentityFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json integer_json(const Integer& c) {
  if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max()) {
    return Json(static_cast<long long>(c));
  }
  return Json(c.str());
}

std::string join(const std::vector<int>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::string profile_text(const std::vector<std::pair<int, int>>& profile) {
  std::string s;
  for (const auto& [h, r] : profile) {
    if (!s.empty()) s += ",";
    s += "(" + std::to_string(h) + "," + std::to_string(r) + ")";
  }
  return s;
}

struct Options {
  std::string format = "text";
  std::string source;
  bool oracle = false;
  int oracle_bound = kDefaultOracleBound;
  int max_n = 6;
  int ribbon_size = 9;
};

void print_class(const ChowClass& c, std::ostream& out, const Options& o) {
  if (o.format == "json") {
    out << chow_to_json(c) << "\n";
    return;
  }
  out << "k = " << c.k << ", n = " << c.n << ", m = " << c.m << "\n";
  out << "Sc = " << c.coeffs.to_string() << "\n";
  out << "Sc^c = " << c.dual().to_string() << "\n";
}

ChowClass class_of(const Matroid& m, const Options& o) {
  return o.oracle ? chow_from_k(m, o.oracle_bound) : sc_general(m);
}

int cmd_chow(const Options& o, std::ostream& out) {
  print_class(class_of(parse_matroid(o.source), o), out, o);
  return kExitOk;
}

int cmd_dual(const Options& o, std::ostream& out) {
  const Matroid m = parse_matroid(o.source);
  const ChowClass c = transform_dual_matroid(class_of(m, o));
  if (c != sc_general(dual(m))) throw IdentityFailure("dual transform disagrees with the dual matroid");
  print_class(c, out, o);
  return kExitOk;
}

int cmd_beta(const Options& o, std::ostream& out) {
  const Matroid m = parse_matroid(o.source);
  const Integer from_class = beta_from_chow(class_of(m, o));
  const long long from_ranks = beta(m);
  if (from_class != from_ranks) {
    throw IdentityFailure("beta from the class (" + from_class.str() + ") != rank sum (" +
                          std::to_string(from_ranks) + ")");
  }
  if (o.format == "json") {
    out << Json{{"beta", integer_json(from_class)}}.dump() << "\n";
  } else {
    out << "beta = " << from_class << "\n";
  }
  return kExitOk;
}

int cmd_volume(const Options& o, std::ostream& out) {
  const Integer v = volume_from_chow(class_of(parse_matroid(o.source), o));
  if (o.format == "json") {
    out << Json{{"volume", integer_json(v)}}.dump() << "\n";
  } else {
    out << "volume = " << v << "\n";
  }
  return kExitOk;
}

int cmd_support(const Options& o, std::ostream& out) {
  const auto support = support_of(class_of(parse_matroid(o.source), o));
  if (o.format == "json") {
    Json list = Json::array();
    for (const auto& p : support) list.push_back(p.parts());
    out << Json{{"support", list}}.dump() << "\n";
  } else {
    for (const auto& p : support) out << p.to_string() << "\n";
  }
  return kExitOk;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const Matroid m = parse_matroid(o.source);
  Json comps = Json::array();
  for (Subset comp : connected_components(m)) {
    const auto elements = subset_elements(comp);
    Json jc;
    jc["elements"] = elements;
    jc["summands"] = Json::array();
    if (o.format == "text") out << "component {" << join(elements, ",") << "}\n";
    if (elements.size() < 2) {
      if (o.format == "text") out << "  " << (m.is_independent(comp) ? "coloop" : "loop") << "\n";
      comps.push_back(jc);
      continue;
    }
    for (const auto& s : nested_summands(restriction(m, comp))) {
      if (o.format == "text") {
        out << "  " << s.coefficient << " * nested " << profile_text(s.profile) << ": "
            << s.cls.coeffs.to_string() << "\n";
      } else {
        Json js;
        Json prof = Json::array();
        for (const auto& [h, r] : s.profile) prof.push_back({h, r});
        js["profile"] = prof;
        js["coeff"] = s.coefficient;
        js["class"] = Json::parse(chow_to_json(s.cls));
        jc["summands"].push_back(js);
      }
    }
    comps.push_back(jc);
  }
  const ChowClass c = sc_general(m);
  if (o.format == "json") {
    out << Json{{"components", comps}, {"class", Json::parse(chow_to_json(c))}}.dump() << "\n";
  } else {
    out << "Sc = " << c.coeffs.to_string() << "\n";
  }
  return kExitOk;
}

int cmd_snakes(const Options& o, std::ostream& out) {
  const auto snakes = snakes_in(parse_lattice_spec(o.source));
  if (o.format == "json") {
    Json list = Json::array();
    for (const auto& b : snakes) list.push_back(b.parts());
    out << Json{{"snakes", list}}.dump() << "\n";
  } else {
    for (const auto& b : snakes) out << join(b.parts(), ",") << "\n";
  }
  return kExitOk;
}

int cmd_paving(const Options& o, std::ostream& out) {
  const Matroid m = parse_matroid(o.source);
  const int k = m.rank(), n = m.n();
  if (k < 2) throw std::invalid_argument("paving-check needs rank at least 2");
  const ChowClass c = sc_general(m);
  Json rows = Json::array();
  bool ok = true;
  for (int deg = 0; deg <= k - 2; ++deg) {
    const Partition eta = eta_m(k, n, deg);
    const Integer formula = paving_schubert(m, deg);
    const Integer pipeline = c.coeffs.coefficient(complement(eta, k, n - k));
    ok = ok && formula == pipeline;
    if (o.format == "json") {
      rows.push_back({{"m", deg}, {"eta", eta.parts()}, {"formula", integer_json(formula)},
                      {"pipeline", integer_json(pipeline)}});
    } else {
      out << "m = " << deg << ", eta = " << eta.to_string() << ": formula " << formula
          << ", pipeline " << pipeline << "\n";
    }
  }
  if (o.format == "json") out << Json{{"coefficients", rows}, {"agree", ok}}.dump() << "\n";
  if (!ok) throw IdentityFailure("paving formula disagrees with sc_general");
  return kExitOk;
}

int cmd_conjecture(const Options& o, std::ostream& out) {
  const ConjectureCheck r = check_beta_volume_conjecture(parse_matroid(o.source));
  if (o.format == "json") {
    out << Json{{"lhs", integer_json(r.lhs)},
                {"volume", integer_json(r.volume)},
                {"holds", r.holds},
                {"equality", r.equality}}
               .dump()
        << "\n";
  } else {
    out << "beta * binom(n-2, k-1) = " << r.lhs << "\n";
    out << "volume = " << r.volume << "\n";
    out << "holds = " << (r.holds ? "true" : "false") << ", equality = "
        << (r.equality ? "true" : "false") << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.max_n > o.oracle_bound) {
    throw OracleBoundError("--max-n " + std::to_string(o.max_n) + " exceeds the oracle bound " +
                           std::to_string(o.oracle_bound));
  }
  if (o.max_n < 1 || o.ribbon_size < 1) throw std::invalid_argument("bounds must be positive");
  std::vector<std::string> failures;
  auto report = [&](const std::string& name, int passed, int total) {
    out << name << ": " << passed << "/" << total << "\n";
  };

  std::vector<std::pair<std::string, Matroid>> corpus;
  for (int n = 1; n <= o.max_n; ++n) {
    for (int k = 0; k <= n; ++k) {
      corpus.emplace_back("uniform:" + std::to_string(k) + "," + std::to_string(n), uniform(k, n));
    }
    if (n >= 2) {
      for (const auto& b : compositions_of(n - 1)) {
        corpus.emplace_back("snake:" + join(b.parts(), ","), snake(b));
      }
    }
  }
  int passed = 0;
  for (const auto& [name, m] : corpus) {
    if (chow_from_k(m, o.oracle_bound) == sc_general(m)) {
      ++passed;
    } else {
      failures.push_back("oracle: " + name);
    }
  }
  report("oracle vs pipeline", passed, static_cast<int>(corpus.size()));

  passed = 0;
  int total = 0;
  for (int size = 1; size <= o.ribbon_size; ++size) {
    for (const auto& b : compositions_of(size)) {
      ++total;
      const ChowClass a = sc_snake(b, SnakeRoute::kJacobiTrudi);
      if (a == sc_snake(b, SnakeRoute::kSkewSchur) && a == sc_snake(b, SnakeRoute::kSytDescents) &&
          a == sc_snake(b, SnakeRoute::kRecursion)) {
        ++passed;
      } else {
        failures.push_back("ribbon: " + join(b.parts(), ","));
      }
    }
  }
  report("ribbon agreement", passed, total);

  passed = total = 0;
  for (const auto& [name, m] : std::vector<std::pair<std::string, Matroid>>{
           {"uniform:1,2", uniform(1, 2)},
           {"uniform:2,4", uniform(2, 4)},
           {"snake:2,1", snake(Composition({2, 1}))}}) {
    if (m.n() + 1 > o.oracle_bound) continue;
    for (const auto& [what, f] :
         std::vector<std::pair<std::string, std::function<bool(const Matroid&)>>>{
             {"parext", [&](const Matroid& x) { return verify_parext(x, o.oracle_bound); }},
             {"serext", [&](const Matroid& x) { return verify_serext(x, o.oracle_bound); }},
             {"add_loop", [&](const Matroid& x) { return verify_add_loop(x, o.oracle_bound); }}}) {
      ++total;
      if (f(m)) {
        ++passed;
      } else {
        failures.push_back(what + ": " + name);
      }
    }
  }
  for (auto [k, b] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}, {3, 2}}) {
    ++total;
    if (verify_last_step(k, b)) {
      ++passed;
    } else {
      failures.push_back("last_step: " + std::to_string(k) + "," + std::to_string(b));
    }
  }
  for (int size = 1; size + 1 <= o.max_n; ++size) {
    for (const auto& b : compositions_of(size)) {
      ++total;
      if (check_main_identity(snake(b), 1)) {
        ++passed;
      } else {
        failures.push_back("main identity: snake:" + join(b.parts(), ","));
      }
    }
  }
  report("extension identities", passed, total);

  for (const auto& f : failures) out << "FAILED " << f << "\n";
  if (!failures.empty()) throw IdentityFailure(std::to_string(failures.size()) + " checks failed");
  out << "all checks passed\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chow classes of matroids in the Grassmannian", "mchow"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&, std::ostream&)> action;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto matroid_command = [&](const std::string& name, const std::string& help,
                             int (*fn)(const Options&, std::ostream&), bool oracle_flags) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("matroid", o.source,
                    "Family shorthand, inline JSON, or a JSON file with n and bases")
        ->required();
    add_format(sub);
    if (oracle_flags) {
      sub->add_flag("--oracle", o.oracle, "Compute through the K-class oracle");
      sub->add_option("--oracle-bound", o.oracle_bound, "Largest ground set for the oracle");
    }
    sub->callback([&action, fn] { action = fn; });
  };
  matroid_command("chow", "Print Sc and its dual expansion", cmd_chow, true);
  matroid_command("dual", "Class of the dual matroid", cmd_dual, true);
  matroid_command("beta", "Beta invariant", cmd_beta, true);
  matroid_command("volume", "Volume of the matroid polytope (normalized)", cmd_volume, true);
  matroid_command("support", "Partitions eta with nonzero d of the complement", cmd_support, true);
  matroid_command("decompose", "Hampe coefficients and nested summands", cmd_decompose, false);
  matroid_command("paving-check", "Paving closed formula against the pipeline", cmd_paving, false);
  matroid_command("conjecture-check", "Beta-volume inequality", cmd_conjecture, false);

  CLI::App* snakes = app.add_subcommand("snakes", "Snakes inside a lattice-path matroid");
  snakes->add_option("spec", o.source, "lpm:U=<path>;L=<path> or snake:b1,...")->required();
  add_format(snakes);
  snakes->callback([&] { action = cmd_snakes; });

  CLI::App* verify = app.add_subcommand("verify", "Oracle and identity suites");
  verify->add_option("--max-n", o.max_n, "Largest ground set for oracle comparisons");
  verify->add_option("--ribbon-size", o.ribbon_size, "Largest composition size for ribbons");
  verify->add_option("--oracle-bound", o.oracle_bound, "Largest ground set for the oracle");
  verify->callback([&] { action = cmd_verify; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }
  try {
    return action(o, out);
  } catch (const OracleBoundError& e) {
    err << "error: " << e.what() << "\n";
    return kExitOracleBound;
  } catch (const IdentityFailure& e) {
    err << "identity check failed: " << e.what() << "\n";
    return kExitIdentityFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitIdentityFailure;
  }
}

}  // namespace mchow
