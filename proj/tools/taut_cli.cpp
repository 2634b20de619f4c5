// Command-line front end: relation generation, table reproduction, secant
// counts and the verification suites.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "taut/beta.hpp"
#include "taut/diagonals.hpp"
#include "taut/secants.hpp"
#include "taut/serialize.hpp"
#include "taut/tables.hpp"
#include "taut/taut_ring.hpp"
#include "taut/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

using nlohmann::json;

std::string set_str(const std::set<long>& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (long i : s) {
    os << (first ? "" : ",") << i;
    first = false;
  }
  os << '}';
  return os.str();
}

int recursion_guard_from_env() {
  const char* env = std::getenv("TAUT_MAX_N");
  if (!env)
    return taut::kDefaultRecursionMaxN;
  try {
    int v = std::stoi(env);
    if (v < 1)
      throw std::invalid_argument("TAUT_MAX_N");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("TAUT_MAX_N must be a positive integer, got '") +
                                env + "'");
  }
}

int cmd_relation(long g, long r, long d, long s, bool reduce, bool as_json) {
  taut::TautPolynomial rel = taut::generate_relation(g, r, d, s);
  if (reduce)
    rel = taut::reduce_mod_vanishing(rel, taut::vanishing_report({r, d, g}));
  if (as_json)
    std::cout << taut::to_json(rel, taut::GradedLabel{g - r, s}).dump() << '\n';
  else
    std::cout << taut::render_relation(rel) << '\n';
  return kExitOk;
}

int cmd_tables(long genus_max, bool as_json) {
  if (genus_max < 2 || genus_max > 12)
    throw std::invalid_argument("--genus-max must lie in [2, 12]");
  auto checks = taut::check_tables(genus_max);
  bool all_ok = true;
  json rows = json::array();
  for (const auto& c : checks) {
    all_ok = all_ok && c.ok();
    const auto& sys = c.row.system;
    const long s = sys.d - 2 * sys.r + 1;
    if (as_json) {
      rows.push_back({{"table", c.golden->table},
                      {"genus", c.row.genus},
                      {"system", {{"r", sys.r}, {"d", sys.d}, {"g", sys.g}}},
                      {"pencil_degree", c.row.pencil_degree},
                      {"raw_relation", taut::to_json(c.row.raw_relation, taut::GradedLabel{sys.g - sys.r, s})},
                      {"reduced_relation", taut::to_json(c.row.reduced_relation, taut::GradedLabel{sys.g - sys.r, s})},
                      {"match", taut::to_string(c.match)},
                      {"pencil_matches", c.pencil_matches}});
    } else {
      std::cout << "table " << c.golden->table << "  g=" << c.row.genus << "  g^" << sys.r << "_"
                << sys.d << "  pencil g^1_" << c.row.pencil_degree << "  "
                << taut::render_relation(c.row.reduced_relation) << "  ["
                << (c.ok() ? "match " + taut::to_string(c.match) : std::string("MISMATCH")) << "]\n";
      if (!c.ok())
        std::cout << "    expected: " << taut::render_relation(taut::golden_polynomial(*c.golden))
                  << "  raw: " << taut::render_relation(c.row.raw_relation) << '\n';
    }
  }
  if (as_json)
    std::cout << json{{"rows", rows}, {"all_match", all_ok}}.dump(2) << '\n';
  return all_ok ? kExitOk : kExitFailure;
}

int cmd_secants(long r, long d, long g, bool as_json) {
  taut::LinearSystemSignature sig{r, d, g};
  sig.validate();
  taut::Rational a = taut::secant_count_A(r, d, g);
  taut::Rational b = taut::castelnuovo_B(r, d, g);
  long pencil = taut::induced_pencil_degree(sig);
  std::set<long> vanishing = taut::vanishing_report(sig);
  if (as_json) {
    json out = {{"r", r}, {"d", d}, {"g", g}, {"A", a.str()}, {"B", b.str()},
                {"pencil_degree", pencil}, {"vanishing", vanishing}};
    if (r == 3)
      out["cayley"] = taut::cayley_quadrisecants(d, g).str();
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "A(" << r << "," << d << "," << g << ") = " << a << '\n';
    std::cout << "B(" << r << "," << d << "," << g << ") = " << b << '\n';
    if (r == 3)
      std::cout << "Cayley quadrisecants = " << taut::cayley_quadrisecants(d, g) << '\n';
    std::cout << "induced pencil: g^1_" << pencil << '\n';
    std::cout << "vanishing C(i): " << set_str(vanishing) << '\n';
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite) {
  const int max_n = recursion_guard_from_env();
  auto results = taut::run_verify_suite(suite, max_n);
  bool ok = true;
  for (const auto& res : results) {
    ok = ok && res.passed;
    std::cout << (res.passed ? "[PASS] " : "[FAIL] ") << res.suite << ": " << res.name << "  ("
              << std::fixed << std::setprecision(1) << res.millis << " ms)";
    if (!res.passed)
      std::cout << "  -- " << res.detail;
    std::cout << '\n';
  }
  std::cout << (ok ? "all checks passed" : "some checks FAILED") << '\n';
  return ok ? kExitOk : kExitFailure;
}

int cmd_beta(long d, const std::vector<long>& a) {
  std::cout << taut::beta(d, a).get_str() << '\n';
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relations among the Beauville components of a curve in the tautological ring "
               "of its Jacobian"};
  app.require_subcommand(1);

  long g = 0, r = 0, d = 0, s = 0;
  bool reduce = false, as_json = false;
  auto* relation = app.add_subcommand("relation", "relation coming from a base point free g^r_d");
  relation->add_option("--g", g, "genus")->required();
  relation->add_option("--r", r, "dimension of the linear system")->required();
  relation->add_option("--d", d, "degree of the linear system")->required();
  relation->add_option("--s", s, "Beauville index")->required();
  relation->add_flag("--reduce", reduce, "drop components killed by the induced pencil");
  relation->add_flag("--json", as_json, "JSON output");

  long genus_max = 9;
  auto* tables = app.add_subcommand("tables", "reproduce the plane and space curve tables");
  tables->add_option("--genus-max", genus_max, "largest genus to include (<= 12)");
  tables->add_flag("--json", as_json, "JSON output");

  auto* secants = app.add_subcommand("secants", "secant counts and induced pencil");
  secants->add_option("--r", r, "dimension of the linear system")->required();
  secants->add_option("--d", d, "degree")->required();
  secants->add_option("--g", g, "genus")->required();
  secants->add_flag("--json", as_json, "JSON output");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suite, "suite name")
      ->check(CLI::IsMember({"all", "beta", "tables", "recursion", "chow", "identities", "pipeline"}));

  std::vector<long> exps;
  auto* beta = app.add_subcommand("beta", "evaluate beta(d; a_1..a_r)");
  beta->add_option("--d", d, "degree")->required();
  beta->add_option("--a", exps, "comma separated exponents")->required()->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*relation)
      return cmd_relation(g, r, d, s, reduce, as_json);
    if (*tables)
      return cmd_tables(genus_max, as_json);
    if (*secants)
      return cmd_secants(r, d, g, as_json);
    if (*verify)
      return cmd_verify(suite);
    if (*beta)
      return cmd_beta(d, exps);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
