#include "taut/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "taut/beta.hpp"
#include "taut/chow.hpp"
#include "taut/combinatorics.hpp"
#include "taut/diagonals.hpp"
#include "taut/secants.hpp"
#include "taut/serialize.hpp"
#include "taut/tables.hpp"
#include "taut/taut_ring.hpp"

namespace taut {

namespace {

using Clock = std::chrono::steady_clock;

// Runs `body`, which returns an empty string on success or a failure note.
CheckResult timed(std::string suite, std::string name,
                  const std::function<std::string()>& body) {
  CheckResult res;
  res.suite = std::move(suite);
  res.name = std::move(name);
  auto start = Clock::now();
  try {
    res.detail = body();
    res.passed = res.detail.empty();
  } catch (const std::exception& e) {
    res.detail = std::string("exception: ") + e.what();
  }
  res.millis = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return res;
}

// Visits every tuple of `len` nonnegative integers with sum <= max_sum.
void for_each_tuple(long len, long max_sum, const std::function<void(const std::vector<long>&)>& f) {
  std::vector<long> t(len, 0);
  std::function<void(long, long)> walk = [&](long pos, long budget) {
    if (pos == len) {
      f(t);
      return;
    }
    for (long x = 0; x <= budget; ++x) {
      t[pos] = x;
      walk(pos + 1, budget - x);
    }
  };
  walk(0, max_sum);
}

std::string tuple_str(const std::vector<long>& t) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < t.size(); ++i)
    os << (i ? "," : "") << t[i];
  os << ']';
  return os.str();
}

std::vector<CheckResult> beta_suite() {
  std::vector<CheckResult> out;
  out.push_back(timed("beta", "beta vanishes below threshold, (-1)^d prod(a!) at it", [] {
    for (long r = 1; r <= 4; ++r)
      for (long d = r; d <= 10; ++d) {
        const long threshold = d - r + 1;
        std::string failure;
        for_each_tuple(r, threshold, [&](const std::vector<long>& a) {
          // The closed forms need positive exponents; zero exponents pick up
          // the missing i = 0 term of the binomial expansion.
          if (!failure.empty() || std::find(a.begin(), a.end(), 0L) != a.end())
            return;
          long sum = std::accumulate(a.begin(), a.end(), 0L);
          Integer expected = 0;
          if (sum == threshold) {
            expected = 1;
            for (long x : a)
              expected *= factorial(x);
            if (d % 2)
              expected = -expected;
          }
          if (beta(d, a) != expected)
            failure = "d=" + std::to_string(d) + " a=" + tuple_str(a);
        });
        if (!failure.empty())
          return failure;
      }
    return std::string();
  }));
  out.push_back(timed("beta", "beta is symmetric in its exponents", [] {
    for (long d = 1; d <= 7; ++d)
      for_each_tuple(3, 6, [&](const std::vector<long>& a) {
        std::vector<long> p = a;
        std::sort(p.begin(), p.end());
        Integer ref = beta(d, p);
        while (std::next_permutation(p.begin(), p.end()))
          if (beta(d, p) != ref)
            throw std::runtime_error("asymmetric at d=" + std::to_string(d) + " a=" + tuple_str(a));
      });
    return std::string();
  }));
  out.push_back(timed("beta", "single exponent: beta(d,[a]) = (-1)^d d! {a,d}", [] {
    for (long d = 1; d <= 10; ++d)
      for (long a = 1; a <= 14; ++a) {
        std::vector<long> t{a};
        if (beta(d, t) != beta_r1_stirling(d, a))
          return "d=" + std::to_string(d) + " a=" + std::to_string(a);
      }
    return std::string();
  }));
  out.push_back(timed("beta", "alternating Stirling sum vanishes for 2 <= i <= 25", [] {
    if (stirling_alternating_sum(1) != 1)
      return std::string("G(1) != 1");
    for (long i = 2; i <= 25; ++i)
      if (stirling_alternating_sum(i) != 0)
        return "G(" + std::to_string(i) + ") != 0";
    return std::string();
  }));
  out.push_back(timed("beta", "monomial sums: degree sum(a)+n, leading prod(a!)/(n+sum a)!", [] {
    for (long n = 1; n <= 3; ++n) {
      std::vector<long> a(n, 0);
      std::function<std::string(long)> walk = [&](long pos) -> std::string {
        if (pos == n) {
          long deg = std::accumulate(a.begin(), a.end(), 0L) + n;
          return monomial_sum_leading_check(a, deg + 2) ? std::string() : tuple_str(a);
        }
        for (long x = 0; x <= 3; ++x) {
          a[pos] = x;
          if (auto f = walk(pos + 1); !f.empty())
            return f;
        }
        return std::string();
      };
      if (auto f = walk(0); !f.empty())
        return f;
    }
    return std::string();
  }));
  out.push_back(timed("beta", "alternating multinomial identity for r in [2,4], entries <= 4", [] {
    for (long r = 2; r <= 4; ++r) {
      std::vector<long> a(r, 0);
      std::function<std::string(long)> walk = [&](long pos) -> std::string {
        if (pos == r)
          return sum_int_identity_check(a) ? std::string() : tuple_str(a);
        for (long x = 0; x <= 4; ++x) {
          a[pos] = x;
          if (auto f = walk(pos + 1); !f.empty())
            return f;
        }
        return std::string();
      };
      if (auto f = walk(0); !f.empty())
        return f;
    }
    return std::string();
  }));
  return out;
}

std::vector<CheckResult> tables_suite() {
  std::vector<CheckResult> out;
  for (const auto& golden : golden_rows()) {
    std::ostringstream name;
    name << "table " << golden.table << " g=" << golden.system.g << " g^" << golden.system.r
         << "_" << golden.system.d;
    out.push_back(timed("tables", name.str(), [&golden] {
      TableRow row = build_table_row(golden.system);
      TautPolynomial expected = golden_polynomial(golden);
      if (row.pencil_degree != golden.pencil_degree)
        return "pencil degree " + std::to_string(row.pencil_degree) + " != expected " +
               std::to_string(golden.pencil_degree);
      if (row.reduced_relation == expected || row.raw_relation == expected)
        return std::string();
      return "got " + render_relation(row.reduced_relation) + ", expected " +
             render_relation(expected);
    }));
  }
  return out;
}

std::vector<CheckResult> recursion_suite(int max_n) {
  std::vector<CheckResult> out;
  out.push_back(timed("recursion", "hyperplane pullback equals the partition recursion", [max_n] {
    for (int r = 1; r <= 2; ++r)
      for (int n = r; n <= max_n; ++n)
        for (int d = n; d <= std::max(6, n); ++d)
          if (!verify_recursion(d, r, n, max_n))
            return "d=" + std::to_string(d) + " r=" + std::to_string(r) + " n=" + std::to_string(n);
    return std::string();
  }));
  out.push_back(timed("recursion", "sigma pushforward of pullback is n! times [G_n]", [] {
    for (int r = 1; r <= 2; ++r)
      for (int n = r; n <= 5; ++n)
        for (int d = n; d <= 6; ++d) {
          auto lhs = sigma_pushforward(sigma_pullback_class(d, r, n));
          auto rhs = truncated_system_class(d, r, n) * Rational(factorial(n));
          if (!(lhs == rhs))
            return "d=" + std::to_string(d) + " r=" + std::to_string(r) + " n=" + std::to_string(n);
        }
    return std::string();
  }));
  return out;
}

std::vector<CheckResult> chow_suite() {
  std::vector<CheckResult> out;
  for (int n = 0; n <= 6; ++n) {
    out.push_back(timed("chow", "incidence pushdown, n=" + std::to_string(n), [n] {
      for (int r = 0; r <= n; ++r)
        if (!(incidence_class_pushdown(n, r) == hyperplane_class_formula(n, r)))
          return "r=" + std::to_string(r);
      return std::string();
    }));
  }
  return out;
}

std::vector<CheckResult> identities_suite() {
  std::vector<CheckResult> out;
  for (long r = 1; r <= 6; ++r)
    out.push_back(timed("identities", "A(r,d,g) = B(r,d,g), r=" + std::to_string(r), [r] {
      return verify_A_equals_B(r) ? std::string() : std::string("grid mismatch");
    }));
  out.push_back(timed("identities", "A(3,d,g) equals Cayley's quadrisecant count", [] {
    for (long d = 6; d <= 14; ++d)
      for (long g = 0; g <= 12; ++g)
        if (secant_count_A(3, d, g) != cayley_quadrisecants(d, g))
          return "d=" + std::to_string(d) + " g=" + std::to_string(g);
    return std::string();
  }));
  out.push_back(timed("identities", "A(2,d,g) = (d-1)(d-2)/2 - g", [] {
    for (long d = 4; d <= 12; ++d)
      for (long g = 0; g <= 12; ++g)
        if (secant_count_A(2, d, g) != Rational((d - 1) * (d - 2) / 2 - g))
          return "d=" + std::to_string(d) + " g=" + std::to_string(g);
    return std::string();
  }));
  out.push_back(timed("identities", "monomial coefficient = (-1)^r (g+r-d-2)! (d-2r+2)! A", [] {
    for (long r = 1; r <= 4; ++r)
      for (long d = 2 * r + 1; d <= 2 * r + 6; ++d)
        for (long g = d + 2 - r; g <= d + 10; ++g) {
          Rational expected = Rational(Integer(factorial(g + r - d - 2) * factorial(d - 2 * r + 2))) *
                              secant_count_A(r, d, g);
          if (r % 2)
            expected = -expected;
          if (monomial_coefficient(r, d, g) != expected)
            return "r=" + std::to_string(r) + " d=" + std::to_string(d) + " g=" + std::to_string(g);
        }
    return std::string();
  }));
  return out;
}

std::vector<CheckResult> pipeline_suite() {
  std::vector<CheckResult> out;
  out.push_back(timed("pipeline", "relations vanish below s = d-2r+1", [] {
    for (long r = 1; r <= 3; ++r)
      for (long d = r; d <= 9; ++d)
        for (long g = 2; g <= 12; ++g)
          for (long s = 0; s < d - 2 * r + 1; ++s)
            if (!generate_relation(g, r, d, s).is_zero())
              return "g=" + std::to_string(g) + " r=" + std::to_string(r) + " d=" +
                     std::to_string(d) + " s=" + std::to_string(s);
    return std::string();
  }));
  out.push_back(timed("pipeline", "pencil expansion is a multiple of the beta relation", [] {
    for (long r = 1; r <= 3; ++r)
      for (long d = r; d <= 8; ++d)
        for (long g = 2; g <= 10; ++g)
          for (long s = 0; s <= 6; ++s)
            if (!is_rational_multiple(generate_relation_via_pencils(g, r, d, s),
                                      generate_relation(g, r, d, s)))
              return "g=" + std::to_string(g) + " r=" + std::to_string(r) + " d=" +
                     std::to_string(d) + " s=" + std::to_string(s);
    return std::string();
  }));
  out.push_back(timed("pipeline", "pushdown of [G_d] is a multiple of the beta relation", [] {
    for (long r = 1; r <= 3; ++r)
      for (long d = r; d <= 8; ++d)
        for (long g = 2; g <= 10; ++g) {
          TautPolynomial image = jacobian_pushdown(truncated_system_class(d, r, d), g);
          for (long s = 0; s <= 6; ++s)
            if (!is_rational_multiple(image.graded_part(s), generate_relation(g, r, d, s)))
              return "g=" + std::to_string(g) + " r=" + std::to_string(r) + " d=" +
                     std::to_string(d) + " s=" + std::to_string(s);
        }
    return std::string();
  }));
  return out;
}

} // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {"beta",  "tables",     "recursion",
                                                 "chow",  "identities", "pipeline"};
  return names;
}

std::vector<CheckResult> run_verify_suite(std::string_view suite, int recursion_max_n) {
  if (suite == "all") {
    std::vector<CheckResult> all;
    for (const auto& name : verify_suite_names()) {
      auto part = run_verify_suite(name, recursion_max_n);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  if (suite == "beta") return beta_suite();
  if (suite == "tables") return tables_suite();
  if (suite == "recursion") return recursion_suite(recursion_max_n);
  if (suite == "chow") return chow_suite();
  if (suite == "identities") return identities_suite();
  if (suite == "pipeline") return pipeline_suite();
  throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

} // namespace taut
