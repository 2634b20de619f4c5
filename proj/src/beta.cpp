#include "taut/beta.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

#include "taut/combinatorics.hpp"

namespace taut {

namespace {

void require_tuple(std::span<const long> a, const char* who) {
  if (a.empty())
    throw std::invalid_argument(std::string(who) + ": empty index tuple");
  for (long x : a)
    if (x < 0)
      throw std::invalid_argument(std::string(who) + ": negative exponent");
}

// Calls visit(parts) for every weak composition of total into parts.size() parts.
void for_each_composition(long total, std::vector<long>& parts, std::size_t pos,
                          const std::function<void(const std::vector<long>&)>& visit) {
  if (pos + 1 == parts.size()) {
    parts[pos] = total;
    visit(parts);
    return;
  }
  for (long x = 0; x <= total; ++x) {
    parts[pos] = x;
    for_each_composition(total - x, parts, pos + 1, visit);
  }
}

} // namespace

Integer beta(long d, std::span<const long> a) {
  if (d < 1)
    throw std::invalid_argument("beta: d must be positive");
  require_tuple(a, "beta");

  const std::size_t r = a.size();
  Integer total = 0;
  // Depth-first over i_1..i_r with running sum and running monomial.
  std::function<void(std::size_t, long, const Integer&)> walk =
      [&](std::size_t u, long partial, const Integer& mono) {
        if (u == r) {
          Integer term = binomial(d, partial) * mono;
          if (partial % 2 == 0)
            total += term;
          else
            total -= term;
          return;
        }
        // Each remaining slot takes at least 1.
        long room = d - partial - static_cast<long>(r - u - 1);
        for (long i = 1; i <= room; ++i)
          walk(u + 1, partial + i, mono * power(i, static_cast<unsigned long>(a[u])));
      };
  walk(0, 0, Integer(1));
  return total;
}

Integer beta_r1_stirling(long d, long a) {
  if (d < 1)
    throw std::invalid_argument("beta_r1_stirling: d must be positive");
  if (a < 0)
    throw std::invalid_argument("beta_r1_stirling: negative exponent");
  Integer v = factorial(d) * stirling2(a, d);
  return d % 2 == 0 ? v : Integer(-v);
}

Integer gamma_multiplicity(std::span<const long> sorted_values) {
  Integer out = 1;
  std::size_t run = 0;
  for (std::size_t k = 0; k < sorted_values.size(); ++k) {
    if (sorted_values[k] < 1)
      throw std::invalid_argument("gamma_multiplicity: entries must be positive");
    if (k > 0 && sorted_values[k] < sorted_values[k - 1])
      throw std::invalid_argument("gamma_multiplicity: list is not sorted");
    if (k > 0 && sorted_values[k] == sorted_values[k - 1]) {
      ++run;
    } else {
      out *= factorial(static_cast<long>(run));
      run = 1;
    }
  }
  out *= factorial(static_cast<long>(run));
  return out;
}

Integer monomial_sum_oracle(long s, std::span<const long> a) {
  if (s < 0)
    throw std::invalid_argument("monomial_sum_oracle: s must be nonnegative");
  for (long x : a)
    if (x < 0)
      throw std::invalid_argument("monomial_sum_oracle: negative exponent");

  Integer total = 0;
  std::function<void(std::size_t, long, const Integer&)> walk =
      [&](std::size_t u, long budget, const Integer& mono) {
        if (u == a.size()) {
          total += mono;
          return;
        }
        for (long i = 0; i <= budget; ++i)
          walk(u + 1, budget - i, mono * power(i, static_cast<unsigned long>(a[u])));
      };
  walk(0, s, Integer(1));
  return total;
}

LeadingTermReport monomial_sum_leading_term(std::span<const long> a, long s_max) {
  const long n = static_cast<long>(a.size());
  const long degree = std::accumulate(a.begin(), a.end(), 0L) + n;
  if (s_max < degree + 2)
    throw std::invalid_argument("monomial_sum_leading_term: s_max must be >= " +
                                std::to_string(degree + 2));

  std::vector<Integer> diff;
  for (long s = 0; s <= s_max; ++s)
    diff.push_back(monomial_sum_oracle(s, a));
  for (long k = 0; k < degree; ++k) {
    for (std::size_t i = 0; i + 1 < diff.size(); ++i)
      diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
  }

  LeadingTermReport rep;
  rep.degree = degree;
  rep.leading = Rational(diff.front(), factorial(degree));
  Integer num = 1;
  for (long x : a)
    num *= factorial(x);
  rep.expected = Rational(num, factorial(degree));

  bool constant = true;
  for (const Integer& v : diff)
    constant = constant && v == diff.front();
  // Constant degree-th difference is the same as a vanishing (degree+1)-th one.
  rep.holds = constant && rep.leading == rep.expected;
  return rep;
}

bool monomial_sum_leading_check(std::span<const long> a, long s_max) {
  return monomial_sum_leading_term(a, s_max).holds;
}

Rational sum_int_lhs(std::span<const long> a) {
  require_tuple(a, "sum_int_lhs");
  const std::size_t r = a.size();
  if (r < 2)
    throw std::invalid_argument("sum_int_lhs: requires at least two entries");

  const long ar = a[r - 1];
  long head = 0;
  for (std::size_t i = 0; i + 1 < r; ++i)
    head += a[i];

  Rational total = 0;
  std::vector<long> parts(r); // parts[0] = b, parts[1..r-1] = b_1..b_{r-1}
  for_each_composition(ar, parts, 0, [&](const std::vector<long>& p) {
    Integer num = multinomial(ar, p);
    long bsum = 0;
    for (std::size_t i = 1; i < r; ++i) {
      num *= factorial(a[i - 1] + p[i]);
      bsum += p[i];
    }
    Rational term(num, factorial(head + bsum + static_cast<long>(r) - 1));
    if (bsum % 2 == 0)
      total += term;
    else
      total -= term;
  });
  return total;
}

Rational sum_int_rhs(std::span<const long> a) {
  require_tuple(a, "sum_int_rhs");
  Integer num = 1;
  long sum = 0;
  for (long x : a) {
    num *= factorial(x);
    sum += x;
  }
  return Rational(num, factorial(sum + static_cast<long>(a.size()) - 1));
}

bool sum_int_identity_check(std::span<const long> a) {
  return sum_int_lhs(a) == sum_int_rhs(a);
}

} // namespace taut
