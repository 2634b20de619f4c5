#include "taut/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace taut {

Integer factorial(long n) {
  if (n < 0)
    throw std::invalid_argument("factorial: negative argument " + std::to_string(n));
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Integer binomial(long n, long k) {
  if (k < 0)
    return 0;
  // mpz_bin_ui handles negative n through (-1)^k binom(-n+k-1, k).
  Integer top(n);
  Integer out;
  mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

Integer multinomial(long n, std::span<const long> parts) {
  long sum = 0;
  for (long p : parts) {
    if (p < 0)
      throw std::invalid_argument("multinomial: negative part");
    sum += p;
  }
  if (sum != n)
    throw std::invalid_argument("multinomial: parts sum to " + std::to_string(sum) +
                                ", expected " + std::to_string(n));
  Integer out = factorial(n);
  for (long p : parts)
    out /= factorial(p);
  return out;
}

namespace {

using StirlingTable = std::vector<std::vector<Integer>>;

StirlingTable build_stirling_table(long bound) {
  StirlingTable t(bound + 1, std::vector<Integer>(bound + 1, 0));
  t[0][0] = 1;
  for (long a = 1; a <= bound; ++a)
    for (long b = 1; b <= a; ++b)
      t[a][b] = b * t[a - 1][b] + t[a - 1][b - 1];
  return t;
}

const StirlingTable& stirling_cache() {
  static const StirlingTable table = build_stirling_table(kStirlingCacheBound);
  return table;
}

} // namespace

Integer stirling2(long a, long b) {
  if (a < 0 || b < 0)
    throw std::invalid_argument("stirling2: negative argument");
  if (b > a)
    return 0;
  if (a <= kStirlingCacheBound)
    return stirling_cache()[a][b];

  // Row-by-row recurrence; only columns 0..b are needed.
  std::vector<Integer> row(b + 1, 0);
  row[0] = 1;
  for (long i = 1; i <= a; ++i) {
    for (long j = std::min(i, b); j >= 1; --j)
      row[j] = j * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[b];
}

Integer stirling_alternating_sum(long i) {
  if (i < 1)
    throw std::invalid_argument("stirling_alternating_sum: i must be >= 1");
  Integer sum = 0;
  for (long j = 1; j <= i; ++j) {
    Integer term = factorial(j - 1) * stirling2(i, j);
    if ((j - 1) % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

Integer power(long base, unsigned long exp) {
  Integer out;
  Integer b(base);
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exp);
  return out;
}

} // namespace taut
