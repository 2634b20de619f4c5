#ifndef TAUT_COMBINATORICS_HPP
#define TAUT_COMBINATORICS_HPP

#include <span>

#include "taut/rational.hpp"

namespace taut {

/// n! for n >= 0; throws std::invalid_argument on negative input.
Integer factorial(long n);

/// Generalized binomial coefficient prod_{j<k}(n-j)/k!, defined for every
/// integer n. Zero whenever k < 0.
Integer binomial(long n, long k);

/// n!/prod(parts_i!). Throws if a part is negative or the parts do not sum to n.
Integer multinomial(long n, std::span<const long> parts);

/// Stirling number of the second kind {a, b}.
///
/// Values with a, b <= kStirlingCacheBound come from a table built once on
/// first use (65 x 65 entries, thread-safe initialization). Larger
/// arguments are computed by running the recurrence row by row for that
/// call only.
Integer stirling2(long a, long b);

inline constexpr long kStirlingCacheBound = 64;

/// sum_{j=1}^{i} (-1)^{j-1} (j-1)! {i, j}. Equals 1 at i = 1 and vanishes for i >= 2.
Integer stirling_alternating_sum(long i);

/// base^exp with the convention 0^0 = 1.
Integer power(long base, unsigned long exp);

} // namespace taut

#endif // TAUT_COMBINATORICS_HPP
