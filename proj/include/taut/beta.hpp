#ifndef TAUT_BETA_HPP
#define TAUT_BETA_HPP

#include <span>
#include <vector>

#include "taut/rational.hpp"

namespace taut {

/// beta(d; a_1..a_r) = sum over (i_1..i_r) in [1,d]^r of
///   (-1)^{i_1+..+i_r} binom(d, i_1+..+i_r) i_1^{a_1} ... i_r^{a_r},
/// with 0^0 = 1. Evaluated by the direct nested sum, pruning branches once
/// the partial sum of the i_u exceeds d (the binomial is zero past that).
Integer beta(long d, std::span<const long> a);

/// Closed form for a single exponent: (-1)^d d! {a, d}. Agrees with beta(d, {a})
/// for a >= 1; at a = 0 the direct sum is -1 since it starts at i = 1.
Integer beta_r1_stirling(long d, long a);

/// Product of factorials of the run lengths of a nondecreasing list of
/// positive integers, i.e. the number of permutations fixing the list.
Integer gamma_multiplicity(std::span<const long> sorted_values);

/// Brute-force sum over (i_1..i_n) >= 0 with i_1+..+i_n <= s of
/// i_1^{a_1} ... i_n^{a_n}.
Integer monomial_sum_oracle(long s, std::span<const long> a);

struct LeadingTermReport {
  long degree = 0;          // sum(a) + n
  Rational leading;         // observed: (degree-th finite difference) / degree!
  Rational expected;        // prod(a_i!) / degree!
  bool holds = false;       // constant difference matches and next difference vanishes
};

/// Samples s -> monomial_sum_oracle(s, a) on s = 0..s_max and checks that it
/// behaves as a polynomial of degree sum(a)+n with leading coefficient
/// prod(a_i!)/(n+sum(a))!. Needs s_max >= sum(a)+n+2.
LeadingTermReport monomial_sum_leading_term(std::span<const long> a, long s_max);

bool monomial_sum_leading_check(std::span<const long> a, long s_max);

/// Both sides of the alternating multinomial summation identity used to
/// evaluate beta at the threshold: sum over b + b_1 + .. + b_{r-1} = a_r of
///   multinomial(a_r; b, b_1..) (-1)^{sum b_i} prod_{i<r}(a_i+b_i)! / (sum_{i<r}(a_i+b_i) + r-1)!
/// against prod(a_i!) / (sum(a_i) + r - 1)!. Requires r >= 2.
Rational sum_int_lhs(std::span<const long> a);
Rational sum_int_rhs(std::span<const long> a);
bool sum_int_identity_check(std::span<const long> a);

} // namespace taut

#endif // TAUT_BETA_HPP
