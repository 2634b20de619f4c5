#include "taut/secants.hpp"

#include <stdexcept>

#include "taut/combinatorics.hpp"
#include "taut/taut_ring.hpp"

namespace taut {

void LinearSystemSignature::validate() const {
  if (r < 1 || d < r || g < 0)
    throw std::invalid_argument("linear system: need r >= 1, d >= r, g >= 0");
}

Rational secant_count_A(long r, long d, long g) {
  const long denom = d - 2 * r + 2;
  if (denom == 0)
    throw std::domain_error("secant_count_A: undefined for d = 2r - 2");
  Rational sum = 0;
  for (long i = 0; i <= r - 1; ++i) {
    Integer v = binomial(i + g + r - d - 2, i) * binomial(d - 2 * r, r - 1 - i) *
                binomial(d - r + 1 - i, r - i);
    if (i % 2 == 0)
      sum += Rational(v);
    else
      sum -= Rational(v);
  }
  return sum / Rational(denom);
}

Rational castelnuovo_B(long r, long d, long g) {
  Rational sum = 0;
  for (long i = 0; i <= r - 1; ++i) {
    Rational term(binomial(d - r - i + 1, r - 1 - i) * binomial(d - r - i, r - 1 - i) *
                      binomial(g, i),
                  Integer(r - i));
    if (i % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

Rational cayley_quadrisecants(long d, long g) {
  Rational first(Integer(d - 2) * (d - 3) * (d - 3) * (d - 4), Integer(12));
  Rational second(Integer(g) * (d * d - 7 * d + 13 - g), Integer(2));
  return first - second;
}

bool verify_A_equals_B(long r) {
  if (r < 1 || r > 6)
    throw std::invalid_argument("verify_A_equals_B: r must lie in [1, 6]");
  for (long d = 2 * r; d <= 5 * r + 6; ++d)
    for (long g = 0; g <= 3 * r + 6; ++g)
      if (secant_count_A(r, d, g) != castelnuovo_B(r, d, g))
        return false;
  return true;
}

long induced_pencil_degree(const LinearSystemSignature& s) {
  s.validate();
  return secant_count_A(s.r, s.d, s.g).is_zero() ? s.d - s.r + 1 : s.d - 2 * s.r + 2;
}

std::set<long> vanishing_report(const LinearSystemSignature& s) {
  return cvg_vanishing_indices(induced_pencil_degree(s), s.g);
}

} // namespace taut
