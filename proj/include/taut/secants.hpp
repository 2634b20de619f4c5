#ifndef TAUT_SECANTS_HPP
#define TAUT_SECANTS_HPP

#include <set>

#include "taut/rational.hpp"

namespace taut {

/// A linear system g^r_d on a genus g curve.
struct LinearSystemSignature {
  long r;
  long d;
  long g;

  /// Throws std::invalid_argument unless r >= 1, d >= r and g >= 0.
  void validate() const;
};

/// A(r,d,g) = sum_{i=0}^{r-1} (-1)^i/(d-2r+2) binom(i+g+r-d-2, i)
///            binom(d-2r, r-1-i) binom(d-r+1-i, r-i).
/// Throws std::domain_error when d = 2r-2.
Rational secant_count_A(long r, long d, long g);

/// Castelnuovo's count of (r-2)-planes meeting the curve in 2r-2 points:
/// sum_{i=0}^{r-1} (-1)^i/(r-i) binom(d-r-i+1, r-1-i) binom(d-r-i, r-1-i) binom(g, i).
Rational castelnuovo_B(long r, long d, long g);

/// Cayley's quadrisecant count (d-2)(d-3)^2(d-4)/12 - g(d^2-7d+13-g)/2.
Rational cayley_quadrisecants(long d, long g);

/// A(r,.,.) == B(r,.,.) on d in [2r, 5r+6], g in [0, 3r+6]. The grid is
/// wider than the degree of either side in d and in g, so agreement there
/// is agreement as polynomials. Needs 1 <= r <= 6.
bool verify_A_equals_B(long r);

/// Degree of the pencil obtained by projection: d-2r+2 when A(r,d,g) != 0
/// (project from a (2r-2)-secant (r-2)-plane), d-r+1 otherwise.
long induced_pencil_degree(const LinearSystemSignature& s);

/// Indices i <= g-1 with C_(i) known to vanish, via the induced pencil.
std::set<long> vanishing_report(const LinearSystemSignature& s);

} // namespace taut

#endif // TAUT_SECANTS_HPP
