#ifndef TAUT_CHOW_HPP
#define TAUT_CHOW_HPP

#include <map>
#include <vector>

#include "taut/rational.hpp"

namespace taut {

/// Element of Q[h_1..h_n, h] / (h_1^{r+1}, .., h_n^{r+1}, h^{r+1}), the Chow
/// ring of (P^r)^n x (P^r)*. Exponent vectors have n+1 entries, the last one
/// for the dual hyperplane class h. Out-of-range monomials are never stored.
class TruncatedMultidegreePoly {
public:
  using Exponents = std::vector<int>;
  static constexpr int kMaxFactors = 8;

  TruncatedMultidegreePoly(int n, int r);

  static TruncatedMultidegreePoly one(int n, int r);
  /// h_i for 1 <= i <= n.
  static TruncatedMultidegreePoly point_hyperplane(int n, int r, int i);
  /// h on the dual factor.
  static TruncatedMultidegreePoly dual_hyperplane(int n, int r);

  int n() const { return n_; }
  int r() const { return r_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * monomial; silently dropped when an exponent exceeds r.
  void add_term(const Exponents& e, const Rational& c);
  Rational coefficient(const Exponents& e) const;

  /// Coefficient of h^e, as an element with zero dual exponent.
  TruncatedMultidegreePoly dual_coefficient(int e) const;

  TruncatedMultidegreePoly& operator+=(const TruncatedMultidegreePoly& o);
  friend TruncatedMultidegreePoly operator+(TruncatedMultidegreePoly a,
                                            const TruncatedMultidegreePoly& b) {
    return a += b;
  }
  friend bool operator==(const TruncatedMultidegreePoly&, const TruncatedMultidegreePoly&) = default;

private:
  void check_shape(const TruncatedMultidegreePoly& o) const;
  friend TruncatedMultidegreePoly truncated_multiply(const TruncatedMultidegreePoly&,
                                                     const TruncatedMultidegreePoly&);

  int n_;
  int r_;
  std::map<Exponents, Rational> terms_;
};

/// Product with exponent-overflow terms discarded. Shapes must agree.
TruncatedMultidegreePoly truncated_multiply(const TruncatedMultidegreePoly& x,
                                            const TruncatedMultidegreePoly& y);

/// Pushdown of the incidence class prod_i (h_i + h) to (P^r)^n, read off as
/// the coefficient of h^r. For r > n this coefficient is zero.
TruncatedMultidegreePoly incidence_class_pushdown(int n, int r);

/// sum over I subset {1..n}, |I| = n - r, of prod_{a in I} h_a. Needs 0 <= r <= n.
TruncatedMultidegreePoly hyperplane_class_formula(int n, int r);

} // namespace taut

#endif // TAUT_CHOW_HPP
