#ifndef TAUT_TAUT_RING_HPP
#define TAUT_TAUT_RING_HPP

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "taut/rational.hpp"

namespace taut {

/// Bigrading (codimension, Beauville index) of a homogeneous class.
struct GradedLabel {
  long codim = 0;
  long index = 0;
  friend auto operator<=>(const GradedLabel&, const GradedLabel&) = default;
};

/// Pontryagin monomial C_(i_1) * ... * C_(i_k) on the Jacobian of a genus g
/// curve. Indices are kept sorted; every index lies in [0, g-1] and k <= g
/// (a product with more than g factors is the zero class and cannot be
/// represented). The empty monomial is the unit.
class TautMonomial {
public:
  TautMonomial(long genus, std::vector<long> indices);

  long genus() const { return genus_; }
  const std::vector<long>& indices() const { return indices_; }
  long factor_count() const { return static_cast<long>(indices_.size()); }
  long codim() const { return genus_ - factor_count(); }
  long index_sum() const;

  /// Ordered by genus, then lexicographically on the sorted index list.
  friend auto operator<=>(const TautMonomial&, const TautMonomial&) = default;

private:
  long genus_;
  std::vector<long> indices_;
};

GradedLabel graded_label(const TautMonomial& m);

/// Fourier transform on labels: (p, i) -> (g - p + i, i).
GradedLabel fourier_label(GradedLabel l, long g);

/// Rational combination of Pontryagin monomials of a fixed genus. Zero
/// coefficients are never stored; iteration is in canonical monomial order.
class TautPolynomial {
public:
  using Terms = std::map<TautMonomial, Rational>;

  explicit TautPolynomial(long genus);
  static TautPolynomial monomial(const TautMonomial& m, const Rational& c = 1);

  long genus() const { return genus_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const TautMonomial& m) const;
  void add_term(const TautMonomial& m, const Rational& c);

  TautPolynomial& operator+=(const TautPolynomial& o);
  TautPolynomial& operator*=(const Rational& c);
  friend TautPolynomial operator+(TautPolynomial a, const TautPolynomial& b) { return a += b; }
  friend TautPolynomial operator*(TautPolynomial a, const Rational& c) { return a *= c; }
  friend bool operator==(const TautPolynomial&, const TautPolynomial&) = default;

  /// Label shared by all terms, or nullopt when zero or inhomogeneous.
  std::optional<GradedLabel> homogeneous_label() const;

  /// Part of Beauville index s.
  TautPolynomial graded_part(long s) const;

private:
  long genus_;
  Terms terms_;
};

/// Bilinear extension of multiset union. Terms with more than g factors vanish.
TautPolynomial pontryagin_product(const TautPolynomial& x, const TautPolynomial& y);

/// True when x = c * y for some nonzero rational c, or both are zero.
bool is_rational_multiple(const TautPolynomial& x, const TautPolynomial& y);

/// Scales p to a primitive integer vector whose first (lexicographically
/// smallest) coefficient is positive. Zero stays zero.
TautPolynomial normalize_relation(const TautPolynomial& p);

/// Unnormalized relation in codimension g-r and index s coming from a
/// base point free g^r_d: sum over ordered (a_1..a_r) >= 0 with sum s of
/// beta(d; a_1+1, .., a_r+1) C_(a_1) * .. * C_(a_r). Tuples reaching an
/// index >= g contribute nothing.
TautPolynomial relation_raw(long g, long r, long d, long s);

/// normalize_relation(relation_raw(g, r, d, s)).
TautPolynomial generate_relation(long g, long r, long d, long s);

/// Same relation reached through the pushforwards of multiples of the curve:
/// sum over ordered (i_1..i_r) in [1,d]^r of
///   (-1)^{i_1+..+i_r + r} / (i_1...i_r) * binom(d, i_1+..+i_r) (i_1)_*C * .. * (i_r)_*C
/// with (i)_*C = sum_a i^{a+2} C_(a), projected to index s. Not normalized.
TautPolynomial generate_relation_via_pencils(long g, long r, long d, long s);

/// The class (i)_*C = sum_{a=0}^{g-1} i^{a+2} C_(a).
TautPolynomial multiplied_curve_class(long g, long i);

/// {i : d_pencil - 1 <= i <= g - 1}: components killed by a g^1_{d_pencil}.
std::set<long> cvg_vanishing_indices(long d_pencil, long g);

/// Drops every monomial touching a vanished index, then normalizes.
TautPolynomial reduce_mod_vanishing(const TautPolynomial& p, const std::set<long>& vanished);

struct RewriteResult {
  Rational scalar;
  TautMonomial target;
};

/// C_(0)^{g-1-N} * C_(n_1) * .. * C_(n_k), N = sum n_i, rewritten as
///   (-1)^{k-1} (g-1-N)!/(g+k-2-N)! * N!/prod(n_i!) * C_(0)^{g+k-2-N} * C_(N-k+1).
/// Throws std::domain_error when the rewrite does not apply (some n_i < 1,
/// g-1-N < 0, target index outside [0, g-1], or more than g target factors).
RewriteResult polishchuk_rewrite(long g, std::span<const long> n);

/// sum_{t=0}^{r-1} (-1)^{r+t} (t+g+r-d-2)! (d-r+1-t)! / ((r-t)! t!) * binom(d-2r, d-3r+1+t):
/// the coefficient of the monomial relation on C_(0)^{g+2r-d-3} * C_(d-2r+1).
/// Requires g+r-d-2 >= 0 and d >= 2r.
Rational monomial_coefficient(long r, long d, long g);

/// Weak compositions of m into `parts` nonnegative parts: binom(m+parts-1, m).
Integer compositions_count(long m, long parts);

} // namespace taut

#endif // TAUT_TAUT_RING_HPP
