#include "taut/taut_ring.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "taut/beta.hpp"
#include "taut/combinatorics.hpp"

namespace taut {

TautMonomial::TautMonomial(long genus, std::vector<long> indices)
    : genus_(genus), indices_(std::move(indices)) {
  if (genus_ < 1)
    throw std::invalid_argument("TautMonomial: genus must be positive");
  if (factor_count() > genus_)
    throw std::invalid_argument("TautMonomial: more than g factors is the zero class");
  for (long i : indices_)
    if (i < 0 || i >= genus_)
      throw std::invalid_argument("TautMonomial: index " + std::to_string(i) +
                                  " outside [0, g-1]");
  std::sort(indices_.begin(), indices_.end());
}

long TautMonomial::index_sum() const {
  return std::accumulate(indices_.begin(), indices_.end(), 0L);
}

GradedLabel graded_label(const TautMonomial& m) {
  return {m.codim(), m.index_sum()};
}

GradedLabel fourier_label(GradedLabel l, long g) {
  return {g - l.codim + l.index, l.index};
}

TautPolynomial::TautPolynomial(long genus) : genus_(genus) {
  if (genus_ < 1)
    throw std::invalid_argument("TautPolynomial: genus must be positive");
}

TautPolynomial TautPolynomial::monomial(const TautMonomial& m, const Rational& c) {
  TautPolynomial p(m.genus());
  p.add_term(m, c);
  return p;
}

Rational TautPolynomial::coefficient(const TautMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TautPolynomial::add_term(const TautMonomial& m, const Rational& c) {
  if (m.genus() != genus_)
    throw std::invalid_argument("TautPolynomial: genus mismatch");
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

TautPolynomial& TautPolynomial::operator+=(const TautPolynomial& o) {
  if (o.genus_ != genus_)
    throw std::invalid_argument("TautPolynomial: genus mismatch");
  for (const auto& [m, c] : o.terms_)
    add_term(m, c);
  return *this;
}

TautPolynomial& TautPolynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_)
    v *= c;
  return *this;
}

std::optional<GradedLabel> TautPolynomial::homogeneous_label() const {
  if (terms_.empty())
    return std::nullopt;
  GradedLabel first = graded_label(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (graded_label(m) != first)
      return std::nullopt;
  return first;
}

TautPolynomial TautPolynomial::graded_part(long s) const {
  TautPolynomial out(genus_);
  for (const auto& [m, c] : terms_)
    if (m.index_sum() == s)
      out.terms_.emplace(m, c);
  return out;
}

TautPolynomial pontryagin_product(const TautPolynomial& x, const TautPolynomial& y) {
  if (x.genus() != y.genus())
    throw std::invalid_argument("pontryagin_product: genus mismatch");
  const long g = x.genus();
  TautPolynomial out(g);
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [my, cy] : y.terms()) {
      if (mx.factor_count() + my.factor_count() > g)
        continue;
      std::vector<long> idx = mx.indices();
      idx.insert(idx.end(), my.indices().begin(), my.indices().end());
      out.add_term(TautMonomial(g, std::move(idx)), cx * cy);
    }
  }
  return out;
}

bool is_rational_multiple(const TautPolynomial& x, const TautPolynomial& y) {
  if (x.genus() != y.genus())
    return false;
  if (x.is_zero() || y.is_zero())
    return x.is_zero() && y.is_zero();
  if (x.size() != y.size())
    return false;
  const Rational ratio = x.terms().begin()->second / y.terms().begin()->second;
  return x == y * ratio;
}

TautPolynomial normalize_relation(const TautPolynomial& p) {
  if (p.is_zero())
    return p;
  // Scale by the lcm of denominators to reach integers, then divide by the gcd.
  Integer den_lcm = 1;
  for (const auto& [m, c] : p.terms())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
  Integer num_gcd = 0;
  for (const auto& [m, c] : p.terms()) {
    Integer v = c.numerator() * (den_lcm / c.denominator());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  if (p.terms().begin()->second.sign() < 0)
    scale = -scale;
  return p * scale;
}

TautPolynomial relation_raw(long g, long r, long d, long s) {
  if (g < 2)
    throw std::invalid_argument("relation: genus must be >= 2");
  if (r < 1 || r > d)
    throw std::invalid_argument("relation: need 1 <= r <= d");
  if (s < 0)
    throw std::invalid_argument("relation: s must be nonnegative");

  TautPolynomial out(g);
  if (r > g)
    return out; // every monomial has more than g factors

  std::vector<long> a(r);
  std::vector<long> shifted(r);
  std::function<void(long, long)> walk = [&](long pos, long remaining) {
    if (pos == r - 1) {
      if (remaining >= g)
        return;
      a[pos] = remaining;
      for (long u = 0; u < r; ++u)
        shifted[u] = a[u] + 1;
      Integer coeff = beta(d, shifted);
      if (coeff != 0)
        out.add_term(TautMonomial(g, a), Rational(coeff));
      return;
    }
    for (long x = 0; x <= remaining && x < g; ++x) {
      a[pos] = x;
      walk(pos + 1, remaining - x);
    }
  };
  walk(0, s);
  return out;
}

TautPolynomial generate_relation(long g, long r, long d, long s) {
  return normalize_relation(relation_raw(g, r, d, s));
}

TautPolynomial multiplied_curve_class(long g, long i) {
  TautPolynomial out(g);
  for (long a = 0; a < g; ++a)
    out.add_term(TautMonomial(g, {a}), Rational(power(i, static_cast<unsigned long>(a + 2))));
  return out;
}

TautPolynomial generate_relation_via_pencils(long g, long r, long d, long s) {
  if (g < 2)
    throw std::invalid_argument("relation: genus must be >= 2");
  if (r < 1 || r > d)
    throw std::invalid_argument("relation: need 1 <= r <= d");
  if (s < 0)
    throw std::invalid_argument("relation: s must be nonnegative");

  std::vector<TautPolynomial> curve_class;
  for (long i = 0; i <= d; ++i)
    curve_class.push_back(multiplied_curve_class(g, i));

  TautPolynomial total(g);
  TautPolynomial unit = TautPolynomial::monomial(TautMonomial(g, {}));
  std::function<void(long, long, Integer, const TautPolynomial&)> walk =
      [&](long pos, long partial, Integer denom, const TautPolynomial& acc) {
        if (pos == r) {
          Rational c(binomial(d, partial), denom);
          if ((partial + r) % 2 != 0)
            c = -c;
          total += acc * c;
          return;
        }
        for (long i = 1; partial + i <= d; ++i)
          walk(pos + 1, partial + i, denom * i, pontryagin_product(acc, curve_class[i]));
      };
  walk(0, 0, Integer(1), unit);
  return total.graded_part(s);
}

std::set<long> cvg_vanishing_indices(long d_pencil, long g) {
  if (d_pencil < 2)
    throw std::invalid_argument("cvg_vanishing_indices: pencil degree must be >= 2");
  std::set<long> out;
  for (long i = d_pencil - 1; i <= g - 1; ++i)
    out.insert(i);
  return out;
}

TautPolynomial reduce_mod_vanishing(const TautPolynomial& p, const std::set<long>& vanished) {
  TautPolynomial kept(p.genus());
  for (const auto& [m, c] : p.terms()) {
    bool touches = std::any_of(m.indices().begin(), m.indices().end(),
                               [&](long i) { return vanished.count(i) > 0; });
    if (!touches)
      kept.add_term(m, c);
  }
  return normalize_relation(kept);
}

RewriteResult polishchuk_rewrite(long g, std::span<const long> n) {
  if (n.empty())
    throw std::domain_error("polishchuk_rewrite: empty index list");
  long total = 0;
  for (long x : n) {
    if (x < 1)
      throw std::domain_error("polishchuk_rewrite: indices must be >= 1");
    total += x;
  }
  const long k = static_cast<long>(n.size());
  const long source_power = g - 1 - total;
  const long target_power = g + k - 2 - total;
  const long target_index = total - k + 1;
  if (source_power < 0)
    throw std::domain_error("polishchuk_rewrite: g - 1 - sum(n) is negative");
  if (target_index < 0 || target_index > g - 1)
    throw std::domain_error("polishchuk_rewrite: target index outside [0, g-1]");
  if (target_power + 1 > g)
    throw std::domain_error("polishchuk_rewrite: target has more than g factors");

  Integer den = factorial(target_power);
  Integer num = factorial(source_power) * factorial(total);
  for (long x : n)
    den *= factorial(x);
  Rational scalar(num, den);
  if ((k - 1) % 2 != 0)
    scalar = -scalar;

  std::vector<long> idx(static_cast<std::size_t>(target_power), 0);
  idx.push_back(target_index);
  return {scalar, TautMonomial(g, std::move(idx))};
}

Rational monomial_coefficient(long r, long d, long g) {
  if (r < 1)
    throw std::invalid_argument("monomial_coefficient: r must be positive");
  if (g + r - d - 2 < 0)
    throw std::invalid_argument("monomial_coefficient: need g + r - d - 2 >= 0");
  if (d < 2 * r)
    throw std::invalid_argument("monomial_coefficient: need d >= 2r");
  Rational sum = 0;
  for (long t = 0; t <= r - 1; ++t) {
    Rational term(factorial(t + g + r - d - 2) * factorial(d - r + 1 - t) *
                      binomial(d - 2 * r, d - 3 * r + 1 + t),
                  factorial(r - t) * factorial(t));
    if ((r + t) % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

Integer compositions_count(long m, long parts) {
  if (m < 0 || parts < 0)
    throw std::invalid_argument("compositions_count: arguments must be nonnegative");
  return binomial(m + parts - 1, m);
}

} // namespace taut
