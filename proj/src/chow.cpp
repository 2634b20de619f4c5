#include "taut/chow.hpp"

#include <stdexcept>
#include <string>

namespace taut {

TruncatedMultidegreePoly::TruncatedMultidegreePoly(int n, int r) : n_(n), r_(r) {
  if (n < 0 || n > kMaxFactors)
    throw std::invalid_argument("TruncatedMultidegreePoly: n must lie in [0, " +
                                std::to_string(kMaxFactors) + "]");
  if (r < 0)
    throw std::invalid_argument("TruncatedMultidegreePoly: r must be nonnegative");
}

TruncatedMultidegreePoly TruncatedMultidegreePoly::one(int n, int r) {
  TruncatedMultidegreePoly p(n, r);
  p.add_term(Exponents(n + 1, 0), 1);
  return p;
}

TruncatedMultidegreePoly TruncatedMultidegreePoly::point_hyperplane(int n, int r, int i) {
  if (i < 1 || i > n)
    throw std::invalid_argument("point_hyperplane: factor index out of range");
  TruncatedMultidegreePoly p(n, r);
  Exponents e(n + 1, 0);
  e[i - 1] = 1;
  p.add_term(e, 1);
  return p;
}

TruncatedMultidegreePoly TruncatedMultidegreePoly::dual_hyperplane(int n, int r) {
  TruncatedMultidegreePoly p(n, r);
  Exponents e(n + 1, 0);
  e[n] = 1;
  p.add_term(e, 1);
  return p;
}

void TruncatedMultidegreePoly::add_term(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != n_ + 1)
    throw std::invalid_argument("TruncatedMultidegreePoly: exponent vector has wrong length");
  for (int x : e) {
    if (x < 0)
      throw std::invalid_argument("TruncatedMultidegreePoly: negative exponent");
    if (x > r_)
      return;
  }
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

Rational TruncatedMultidegreePoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

TruncatedMultidegreePoly TruncatedMultidegreePoly::dual_coefficient(int e) const {
  TruncatedMultidegreePoly out(n_, r_);
  for (const auto& [exps, c] : terms_) {
    if (exps[n_] != e)
      continue;
    Exponents stripped = exps;
    stripped[n_] = 0;
    out.add_term(stripped, c);
  }
  return out;
}

void TruncatedMultidegreePoly::check_shape(const TruncatedMultidegreePoly& o) const {
  if (o.n_ != n_ || o.r_ != r_)
    throw std::invalid_argument("TruncatedMultidegreePoly: shape mismatch");
}

TruncatedMultidegreePoly& TruncatedMultidegreePoly::operator+=(const TruncatedMultidegreePoly& o) {
  check_shape(o);
  for (const auto& [e, c] : o.terms_)
    add_term(e, c);
  return *this;
}

TruncatedMultidegreePoly truncated_multiply(const TruncatedMultidegreePoly& x,
                                            const TruncatedMultidegreePoly& y) {
  x.check_shape(y);
  TruncatedMultidegreePoly out(x.n_, x.r_);
  TruncatedMultidegreePoly::Exponents e(x.n_ + 1);
  for (const auto& [ex, cx] : x.terms_) {
    for (const auto& [ey, cy] : y.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k)
        e[k] = ex[k] + ey[k];
      out.add_term(e, cx * cy);
    }
  }
  return out;
}

TruncatedMultidegreePoly incidence_class_pushdown(int n, int r) {
  if (r < 0)
    throw std::invalid_argument("incidence_class_pushdown: r must be nonnegative");
  auto incidence = TruncatedMultidegreePoly::one(n, r);
  const auto h = TruncatedMultidegreePoly::dual_hyperplane(n, r);
  for (int i = 1; i <= n; ++i)
    incidence = truncated_multiply(
        incidence, TruncatedMultidegreePoly::point_hyperplane(n, r, i) + h);
  return incidence.dual_coefficient(r);
}

TruncatedMultidegreePoly hyperplane_class_formula(int n, int r) {
  if (r < 0 || r > n)
    throw std::invalid_argument("hyperplane_class_formula: need 0 <= r <= n");
  TruncatedMultidegreePoly out(n, r);
  const int size = n - r;
  // Subsets of {1..n} as bitmasks; n <= 8 keeps this tiny.
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != size)
      continue;
    TruncatedMultidegreePoly::Exponents e(n + 1, 0);
    for (int a = 0; a < n; ++a)
      if (mask & (1u << a))
        e[a] = 1;
    out.add_term(e, 1);
  }
  return out;
}

} // namespace taut
