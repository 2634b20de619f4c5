#include "taut/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace taut {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0)
    throw std::domain_error("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos)
      return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den < 0)
      throw std::invalid_argument("negative denominator");
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  }
}

std::string Rational::str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::short_str() const {
  return is_integer() ? q_.get_num().get_str() : str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero())
    throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::operator-() const {
  return Rational(mpq_class(-q_));
}

std::ostream& operator<<(std::ostream& os, const Rational& x) {
  return os << x.short_str();
}

} // namespace taut
