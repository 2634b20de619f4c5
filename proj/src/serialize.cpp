#include "taut/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace taut {

using nlohmann::json;

json to_json(const TautPolynomial& p, std::optional<GradedLabel> label) {
  json out;
  out["genus"] = p.genus();
  if (!label)
    label = p.homogeneous_label();
  if (label)
    out["grading"] = {{"codim", label->codim}, {"index", label->index}};
  else
    out["grading"] = nullptr;
  json terms = json::array();
  for (const auto& [m, c] : p.terms())
    terms.push_back({{"indices", m.indices()}, {"coeff", c.str()}});
  out["terms"] = std::move(terms);
  return out;
}

TautPolynomial taut_polynomial_from_json(const json& j) {
  try {
    TautPolynomial p(j.at("genus").get<long>());
    for (const auto& t : j.at("terms")) {
      TautMonomial m(p.genus(), t.at("indices").get<std::vector<long>>());
      if (p.terms().count(m))
        throw std::invalid_argument("duplicate monomial");
      p.add_term(m, Rational::parse(t.at("coeff").get<std::string>()));
    }
    return p;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("taut polynomial json: ") + e.what());
  } catch (const std::domain_error& e) {
    throw std::invalid_argument(std::string("taut polynomial json: ") + e.what());
  }
}

std::string render_monomial(const TautMonomial& m) {
  const auto& idx = m.indices();
  if (idx.empty())
    return "1";
  std::ostringstream os;
  for (std::size_t k = 0; k < idx.size();) {
    std::size_t run = 1;
    while (k + run < idx.size() && idx[k + run] == idx[k])
      ++run;
    if (k > 0)
      os << '*';
    os << "C(" << idx[k] << ')';
    if (run > 1)
      os << '^' << run;
    k += run;
  }
  return os.str();
}

std::string render_polynomial(const TautPolynomial& p) {
  if (p.is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (first)
      os << (c.sign() < 0 ? "-" : "");
    else
      os << (c.sign() < 0 ? " - " : " + ");
    first = false;
    bool unit = m.indices().empty();
    if (mag != Rational(1) || unit) {
      os << mag.short_str();
      if (!unit)
        os << '*';
    }
    if (!unit)
      os << render_monomial(m);
  }
  return os.str();
}

std::string render_relation(const TautPolynomial& p) {
  if (p.is_zero())
    return "0 = 0 (trivial)";
  return render_polynomial(p) + " = 0";
}

} // namespace taut
