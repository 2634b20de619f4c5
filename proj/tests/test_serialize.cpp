#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "taut/serialize.hpp"
#include "taut/taut_ring.hpp"

using namespace taut;
using nlohmann::json;

TEST_CASE("rendering") {
  TautPolynomial p(5);
  p.add_term(TautMonomial(5, {0, 2}), 3);
  p.add_term(TautMonomial(5, {1, 1}), 1);
  CHECK(render_polynomial(p) == "3*C(0)*C(2) + C(1)^2");
  CHECK(render_relation(p) == "3*C(0)*C(2) + C(1)^2 = 0");
  CHECK(render_relation(TautPolynomial(5)) == "0 = 0 (trivial)");
  CHECK(render_monomial(TautMonomial(5, {})) == "1");

  TautPolynomial q(9);
  q.add_term(TautMonomial(9, {1, 1, 2}), -2);
  q.add_term(TautMonomial(9, {0, 0, 3}), Rational(1, 2));
  CHECK(render_polynomial(q) == "1/2*C(0)^2*C(3) - 2*C(1)^2*C(2)");
}

TEST_CASE("json layout") {
  TautPolynomial p(5);
  p.add_term(TautMonomial(5, {1, 1}), 1);
  p.add_term(TautMonomial(5, {0, 2}), 3);
  json j = to_json(p);
  CHECK(j["genus"] == 5);
  CHECK(j["grading"]["codim"] == 3);
  CHECK(j["grading"]["index"] == 2);
  REQUIRE(j["terms"].size() == 2);
  CHECK(j["terms"][0]["indices"] == json::array({0, 2}));
  CHECK(j["terms"][0]["coeff"] == "3/1");
  CHECK(to_json(TautPolynomial(5))["grading"].is_null());
  CHECK(to_json(TautPolynomial(5), GradedLabel{3, 1})["grading"]["index"] == 1);
}

TEST_CASE("json rejects malformed documents") {
  auto bad = [](const char* text) { return taut_polynomial_from_json(json::parse(text)); };
  CHECK_THROWS_AS(bad(R"({"terms": []})"), std::invalid_argument);
  CHECK_THROWS_AS(bad(R"({"genus": 5})"), std::invalid_argument);
  CHECK_THROWS_AS(bad(R"({"genus": 5, "terms": [{"indices": [7], "coeff": "1/1"}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(bad(R"({"genus": 5, "terms": [{"indices": [1], "coeff": "1/0"}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(bad(R"({"genus": 5, "terms": [{"indices": [1], "coeff": 3}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(bad(R"({"genus": 5, "terms": [{"indices": [1], "coeff": "1"},
                                                {"indices": [1], "coeff": "2"}]})"),
                  std::invalid_argument);
}

TEST_CASE("property: json round trip of random polynomials") {
  std::mt19937 rng(8675309);
  for (int trial = 0; trial < 200; ++trial) {
    const long g = std::uniform_int_distribution<long>(1, 9)(rng);
    TautPolynomial p(g);
    const int terms = std::uniform_int_distribution<int>(0, 6)(rng);
    for (int t = 0; t < terms; ++t) {
      std::vector<long> idx(std::uniform_int_distribution<long>(0, g)(rng));
      for (long& x : idx)
        x = std::uniform_int_distribution<long>(0, g - 1)(rng);
      Rational c(std::uniform_int_distribution<long>(-50, 50)(rng),
                 std::uniform_int_distribution<long>(1, 12)(rng));
      p.add_term(TautMonomial(g, idx), c);
    }
    json j = to_json(p);
    CHECK(taut_polynomial_from_json(j) == p);
    CHECK(taut_polynomial_from_json(json::parse(j.dump())) == p);
    CHECK(to_json(taut_polynomial_from_json(j)).dump() == j.dump());
  }
}

TEST_CASE("round trip of generated relations") {
  for (long r = 1; r <= 3; ++r)
    for (long d = r; d <= 8; ++d) {
      const long g = 9, s = std::max(0L, d - 2 * r + 1);
      auto rel = generate_relation(g, r, d, s);
      CHECK(taut_polynomial_from_json(to_json(rel, GradedLabel{g - r, s})) == rel);
    }
}
