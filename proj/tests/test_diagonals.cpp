#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "taut/combinatorics.hpp"
#include "taut/diagonals.hpp"
#include "taut/taut_ring.hpp"

using namespace taut;

namespace {

PartitionBlock free_block(std::vector<int> e) { return {std::move(e), std::nullopt}; }
PartitionBlock pinned(std::vector<int> e, int label) { return {std::move(e), label}; }

} // namespace

TEST_CASE("set partitions") {
  for (int n = 1; n <= 7; ++n)
    for (int k = 1; k <= n; ++k) {
      auto parts = set_partitions(n, k);
      CHECK(parts.size() == oracle::stirling2(n, k).get_ui());
      std::set<OrderedPartition> unique(parts.begin(), parts.end());
      CHECK(unique.size() == parts.size());
    }
  CHECK(set_partitions(3, 4).empty());
}

TEST_CASE("decorated classes canonicalize") {
  DecoratedPartitionClass a(4, {pinned({4}, 2), free_block({3, 1}), pinned({2}, 2)});
  REQUIRE(a.blocks().size() == 2);
  CHECK(a.blocks()[0] == free_block({1, 3}));
  CHECK(a.blocks()[1] == pinned({2, 4}, 2));
  DecoratedPartitionClass again(4, a.blocks());
  CHECK(again == a);
  CHECK_THROWS_AS(DecoratedPartitionClass(3, {free_block({1, 2})}), std::invalid_argument);
  CHECK_THROWS_AS(DecoratedPartitionClass(2, {free_block({1, 2}), free_block({2})}),
                  std::invalid_argument);
}

TEST_CASE("truncated linear system classes") {
  auto base = truncated_system_class(6, 3, 3);
  REQUIRE(base.terms().size() == 1);
  CHECK(base.coefficient({{1, 1, 1}, 0}) == 1);

  auto c = truncated_system_class(3, 1, 3);
  CHECK(c.terms().size() == 3);
  CHECK(c.coefficient({{1}, 2}) == 3);
  CHECK(c.coefficient({{2}, 1}) == Rational(-3, 2));
  CHECK(c.coefficient({{3}, 0}) == Rational(1, 3));

  auto q = truncated_system_class(5, 2, 5);
  CHECK(q.terms().size() == 6);
  CHECK(q.coefficient({{1, 1}, 3}) == 10);
  CHECK(q.coefficient({{1, 2}, 2}) == -5);
  CHECK(q.coefficient({{2, 2}, 1}) == Rational(5, 4));
  CHECK(q.coefficient({{1, 3}, 1}) == Rational(5, 3));
  CHECK(q.coefficient({{1, 4}, 0}) == Rational(-1, 4));
  CHECK(q.coefficient({{2, 3}, 0}) == Rational(-1, 6));

  for (long d = 1; d <= 7; ++d)
    for (long r = 1; r <= d; ++r)
      for (long n = r; n <= d; ++n) {
        auto cls = truncated_system_class(d, r, n);
        for (const auto& [t, coeff] : cls.terms())
          CHECK(t.degree() == n);
      }
  CHECK_THROWS_AS(truncated_system_class(3, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(truncated_system_class(3, 0, 2), std::invalid_argument);
}

TEST_CASE("pushdown to the Jacobian") {
  const long g = 4;
  SymmetricClassSum d2(2);
  d2.add_term({{2}, 0}, 1);
  CHECK(jacobian_pushdown(d2, g) == multiplied_curve_class(g, 2));

  SymmetricClassSum d11(2);
  d11.add_term({{1, 1}, 0}, 1);
  auto c = multiplied_curve_class(g, 1);
  CHECK(jacobian_pushdown(d11, g) == pontryagin_product(c, c) * Rational(1, 2));

  SymmetricClassSum translated(3);
  translated.add_term({{2}, 1}, 1);
  CHECK(jacobian_pushdown(translated, g) == multiplied_curve_class(g, 2));
}

TEST_CASE("pullback along the addition map") {
  auto one = sigma_pullback_class(5, 2, 2);
  REQUIRE(one.terms().size() == 1);
  CHECK(one.coefficient(DecoratedPartitionClass(2, {free_block({1}), free_block({2})})) == 1);

  auto p = sigma_pullback_class(3, 1, 2);
  CHECK(p.terms().size() == 7);
  CHECK(p.coefficient(DecoratedPartitionClass(2, {free_block({1, 2})})) == -1);
  for (int label = 1; label <= 3; ++label) {
    CHECK(p.coefficient(DecoratedPartitionClass(2, {free_block({1}), pinned({2}, label)})) == 1);
    CHECK(p.coefficient(DecoratedPartitionClass(2, {pinned({1}, label), free_block({2})})) == 1);
  }
  CHECK(sigma_pullback_class(2, 1, 2).terms().size() == 5);
  CHECK_THROWS_AS(sigma_pullback_class(2, 1, 3), std::invalid_argument);
}

TEST_CASE("pushforward along the addition map") {
  PartitionClassSum p(4, 3);
  p.add_term(DecoratedPartitionClass(4, {free_block({1, 2}), free_block({3, 4})}), 1);
  auto s = sigma_pushforward(p);
  CHECK(s.coefficient({{2, 2}, 0}) == 2);

  PartitionClassSum singles(3, 3);
  singles.add_term(DecoratedPartitionClass(3, {free_block({1}), free_block({2}), free_block({3})}), 1);
  // Three blocks of equal size: multiplicity 3!, as forced by sigma_* sigma^* = n!.
  CHECK(sigma_pushforward(singles).coefficient({{1, 1, 1}, 0}) == 6);

  PartitionClassSum mixed(3, 3);
  mixed.add_term(DecoratedPartitionClass(3, {free_block({1, 3}), pinned({2}, 1)}), 1);
  mixed.add_term(DecoratedPartitionClass(3, {free_block({1, 3}), pinned({2}, 2)}), 1);
  CHECK(sigma_pushforward(mixed).coefficient({{2}, 1}) == 2);

  for (int d = 1; d <= 6; ++d)
    for (int r = 1; r <= d && r <= 5; ++r)
      for (int n = r; n <= d && n <= 5; ++n)
        CHECK_MESSAGE(sigma_pushforward(sigma_pullback_class(d, r, n)) ==
                          truncated_system_class(d, r, n) * Rational(factorial(n)),
                      "d=" << d << " r=" << r << " n=" << n);
}

TEST_CASE("pushforward along partition maps") {
  DecoratedPartitionClass c(2, {free_block({1}), pinned({2}, 4)});
  CHECK(psi_pushforward({{1}, {2}}, c) == c);
  CHECK(psi_pushforward({{1, 2}, {3}}, c) ==
        DecoratedPartitionClass(3, {free_block({1, 2}), pinned({3}, 4)}));

  auto merged = psi_pushforward({{1}, {2}, {3}}, DecoratedPartitionClass(3, {pinned({1}, 2), free_block({2}), pinned({3}, 2)}));
  CHECK(merged == DecoratedPartitionClass(3, {pinned({1, 3}, 2), free_block({2})}));
  CHECK(psi_pushforward({{3}, {1, 2}}, DecoratedPartitionClass(2, {free_block({1}), free_block({2})})) ==
        DecoratedPartitionClass(3, {free_block({1, 2}), free_block({3})}));

  CHECK_THROWS_AS(psi_pushforward({{1}, {1}}, c), std::invalid_argument);
  CHECK_THROWS_AS(psi_pushforward({{1}, {2}, {3}}, c), std::invalid_argument);
}

TEST_CASE("hyperplane pullback") {
  auto base = hyperplane_pullback_class(4, 2, 2);
  REQUIRE(base.terms().size() == 1);
  const int d = 3;
  auto p = hyperplane_pullback_class(d, 1, 2);
  CHECK(p.terms().size() == 2 * d);
  // Two pinned positions sharing a label merge into one pinned block.
  auto q = hyperplane_pullback_class(3, 1, 3);
  CHECK(q.coefficient(DecoratedPartitionClass(3, {pinned({1, 2}, 1), free_block({3})})) == 1);
  CHECK(q.terms().size() == 3 * 3 * 3);
  CHECK_THROWS_AS(hyperplane_pullback_class(2, 1, 3), std::invalid_argument);
}

TEST_CASE("recursion identity") {
  CHECK(verify_recursion(4, 2, 2));
  CHECK(verify_recursion(4, 1, 3));
  CHECK(verify_recursion(5, 2, 4));
  CHECK_THROWS_AS(verify_recursion(6, 1, 6), std::invalid_argument);
  CHECK_THROWS_AS(verify_recursion(3, 1, 4), std::invalid_argument);
}

TEST_CASE("json views") {
  auto j = to_json(truncated_system_class(3, 1, 3));
  CHECK(j["n"] == 3);
  CHECK(j["terms"].size() == 3);
  auto k = to_json(sigma_pullback_class(3, 1, 2));
  CHECK(k["terms"].size() == 7);
}
