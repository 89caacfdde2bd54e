#include "doctest.h"
#include "macd/root_system.hpp"
#include "macd/table1.hpp"

using namespace macd;

TEST_CASE("cartan type validation") {
  CHECK_NOTHROW(CartanType('A', 1));
  CHECK_THROWS_AS(CartanType('B', 1), invalid_cartan_type);
  CHECK_THROWS_AS(CartanType('D', 2), invalid_cartan_type);
  CHECK_THROWS_AS(CartanType('E', 9), invalid_cartan_type);
  CHECK_THROWS_AS(CartanType('F', 3), invalid_cartan_type);
  CHECK_THROWS_AS(CartanType('G', 3), invalid_cartan_type);
  CHECK_THROWS_AS(CartanType('H', 3), invalid_cartan_type);
  CHECK(CartanType::parse("b3") == CartanType('B', 3));
  CHECK(CartanType('B', 4).dual() == CartanType('C', 4));
}

TEST_CASE("root counts and lengths for the classical examples") {
  auto a2 = build_root_system(CartanType('A', 2));
  CHECK(a2->positive_roots().size() == 3);
  CHECK_FALSE(a2->two_lengths());

  auto b2 = build_root_system(CartanType('B', 2));
  CHECK(b2->positive_roots().size() == 4);  // 8 roots
  CHECK(b2->two_lengths());
  CHECK(b2->norm2_short() == Rational(2));
  CHECK(b2->norm2_long() == Rational(4));

  auto g2 = build_root_system(CartanType('G', 2));
  CHECK(g2->positive_roots().size() == 6);  // 12 roots
  CHECK(g2->cartan()(0, 0) == 2);
  CHECK(g2->cartan()(0, 1) == -1);
  CHECK(g2->cartan()(1, 0) == -3);
  CHECK(g2->cartan()(1, 1) == 2);
  CHECK(g2->norm2_short() == Rational(2));
  CHECK(g2->norm2_long() == Rational(6));
}

TEST_CASE("every positive root is a nonnegative combination of simples") {
  for (auto t : {CartanType('A', 3), CartanType('C', 3), CartanType('D', 4),
                 CartanType('F', 4), CartanType('G', 2)}) {
    auto sys = build_root_system(t);
    CHECK(sys->positive_roots().size() ==
          static_cast<size_t>(t.positive_root_count()));
    for (const auto& r : sys->positive_roots()) {
      CHECK(coords_nonneg(r.simple_coeffs));
      CHECK(!coords_is_zero(r.simple_coeffs));
    }
  }
}

TEST_CASE("weyl vector: sum of fundamental weights equals half sum of positive roots") {
  for (const auto& t : table1_reference_types()) {
    auto sys = build_root_system(t);
    VecQ rho_w(sys->ambient_dim());
    for (int i = 0; i < sys->ambient_dim(); ++i) rho_w[i] = Rational(0);
    for (int k = 0; k < sys->rank(); ++k)
      for (int i = 0; i < sys->ambient_dim(); ++i) rho_w[i] += sys->fundamental_weights()(i, k);
    VecQ rho_r = sys->half_sum(0);
    for (int i = 0; i < sys->ambient_dim(); ++i) rho_r[i] += sys->half_sum(1)[i];
    for (int i = 0; i < sys->ambient_dim(); ++i) CHECK(rho_w[i] == rho_r[i]);
  }
}

TEST_CASE("dual system aligns coroots with the primal indexing") {
  for (auto t : {CartanType('B', 3), CartanType('C', 2), CartanType('F', 4),
                 CartanType('G', 2), CartanType('A', 2)}) {
    auto sys = build_root_system(t);
    auto dual = sys->dual_system();
    CHECK(dual->type() == t.dual());
    REQUIRE(dual->positive_roots().size() == sys->positive_roots().size());
    for (size_t r = 0; r < sys->positive_roots().size(); ++r) {
      const Root& al = sys->positive_roots()[r];
      const Root& co = dual->positive_roots()[r];
      // co = 2 alpha / <alpha,alpha>
      for (int i = 0; i < sys->ambient_dim(); ++i)
        CHECK(co.ambient[i] == al.ambient[i] * Rational(2) / al.norm2);
      CHECK(co.tclass == al.tclass);  // multiplicity class inherited
    }
    // double dual reproduces the primal roots
    auto dd = dual->dual_system();
    for (size_t r = 0; r < sys->positive_roots().size(); ++r)
      for (int i = 0; i < sys->ambient_dim(); ++i)
        CHECK(dd->positive_roots()[r].ambient[i] == sys->positive_roots()[r].ambient[i]);
  }
}

TEST_CASE("weyl group orders") {
  CHECK(CartanType('A', 2).weyl_order() == 6);
  CHECK(CartanType('B', 2).weyl_order() == 8);
  CHECK(CartanType('D', 4).weyl_order() == 192);
  CHECK(CartanType('G', 2).weyl_order() == 12);
  CHECK(CartanType('F', 4).weyl_order() == 1152);
  CHECK(CartanType('E', 8).weyl_order() == 696729600);
}
