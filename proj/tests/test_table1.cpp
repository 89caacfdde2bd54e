#include "doctest.h"
#include "macd/table1.hpp"

using namespace macd;

TEST_CASE("small fundamental chains match the reference for all listed types") {
  for (const auto& t : table1_reference_types()) {
    CAPTURE(t.str());
    Table1Row computed = small_fundamental_chains(t);
    Table1Row ref = table1_reference(t);
    CHECK(computed == ref);
  }
}

TEST_CASE("spot checks of chain structure") {
  Table1Row e8 = small_fundamental_chains(CartanType('E', 8));
  CHECK(e8.n_weights == 2);
  CHECK(e8.n_chains == 1);
  REQUIRE(e8.chains.size() == 1);
  CHECK(e8.chains[0].members == std::vector<int>{8, 1});
  CHECK(e8.chains[0].from_zero);

  Table1Row c4 = small_fundamental_chains(CartanType('C', 4));
  CHECK(c4.n_weights == 4);
  CHECK(c4.n_chains == 2);
  CHECK(c4.chains[0].members == std::vector<int>{1, 3});
  CHECK_FALSE(c4.chains[0].from_zero);
  CHECK(c4.chains[1].members == std::vector<int>{2, 4});
  CHECK(c4.chains[1].from_zero);

  Table1Row f4 = small_fundamental_chains(CartanType('F', 4));
  CHECK(f4.chains[0].members == std::vector<int>{4, 1});

  Table1Row e7 = small_fundamental_chains(CartanType('E', 7));
  CHECK(e7.n_weights == 4);
  CHECK(e7.n_chains == 2);

  Table1Row d5 = small_fundamental_chains(CartanType('D', 5));
  CHECK(d5.n_weights == 5);
  CHECK(d5.n_chains == 4);

  Table1Row a4 = small_fundamental_chains(CartanType('A', 4));
  CHECK(a4.n_weights == 4);
  CHECK(a4.n_chains == 4);
}
