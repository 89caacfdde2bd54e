#pragma once

#include <string>
#include <vector>

#include "macd/small_weights.hpp"

namespace macd {

struct Table1Chain {
  std::vector<int> members;  // 1-based fundamental-weight indices, ascending in dominance
  bool from_zero = false;    // bottom of the chain is quasi-minuscule (covers 0)
};

struct Table1Row {
  std::string type;
  std::vector<int> small_fundamentals;  // 1-based, ascending index
  std::vector<Table1Chain> chains;
  int n_weights = 0;
  int n_chains = 0;

  friend bool operator==(const Table1Row& a, const Table1Row& b) {
    if (a.type != b.type || a.small_fundamentals != b.small_fundamentals ||
        a.n_weights != b.n_weights || a.n_chains != b.n_chains ||
        a.chains.size() != b.chains.size())
      return false;
    for (size_t i = 0; i < a.chains.size(); ++i)
      if (a.chains[i].members != b.chains[i].members ||
          a.chains[i].from_zero != b.chains[i].from_zero)
        return false;
    return true;
  }
};

/// Computed from the root system: small fundamental weights grouped into the
/// dominance chains given by the cosets of the root lattice, each totally
/// ordered. Chains are sorted by their lowest member index.
Table1Row small_fundamental_chains(const CartanType& t);

/// Hand-transcribed reference rows (the golden data).
Table1Row table1_reference(const CartanType& t);

/// The full reference type list used by the golden fixtures.
std::vector<CartanType> table1_reference_types();

}  // namespace macd
