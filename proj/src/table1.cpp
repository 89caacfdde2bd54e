#include "macd/table1.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace macd {

Table1Row small_fundamental_chains(const CartanType& t) {
  RootSystemPtr sys = build_root_system(t);
  const int n = sys->rank();
  Table1Row row;
  row.type = t.str();

  std::vector<int> small;  // 0-based
  std::vector<WeightClass> cls(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    Weight w = Weight::fundamental(sys, i);
    cls[static_cast<size_t>(i)] = classify_weight(w);
    if (is_small(cls[static_cast<size_t>(i)])) {
      small.push_back(i);
      row.small_fundamentals.push_back(i + 1);
    }
  }

  // Group by coset modulo the root lattice: the fractional parts of the
  // simple-root coefficient vector classify the coset.
  std::map<std::vector<Rational>, std::vector<int>> classes;
  for (int i : small) {
    Coords c = coords_zero(n);
    c[static_cast<size_t>(i)] = 1;
    VecQ coeffs = sys->simple_coeffs_of_weight(c);
    std::vector<Rational> frac;
    bool integral = true;
    for (int j = 0; j < n; ++j) {
      Rational f = coeffs[j] - Rational(coeffs[j].floor_long());
      if (!f.is_zero()) integral = false;
      frac.push_back(f);
    }
    (void)integral;
    classes[frac].push_back(i);
  }

  for (auto& [frac, members] : classes) {
    bool from_zero = true;
    for (const auto& f : frac)
      if (!f.is_zero()) from_zero = false;
    // Sort by dominance; each coset class of small fundamentals is a chain.
    std::vector<int> sorted = members;
    std::sort(sorted.begin(), sorted.end(), [&](int a, int b) {
      Weight wa = Weight::fundamental(sys, a), wb = Weight::fundamental(sys, b);
      bool ab = dominance_leq(wa, wb), ba = dominance_leq(wb, wa);
      if (!ab && !ba)
        throw std::logic_error("small fundamental weights in one coset are not a chain: " +
                               t.str());
      return ab && !ba;
    });
    for (size_t i = 0; i + 1 < sorted.size(); ++i) {
      Weight wa = Weight::fundamental(sys, sorted[i]);
      Weight wb = Weight::fundamental(sys, sorted[i + 1]);
      if (!dominance_leq(wa, wb))
        throw std::logic_error("coset class is not totally ordered: " + t.str());
    }
    if (from_zero) {
      // The table marks the root-lattice chain as starting above 0; its
      // bottom is the quasi-minuscule weight.
      Weight bottom = Weight::fundamental(sys, sorted.front());
      if (classify_weight(bottom) != WeightClass::quasi_minuscule)
        throw std::logic_error("root-lattice chain bottom is not quasi-minuscule: " + t.str());
    }
    Table1Chain chain;
    chain.from_zero = from_zero;
    for (int i : sorted) chain.members.push_back(i + 1);
    row.chains.push_back(std::move(chain));
  }

  std::sort(row.chains.begin(), row.chains.end(), [](const Table1Chain& a, const Table1Chain& b) {
    return *std::min_element(a.members.begin(), a.members.end()) <
           *std::min_element(b.members.begin(), b.members.end());
  });
  row.n_weights = static_cast<int>(row.small_fundamentals.size());
  row.n_chains = static_cast<int>(row.chains.size());
  return row;
}

Table1Row table1_reference(const CartanType& t) {
  const int n = t.rank();
  Table1Row row;
  row.type = t.str();
  auto add_chain = [&](std::vector<int> members, bool from_zero) {
    if (members.empty()) return;
    Table1Chain c;
    c.members = std::move(members);
    c.from_zero = from_zero;
    row.chains.push_back(std::move(c));
  };
  switch (t.family()) {
    case 'A':
      for (int i = 1; i <= n; ++i) add_chain({i}, false);
      break;
    case 'B': {
      std::vector<int> chain;
      for (int i = 1; i <= n - 1; ++i) chain.push_back(i);
      add_chain(chain, true);
      add_chain({n}, false);
      break;
    }
    case 'C': {
      std::vector<int> odd, even;
      for (int i = 1; i <= n; i += 2) odd.push_back(i);
      for (int i = 2; i <= n; i += 2) even.push_back(i);
      add_chain(odd, false);
      add_chain(even, true);
      break;
    }
    case 'D': {
      std::vector<int> odd, even;
      for (int i = 1; i <= 2 * ((n - 1) / 2) - 1; i += 2) odd.push_back(i);
      for (int i = 2; i <= 2 * (n / 2) - 2; i += 2) even.push_back(i);
      add_chain(odd, false);
      add_chain(even, true);
      add_chain({n - 1}, false);
      add_chain({n}, false);
      break;
    }
    case 'E':
      if (n == 6) {
        add_chain({1, 5}, false);
        add_chain({2}, true);
        add_chain({6, 3}, false);
      } else if (n == 7) {
        add_chain({1, 6}, true);
        add_chain({7, 2}, false);
      } else {
        add_chain({8, 1}, true);
      }
      break;
    case 'F':
      add_chain({4, 1}, true);
      break;
    default:  // G
      add_chain({1}, true);
      break;
  }
  for (const auto& c : row.chains)
    for (int m : c.members) row.small_fundamentals.push_back(m);
  std::sort(row.small_fundamentals.begin(), row.small_fundamentals.end());
  std::sort(row.chains.begin(), row.chains.end(), [](const Table1Chain& a, const Table1Chain& b) {
    return *std::min_element(a.members.begin(), a.members.end()) <
           *std::min_element(b.members.begin(), b.members.end());
  });
  row.n_weights = static_cast<int>(row.small_fundamentals.size());
  row.n_chains = static_cast<int>(row.chains.size());
  return row;
}

std::vector<CartanType> table1_reference_types() {
  std::vector<CartanType> types;
  for (int n = 1; n <= 8; ++n) types.emplace_back('A', n);
  for (int n = 2; n <= 5; ++n) types.emplace_back('B', n);
  for (int n = 2; n <= 5; ++n) types.emplace_back('C', n);
  for (int n = 3; n <= 6; ++n) types.emplace_back('D', n);
  types.emplace_back('E', 6);
  types.emplace_back('E', 7);
  types.emplace_back('E', 8);
  types.emplace_back('F', 4);
  types.emplace_back('G', 2);
  return types;
}

}  // namespace macd
