#pragma once

#include <string>
#include <vector>

#include "macd/weight.hpp"

namespace macd {

struct non_dominant_weight : std::invalid_argument {
  explicit non_dominant_weight(const std::string& w)
      : std::invalid_argument("weight is not dominant: " + w) {}
};

enum class WeightClass { zero, minuscule, quasi_minuscule, small_other, not_small };

const char* to_string(WeightClass c);

inline bool is_small(WeightClass c) { return c != WeightClass::not_small; }

/// Classification by the maximum of <omega, alpha^v> over positive roots;
/// quasi-minuscule is the dominant root of minimal length.
WeightClass classify_weight(const Weight& omega);

/// All dominant mu <= lambda (dominance order), enumerated by an integer box
/// scan over simple-root coefficient vectors. Sorted by (height, lex).
std::vector<Coords> lower_dominant_set(const Weight& lambda);

struct SaturatedPoint {
  Coords nu;
  Coords dom;             // dominant representative
  std::vector<int> word;  // sends nu to dom
};

struct SaturatedSet {
  Weight omega;
  std::vector<Coords> dominants;      // dominant mu <= omega
  std::vector<SaturatedPoint> points; // union of their orbits, deduplicated
};

/// Saturated set: union of W-orbits of all dominant mu <= omega.
SaturatedSet saturated_set(const Weight& omega);

/// All small dominant weights of the system (including 0), sorted by
/// (height, lex).
std::vector<Coords> small_dominant_weights(const RootSystemPtr& sys);

}  // namespace macd
