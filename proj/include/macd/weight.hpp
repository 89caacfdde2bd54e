#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "macd/root_system.hpp"

namespace macd {

struct lattice_mismatch : std::logic_error {
  lattice_mismatch() : std::logic_error("weights live in different lattices") {}
};

/// A point of the weight lattice of a root system, stored in fundamental
/// coordinates. The owning system identifies the lattice.
struct Weight {
  RootSystemPtr sys;
  Coords c;

  Weight() = default;
  Weight(RootSystemPtr s, Coords coords) : sys(std::move(s)), c(std::move(coords)) {}

  static Weight zero(RootSystemPtr s) {
    Coords z = coords_zero(s->rank());
    return Weight(std::move(s), std::move(z));
  }
  static Weight fundamental(RootSystemPtr s, int i) {
    Coords z = coords_zero(s->rank());
    z[static_cast<size_t>(i)] = 1;
    return Weight(std::move(s), std::move(z));
  }

  bool is_dominant() const { return coords_nonneg(c); }
  bool is_zero() const { return coords_is_zero(c); }
  VecQ ambient() const { return sys->ambient_of_weight(c); }

  void check_same_lattice(const Weight& o) const {
    if (sys.get() != o.sys.get()) throw lattice_mismatch();
  }

  Weight operator+(const Weight& o) const {
    check_same_lattice(o);
    return Weight(sys, coords_add(c, o.c));
  }
  Weight operator-(const Weight& o) const {
    check_same_lattice(o);
    return Weight(sys, coords_sub(c, o.c));
  }
  Weight operator-() const { return Weight(sys, coords_neg(c)); }

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.sys.get() == b.sys.get() && a.c == b.c;
  }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  friend bool operator<(const Weight& a, const Weight& b) { return a.c < b.c; }

  std::string str() const;
};

/// lambda >= mu in dominance: lambda - mu a nonnegative integer combination
/// of simple roots. Exact rational solve; mixed lattices are an error.
bool dominance_leq(const Weight& mu, const Weight& lambda);

/// Reduced word sending nu to its dominant representative: repeatedly reflect
/// at the lowest-index simple root with negative pairing. Applying the word
/// left-to-right to nu yields the dominant weight.
struct DominantRep {
  Weight dominant;
  std::vector<int> word;
};
DominantRep dominant_representative(const Weight& nu);

inline Coords apply_word(const RootSystemData& sys, Coords c, const std::vector<int>& word) {
  for (int i : word) sys.reflect_weight(c, i);
  return c;
}
inline Coords apply_word_inverse(const RootSystemData& sys, Coords c,
                                 const std::vector<int>& word) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) sys.reflect_weight(c, *it);
  return c;
}

struct OrbitData {
  Weight seed;  // dominant
  std::vector<Coords> points;
  std::vector<std::vector<int>> witness;  // per point, word sending it to seed
};

/// Full W-orbit by breadth-first closure under simple reflections.
OrbitData orbit(const Weight& lambda);

/// Orbit of `start` under the standard parabolic generated by the simple
/// reflections listed in `gens`.
std::vector<Coords> parabolic_orbit(const RootSystemData& sys, const Coords& start,
                                    const std::vector<int>& gens);

/// Positive roots orthogonal to x (generators of the stabilizer subsystem).
std::vector<int> stabilizer_subsystem(const Weight& x);

/// |W_x|, computed as the orbit size of a regular point of the stabilizer
/// subsystem under the reflections of that subsystem. Intended for small rank.
mpz_class stabilizer_order(const Weight& x);

/// Simple indices i with <x, alpha_i^v> = 0 (generators of W_x for dominant x).
std::vector<int> dominant_stabilizer_gens(const Weight& x);

}  // namespace macd
