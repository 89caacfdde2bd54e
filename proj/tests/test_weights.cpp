#include "doctest.h"
#include "macd/lemmas.hpp"
#include "macd/pair.hpp"
#include "macd/small_weights.hpp"

using namespace macd;

namespace {
Weight fw(const RootSystemPtr& sys, int i) { return Weight::fundamental(sys, i); }
}

TEST_CASE("dominance order basics") {
  auto a2 = build_root_system(CartanType('A', 2));
  Weight zero = Weight::zero(a2);
  Weight theta = fw(a2, 0) + fw(a2, 1);  // highest root
  CHECK(dominance_leq(zero, theta));
  CHECK_FALSE(dominance_leq(theta, zero));
  // omega_1 and omega_2 are incomparable
  CHECK_FALSE(dominance_leq(fw(a2, 0), fw(a2, 1)));
  CHECK_FALSE(dominance_leq(fw(a2, 1), fw(a2, 0)));

  auto b3 = build_root_system(CartanType('B', 3));
  CHECK(dominance_leq(fw(b3, 0), fw(b3, 1)));  // omega_1 < omega_2

  auto c2 = build_root_system(CartanType('C', 2));
  CHECK_THROWS_AS(dominance_leq(Weight::zero(a2), Weight::zero(c2)), lattice_mismatch);
}

TEST_CASE("dominance is a partial order on a finite dominant sample") {
  auto b2 = build_root_system(CartanType('B', 2));
  std::vector<Weight> sample;
  for (long x = 0; x <= 2; ++x)
    for (long y = 0; y <= 2; ++y) sample.push_back(Weight(b2, Coords{x, y}));
  for (const auto& a : sample) CHECK(dominance_leq(a, a));
  for (const auto& a : sample)
    for (const auto& b : sample)
      if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
  for (const auto& a : sample)
    for (const auto& b : sample)
      for (const auto& c : sample)
        if (dominance_leq(a, b) && dominance_leq(b, c)) CHECK(dominance_leq(a, c));
}

TEST_CASE("orbits: sizes, closure, witnesses, stabilizer index") {
  auto a2 = build_root_system(CartanType('A', 2));
  CHECK(orbit(fw(a2, 0)).points.size() == 3);
  CHECK(orbit(Weight::zero(a2)).points.size() == 1);

  auto b2 = build_root_system(CartanType('B', 2));
  OrbitData orb = orbit(fw(b2, 0));
  CHECK(orb.points.size() == 4);

  for (auto t : {CartanType('A', 3), CartanType('B', 2), CartanType('C', 3),
                 CartanType('D', 4), CartanType('G', 2)}) {
    auto sys = build_root_system(t);
    for (long x = 0; x <= 1; ++x)
      for (long y = 0; y <= 1; ++y) {
        Coords c = coords_zero(sys->rank());
        c[0] = x;
        c[static_cast<size_t>(sys->rank() - 1)] += y;
        Weight w(sys, c);
        OrbitData o = orbit(w);
        // |orbit| * |stabilizer| = |W|
        mpz_class stab = stabilizer_order(w);
        CHECK(mpz_class(static_cast<unsigned long>(o.points.size())) * stab ==
              sys->weyl_order());
        // every point is sent to the seed by its witness word; orbit is closed
        for (size_t i = 0; i < o.points.size(); ++i) {
          CHECK(apply_word(*sys, o.points[i], o.witness[i]) == o.seed.c);
          for (int s = 0; s < sys->rank(); ++s) {
            Coords refl = o.points[i];
            sys->reflect_weight(refl, s);
            CHECK(std::binary_search(o.points.begin(), o.points.end(), refl));
          }
        }
      }
  }
}

TEST_CASE("dominant representative words") {
  auto a1 = build_root_system(CartanType('A', 1));
  DominantRep r = dominant_representative(Weight(a1, Coords{-1}));
  CHECK(r.dominant.c == Coords{1});
  CHECK(r.word == std::vector<int>{0});

  auto b2 = build_root_system(CartanType('B', 2));
  Weight w = fw(b2, 1);
  Coords moved = w.c;
  b2->reflect_weight(moved, 1);
  b2->reflect_weight(moved, 0);
  DominantRep rep = dominant_representative(Weight(b2, moved));
  CHECK(rep.dominant.c == w.c);
  CHECK(apply_word(*b2, moved, rep.word) == w.c);

  // dominant input: empty word
  CHECK(dominant_representative(w).word.empty());
}

TEST_CASE("stabilizer subsystems") {
  auto a2 = build_root_system(CartanType('A', 2));
  CHECK(stabilizer_subsystem(Weight::zero(a2)).size() == 3);
  CHECK(stabilizer_subsystem(fw(a2, 0) + fw(a2, 1)).empty());
  auto stab = stabilizer_subsystem(fw(a2, 0));
  REQUIRE(stab.size() == 1);
  // the orthogonal root is the second simple root
  CHECK(a2->positive_roots()[static_cast<size_t>(stab[0])].simple_coeffs == Coords{0, 1});
}

TEST_CASE("weight classification") {
  auto a3 = build_root_system(CartanType('A', 3));
  for (int i = 0; i < 3; ++i)
    CHECK(classify_weight(fw(a3, i)) == WeightClass::minuscule);

  auto b2 = build_root_system(CartanType('B', 2));
  CHECK(classify_weight(fw(b2, 0)) == WeightClass::quasi_minuscule);
  CHECK(classify_weight(fw(b2, 1)) == WeightClass::minuscule);

  auto b3 = build_root_system(CartanType('B', 3));
  CHECK(classify_weight(fw(b3, 0)) == WeightClass::quasi_minuscule);
  CHECK(classify_weight(fw(b3, 1)) == WeightClass::small_other);

  auto g2 = build_root_system(CartanType('G', 2));
  CHECK(classify_weight(fw(g2, 0)) == WeightClass::quasi_minuscule);
  CHECK(classify_weight(fw(g2, 1)) == WeightClass::not_small);
  CHECK(classify_weight(Weight::zero(g2)) == WeightClass::zero);
  CHECK_THROWS_AS(classify_weight(Weight(g2, Coords{-1, 0})), non_dominant_weight);
}

TEST_CASE("saturated sets") {
  auto b2 = build_root_system(CartanType('B', 2));
  // minuscule: orbit only
  SaturatedSet spin = saturated_set(fw(b2, 1));
  CHECK(spin.points.size() == 4);
  CHECK(spin.dominants.size() == 1);
  // quasi-minuscule: orbit plus zero
  SaturatedSet vec = saturated_set(fw(b2, 0));
  CHECK(vec.points.size() == 5);
  CHECK(vec.dominants.size() == 2);

  auto a2 = build_root_system(CartanType('A', 2));
  SaturatedSet adj = saturated_set(fw(a2, 0) + fw(a2, 1));
  CHECK(adj.points.size() == 7);  // 6 roots + 0
}

TEST_CASE("lower dominant sets and smallness below a small weight") {
  for (auto t : {CartanType('A', 3), CartanType('B', 3), CartanType('C', 3),
                 CartanType('D', 4), CartanType('F', 4), CartanType('G', 2)}) {
    auto sys = build_root_system(t);
    for (const Coords& om : small_dominant_weights(sys)) {
      Weight w(sys, om);
      bool fundamental = false;
      long total = 0;
      for (long x : om) total += x;
      fundamental = (total == 1);
      for (const Coords& mu : lower_dominant_set(w)) {
        Weight wm(sys, mu);
        CHECK(dominance_leq(wm, w));
        CHECK(is_small(classify_weight(wm)));
        if (fundamental) {
          long s = 0;
          for (long x : mu) s += x;
          CHECK((s == 0 || s == 1));  // fundamental or zero
        }
      }
    }
  }
}

TEST_CASE("appendix lemmas hold on small weights, rank <= 3 smoke") {
  for (auto t : {CartanType('A', 2), CartanType('B', 2), CartanType('C', 3),
                 CartanType('G', 2)}) {
    for (auto mode : {PairMode::S_eq_R_dual, PairMode::S_eq_R}) {
      auto pair = AdmissiblePair::make(t, mode);
      for (const Coords& om : small_dominant_weights(pair->lambda_system())) {
        LemmaReport rep = verify_appendix_lemmas(*pair, pair->lambda_weight(om));
        CHECK(rep.passed);
        if (!rep.passed)
          for (auto& f : rep.failures) MESSAGE(f);
        Weight w = pair->lambda_weight(om);
        if (classify_weight(w) == WeightClass::minuscule) CHECK(rep.vacuous);
      }
    }
  }
  // non-small input is rejected
  auto pair = AdmissiblePair::make(CartanType('B', 2), PairMode::S_eq_R_dual);
  Coords big = Coords{2, 2};
  CHECK_THROWS(verify_appendix_lemmas(*pair, pair->lambda_weight(big)));
}
