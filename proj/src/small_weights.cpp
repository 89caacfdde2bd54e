#include "macd/small_weights.hpp"

#include <algorithm>
#include <set>

namespace macd {

const char* to_string(WeightClass c) {
  switch (c) {
    case WeightClass::zero: return "zero";
    case WeightClass::minuscule: return "minuscule";
    case WeightClass::quasi_minuscule: return "quasi_minuscule";
    case WeightClass::small_other: return "small_other";
    default: return "not_small";
  }
}

WeightClass classify_weight(const Weight& omega) {
  if (!omega.is_dominant()) throw non_dominant_weight(omega.str());
  if (omega.is_zero()) return WeightClass::zero;
  const RootSystemData& sys = *omega.sys;
  long maxp = 0;
  for (size_t r = 0; r < sys.positive_roots().size(); ++r)
    maxp = std::max(maxp, sys.pairing_with_coroot(omega.c, static_cast<int>(r)));
  if (maxp <= 1) return WeightClass::minuscule;
  if (maxp > 2) return WeightClass::not_small;
  const Root& qm = sys.positive_roots()[static_cast<size_t>(sys.dominant_short_root_index())];
  if (omega.c == qm.weight_coords) return WeightClass::quasi_minuscule;
  return WeightClass::small_other;
}

std::vector<Coords> lower_dominant_set(const Weight& lambda) {
  if (!lambda.is_dominant()) throw non_dominant_weight(lambda.str());
  const RootSystemData& sys = *lambda.sys;
  const int n = sys.rank();
  // mu <= lambda dominant means lambda - mu = sum c_j alpha_j with c_j integer,
  // 0 <= c_j <= j-th simple-root coefficient of lambda.
  VecQ bound = sys.simple_coeffs_of_weight(lambda.c);
  std::vector<long> box(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    if (bound[j].sign() < 0) throw std::logic_error("negative root coefficient for dominant weight");
    box[static_cast<size_t>(j)] = bound[j].floor_long();
  }
  std::vector<Coords> out;
  Coords c(static_cast<size_t>(n), 0);
  for (;;) {
    // mu = lambda - sum c_j alpha_j in fundamental coordinates
    Coords mu = lambda.c;
    for (int j = 0; j < n; ++j) {
      if (c[static_cast<size_t>(j)] == 0) continue;
      for (int i = 0; i < n; ++i)
        mu[static_cast<size_t>(i)] -= c[static_cast<size_t>(j)] * sys.cartan()(j, i);
    }
    if (coords_nonneg(mu)) out.push_back(std::move(mu));
    int j = 0;
    while (j < n && c[static_cast<size_t>(j)] == box[static_cast<size_t>(j)]) {
      c[static_cast<size_t>(j)] = 0;
      ++j;
    }
    if (j == n) break;
    ++c[static_cast<size_t>(j)];
  }
  std::sort(out.begin(), out.end(), [&](const Coords& a, const Coords& b) {
    Rational ha = sys.height_of_weight(a), hb = sys.height_of_weight(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  return out;
}

SaturatedSet saturated_set(const Weight& omega) {
  SaturatedSet out;
  out.omega = omega;
  out.dominants = lower_dominant_set(omega);
  std::set<Coords> seen;
  for (const auto& mu : out.dominants) {
    OrbitData orb = orbit(Weight(omega.sys, mu));
    for (size_t i = 0; i < orb.points.size(); ++i) {
      if (!seen.insert(orb.points[i]).second) continue;
      out.points.push_back(SaturatedPoint{orb.points[i], mu, orb.witness[i]});
    }
  }
  return out;
}

std::vector<Coords> small_dominant_weights(const RootSystemPtr& sys) {
  const int n = sys->rank();
  std::vector<Coords> out;
  Coords c(static_cast<size_t>(n), 0);
  for (;;) {
    if (is_small(classify_weight(Weight(sys, c)))) out.push_back(c);
    int j = 0;
    while (j < n && c[static_cast<size_t>(j)] == 2) {
      c[static_cast<size_t>(j)] = 0;
      ++j;
    }
    if (j == n) break;
    ++c[static_cast<size_t>(j)];
  }
  std::sort(out.begin(), out.end(), [&](const Coords& a, const Coords& b) {
    Rational ha = sys->height_of_weight(a), hb = sys->height_of_weight(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  return out;
}

}  // namespace macd
