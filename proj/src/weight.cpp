#include "macd/weight.hpp"

#include <deque>
#include <set>

namespace macd {

std::string Weight::str() const {
  std::string s = "(";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + ")";
}

bool dominance_leq(const Weight& mu, const Weight& lambda) {
  mu.check_same_lattice(lambda);
  VecQ coeffs = lambda.sys->simple_coeffs_of_weight(coords_sub(lambda.c, mu.c));
  for (int i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_integer() || coeffs[i].sign() < 0) return false;
  return true;
}

DominantRep dominant_representative(const Weight& nu) {
  const RootSystemData& sys = *nu.sys;
  Coords c = nu.c;
  std::vector<int> word;
  for (;;) {
    int neg = -1;
    for (int i = 0; i < sys.rank(); ++i)
      if (c[static_cast<size_t>(i)] < 0) {
        neg = i;
        break;
      }
    if (neg < 0) break;
    sys.reflect_weight(c, neg);
    word.push_back(neg);
  }
  return DominantRep{Weight(nu.sys, std::move(c)), std::move(word)};
}

OrbitData orbit(const Weight& lambda) {
  const RootSystemData& sys = *lambda.sys;
  DominantRep rep = dominant_representative(lambda);
  OrbitData out;
  out.seed = rep.dominant;
  std::set<Coords> seen;
  std::deque<Coords> queue;
  seen.insert(out.seed.c);
  queue.push_back(out.seed.c);
  while (!queue.empty()) {
    Coords c = queue.front();
    queue.pop_front();
    for (int i = 0; i < sys.rank(); ++i) {
      Coords r = c;
      sys.reflect_weight(r, i);
      if (seen.insert(r).second) queue.push_back(r);
    }
  }
  out.points.assign(seen.begin(), seen.end());
  out.witness.reserve(out.points.size());
  for (const auto& p : out.points)
    out.witness.push_back(dominant_representative(Weight(lambda.sys, p)).word);
  return out;
}

std::vector<Coords> parabolic_orbit(const RootSystemData& sys, const Coords& start,
                                    const std::vector<int>& gens) {
  std::set<Coords> seen{start};
  std::deque<Coords> queue{start};
  while (!queue.empty()) {
    Coords c = queue.front();
    queue.pop_front();
    for (int i : gens) {
      Coords r = c;
      sys.reflect_weight(r, i);
      if (seen.insert(r).second) queue.push_back(r);
    }
  }
  return std::vector<Coords>(seen.begin(), seen.end());
}

std::vector<int> stabilizer_subsystem(const Weight& x) {
  const RootSystemData& sys = *x.sys;
  std::vector<int> out;
  for (size_t r = 0; r < sys.positive_roots().size(); ++r)
    if (sys.pairing_with_coroot(x.c, static_cast<int>(r)) == 0)
      out.push_back(static_cast<int>(r));
  return out;
}

mpz_class stabilizer_order(const Weight& x) {
  const RootSystemData& sys = *x.sys;
  std::vector<int> roots = stabilizer_subsystem(x);
  if (roots.empty()) return 1;
  // Orbit of the half-sum of the subsystem's positive roots under the
  // subsystem's reflections; that point is regular for the subsystem.
  Coords reg = coords_zero(sys.rank());
  for (int r : roots) reg = coords_add(reg, sys.positive_roots()[static_cast<size_t>(r)].weight_coords);
  std::set<Coords> seen{reg};
  std::deque<Coords> queue{reg};
  while (!queue.empty()) {
    Coords c = queue.front();
    queue.pop_front();
    for (int r : roots) {
      const Root& al = sys.positive_roots()[static_cast<size_t>(r)];
      long p = coords_dot(c, al.coroot_coeffs);
      Coords im = c;
      for (int k = 0; k < sys.rank(); ++k)
        im[static_cast<size_t>(k)] -= p * al.weight_coords[static_cast<size_t>(k)];
      if (seen.insert(im).second) queue.push_back(im);
    }
  }
  return mpz_class(static_cast<unsigned long>(seen.size()));
}

std::vector<int> dominant_stabilizer_gens(const Weight& x) {
  std::vector<int> gens;
  for (int i = 0; i < x.sys->rank(); ++i)
    if (x.c[static_cast<size_t>(i)] == 0) gens.push_back(i);
  return gens;
}

}  // namespace macd
