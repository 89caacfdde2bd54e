#include "macd/root_system.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace macd {

namespace {

VecQ make_vec(int dim, std::initializer_list<std::pair<int, Rational>> entries) {
  VecQ v(dim);
  for (int i = 0; i < dim; ++i) v[i] = Rational(0);
  for (auto& [i, x] : entries) v[i] = x;
  return v;
}

// Bourbaki simple roots; metric scale chosen so short roots get length^2 = 2.
void bourbaki_simples(const CartanType& t, int& dim, Rational& metric,
                      std::vector<VecQ>& simples) {
  const int n = t.rank();
  const Rational one(1), half(1, 2);
  simples.clear();
  switch (t.family()) {
    case 'A': {
      dim = n + 1;
      metric = one;
      for (int i = 0; i < n; ++i)
        simples.push_back(make_vec(dim, {{i, one}, {i + 1, -one}}));
      break;
    }
    case 'B': {
      dim = n;
      metric = Rational(2);
      for (int i = 0; i + 1 < n; ++i)
        simples.push_back(make_vec(dim, {{i, one}, {i + 1, -one}}));
      simples.push_back(make_vec(dim, {{n - 1, one}}));
      break;
    }
    case 'C': {
      dim = n;
      metric = one;
      for (int i = 0; i + 1 < n; ++i)
        simples.push_back(make_vec(dim, {{i, one}, {i + 1, -one}}));
      simples.push_back(make_vec(dim, {{n - 1, Rational(2)}}));
      break;
    }
    case 'D': {
      dim = n;
      metric = one;
      for (int i = 0; i + 1 < n; ++i)
        simples.push_back(make_vec(dim, {{i, one}, {i + 1, -one}}));
      simples.push_back(make_vec(dim, {{n - 2, one}, {n - 1, one}}));
      break;
    }
    case 'E': {
      dim = 8;
      metric = one;
      VecQ a1(8);
      a1[0] = half;
      a1[7] = half;
      for (int i = 1; i <= 6; ++i) a1[i] = -half;
      simples.push_back(a1);
      simples.push_back(make_vec(8, {{0, one}, {1, one}}));
      simples.push_back(make_vec(8, {{1, one}, {0, -one}}));
      for (int i = 2; i <= n - 2; ++i)
        simples.push_back(make_vec(8, {{i, one}, {i - 1, -one}}));
      break;
    }
    case 'F': {
      dim = 4;
      metric = Rational(2);
      simples.push_back(make_vec(4, {{1, one}, {2, -one}}));
      simples.push_back(make_vec(4, {{2, one}, {3, -one}}));
      simples.push_back(make_vec(4, {{3, one}}));
      VecQ a4(4);
      a4[0] = half;
      a4[1] = -half;
      a4[2] = -half;
      a4[3] = -half;
      simples.push_back(a4);
      break;
    }
    default: {  // G
      dim = 3;
      metric = one;
      simples.push_back(make_vec(3, {{0, one}, {1, -one}}));
      simples.push_back(make_vec(3, {{0, Rational(-2)}, {1, one}, {2, one}}));
      break;
    }
  }
}

}  // namespace

Rational RootSystemData::inner(const VecQ& x, const VecQ& y) const {
  Rational s(0);
  for (int i = 0; i < ambient_dim_; ++i) s += x[i] * y[i];
  return s * metric_;
}

VecQ RootSystemData::ambient_of_weight(const Coords& c) const {
  VecQ v(ambient_dim_);
  for (int i = 0; i < ambient_dim_; ++i) v[i] = Rational(0);
  for (int k = 0; k < rank_; ++k) {
    if (c[k] == 0) continue;
    const Rational ck(c[k]);
    for (int i = 0; i < ambient_dim_; ++i) v[i] += ck * fund_(i, k);
  }
  return v;
}

std::optional<Coords> RootSystemData::weight_coords_of_ambient(const VecQ& v) const {
  Coords c(static_cast<size_t>(rank_), 0);
  VecQ recon(ambient_dim_);
  for (int i = 0; i < ambient_dim_; ++i) recon[i] = Rational(0);
  for (int r = 0; r < rank_; ++r) {
    // <v, alpha_r^v> = 2 <v, alpha_r> / <alpha_r, alpha_r>
    Rational n2 = inner(simple_[r], simple_[r]);
    Rational p = inner(v, simple_[r]) * Rational(2) / n2;
    if (!p.is_integer()) return std::nullopt;
    c[r] = p.as_long();
  }
  // The vector must lie in the span of the roots.
  VecQ back = ambient_of_weight(c);
  for (int i = 0; i < ambient_dim_; ++i)
    if (back[i] != v[i]) return std::nullopt;
  return c;
}

VecQ RootSystemData::simple_coeffs_of_weight(const Coords& c) const {
  VecQ d(rank_);
  for (int i = 0; i < rank_; ++i) d[i] = Rational(c[i]);
  return weight_to_simple_ * d;
}

Rational RootSystemData::height_of_weight(const Coords& c) const {
  VecQ s = simple_coeffs_of_weight(c);
  Rational h(0);
  for (int i = 0; i < rank_; ++i) h += s[i];
  return h;
}

void RootSystemData::reflect_weight(Coords& c, int i) const {
  const long ci = c[i];
  if (ci == 0) return;
  for (int k = 0; k < rank_; ++k) c[k] -= ci * cartan_(i, k);
}

void RootSystemData::reflect_root_coeffs(Coords& m, int i) const {
  m[i] -= root_pairing(m, i);
}

long RootSystemData::root_pairing(const Coords& m, int j) const {
  long p = 0;
  for (int k = 0; k < rank_; ++k) p += m[k] * cartan_(k, j);
  return p;
}

std::optional<std::pair<int, int>> RootSystemData::find_root(const Coords& m) const {
  auto it = root_index_.find(m);
  if (it != root_index_.end()) return std::make_pair(it->second, 1);
  it = root_index_.find(coords_neg(m));
  if (it != root_index_.end()) return std::make_pair(it->second, -1);
  return std::nullopt;
}

std::shared_ptr<const RootSystemData> RootSystemData::build(const CartanType& t) {
  int dim;
  Rational metric;
  std::vector<VecQ> simples;
  bourbaki_simples(t, dim, metric, simples);
  return construct(t, metric, simples, nullptr, nullptr);
}

std::shared_ptr<const RootSystemData> RootSystemData::dual_system() const {
  std::vector<VecQ> cosimples;
  cosimples.reserve(static_cast<size_t>(rank_));
  for (int i = 0; i < rank_; ++i) {
    Rational n2 = inner(simple_[i], simple_[i]);
    VecQ cv(ambient_dim_);
    for (int k = 0; k < ambient_dim_; ++k) cv[k] = simple_[i][k] * Rational(2) / n2;
    cosimples.push_back(cv);
  }
  std::vector<int> tclass_by_primal(positive_.size());
  std::vector<Coords> primal_order(positive_.size());
  for (size_t r = 0; r < positive_.size(); ++r) {
    tclass_by_primal[r] = positive_[r].tclass;
    primal_order[r] = positive_[r].coroot_coeffs;
  }
  return construct(type_.dual(), metric_, cosimples, &tclass_by_primal, &primal_order);
}

std::shared_ptr<const RootSystemData> RootSystemData::construct(
    const CartanType& t, const Rational& metric, const std::vector<VecQ>& simples,
    const std::vector<int>* inherited_tclass, const std::vector<Coords>* primal_order) {
  auto sys = std::shared_ptr<RootSystemData>(new RootSystemData());
  RootSystemData& s = *sys;
  s.type_ = t;
  s.rank_ = static_cast<int>(simples.size());
  s.ambient_dim_ = static_cast<int>(simples[0].size());
  s.metric_ = metric;
  s.simple_ = simples;
  s.weyl_order_ = t.weyl_order();
  const int n = s.rank_;

  // Cartan matrix a_ij = <alpha_i, alpha_j^v>.
  s.cartan_.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational num = s.inner(simples[i], simples[j]) * Rational(2);
      Rational den = s.inner(simples[j], simples[j]);
      Rational a = num / den;
      if (!a.is_integer()) throw std::logic_error("non-integral Cartan pairing");
      s.cartan_(i, j) = static_cast<int>(a.as_long());
      if (i == j && s.cartan_(i, j) != 2) throw std::logic_error("Cartan diagonal != 2");
      if (i != j && s.cartan_(i, j) > 0) throw std::logic_error("Cartan off-diagonal > 0");
    }

  // Inverse Cartan (exact) and fundamental weights omega_k = sum_j (A^{-1})_{kj} alpha_j.
  MatQ A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = Rational(s.cartan_(i, j));
  Eigen::FullPivLU<MatQ> lu(A);
  if (lu.rank() != n) throw std::logic_error("singular Cartan matrix");
  s.cartan_inv_ = lu.inverse();
  s.weight_to_simple_ = s.cartan_inv_.transpose();
  s.fund_.resize(s.ambient_dim_, n);
  for (int k = 0; k < n; ++k) {
    VecQ w(s.ambient_dim_);
    for (int i = 0; i < s.ambient_dim_; ++i) w[i] = Rational(0);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < s.ambient_dim_; ++i) w[i] += s.cartan_inv_(k, j) * simples[j][i];
    for (int i = 0; i < s.ambient_dim_; ++i) s.fund_(i, k) = w[i];
  }
  // <omega_i, alpha_j^v> = delta_ij
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational p = s.inner(s.fund_.col(i), simples[j]) * Rational(2) /
                   s.inner(simples[j], simples[j]);
      if (p != Rational(i == j ? 1 : 0))
        throw std::logic_error("fundamental weight pairing check failed");
    }

  // All roots by closure of the simples under simple reflections, in
  // simple-root coefficient space.
  std::set<Coords> seen;
  std::deque<Coords> queue;
  for (int i = 0; i < n; ++i) {
    Coords e(static_cast<size_t>(n), 0);
    e[static_cast<size_t>(i)] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    Coords m = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      Coords r = m;
      s.reflect_root_coeffs(r, i);
      if (seen.insert(r).second) queue.push_back(r);
    }
  }
  std::vector<Coords> positive;
  for (const auto& m : seen)
    if (coords_nonneg(m) && !coords_is_zero(m)) positive.push_back(m);
  if (static_cast<int>(positive.size()) != t.positive_root_count())
    throw std::logic_error("positive root count mismatch for " + t.str());

  std::sort(positive.begin(), positive.end(), [&](const Coords& a, const Coords& b) {
    long ha = 0, hb = 0;
    for (auto x : a) ha += x;
    for (auto x : b) hb += x;
    if (ha != hb) return ha < hb;
    return a < b;
  });
  if (primal_order) {
    // Align the positive roots of a dual system with the primal indexing.
    std::map<Coords, int> pos_index;
    for (size_t i = 0; i < positive.size(); ++i) pos_index[positive[i]] = static_cast<int>(i);
    std::vector<Coords> aligned;
    aligned.reserve(positive.size());
    for (const auto& d : *primal_order) {
      auto it = pos_index.find(d);
      if (it == pos_index.end()) throw std::logic_error("dual root alignment failed");
      aligned.push_back(positive[static_cast<size_t>(it->second)]);
    }
    positive = std::move(aligned);
  }

  // Lengths; the two-orbit split.
  std::vector<Rational> norms;
  s.positive_.clear();
  s.positive_.reserve(positive.size());
  for (const auto& m : positive) {
    Root r;
    r.simple_coeffs = m;
    r.ambient = VecQ(s.ambient_dim_);
    for (int i = 0; i < s.ambient_dim_; ++i) r.ambient[i] = Rational(0);
    r.height = 0;
    for (int j = 0; j < n; ++j) {
      if (m[static_cast<size_t>(j)] == 0) continue;
      const Rational mj(m[static_cast<size_t>(j)]);
      for (int i = 0; i < s.ambient_dim_; ++i) r.ambient[i] += mj * simples[j][i];
      r.height += m[static_cast<size_t>(j)];
    }
    r.norm2 = s.inner(r.ambient, r.ambient);
    norms.push_back(r.norm2);
    // coroot over simple coroots: d_j = m_j <alpha_j,alpha_j>/<alpha,alpha>
    r.coroot_coeffs = coords_zero(n);
    for (int j = 0; j < n; ++j) {
      Rational d = Rational(m[static_cast<size_t>(j)]) * s.inner(simples[j], simples[j]) / r.norm2;
      if (!d.is_integer()) throw std::logic_error("non-integral coroot coefficient");
      r.coroot_coeffs[static_cast<size_t>(j)] = d.as_long();
    }
    r.weight_coords = coords_zero(n);
    for (int j = 0; j < n; ++j) r.weight_coords[static_cast<size_t>(j)] = s.root_pairing(m, j);
    s.positive_.push_back(std::move(r));
  }
  Rational nmin = norms[0], nmax = norms[0];
  for (const auto& x : norms) {
    if (x < nmin) nmin = x;
    if (x > nmax) nmax = x;
  }
  s.norm2_short_ = nmin;
  s.norm2_long_ = nmax;
  s.two_lengths_ = (nmin != nmax);
  for (size_t r = 0; r < s.positive_.size(); ++r) {
    if (inherited_tclass)
      s.positive_[r].tclass = (*inherited_tclass)[r];
    else
      s.positive_[r].tclass = (s.positive_[r].norm2 == nmin) ? 0 : 1;
  }

  for (size_t r = 0; r < s.positive_.size(); ++r)
    s.root_index_[s.positive_[r].simple_coeffs] = static_cast<int>(r);

  // Half sums per multiplicity class.
  for (int c = 0; c < 2; ++c) {
    VecQ h(s.ambient_dim_);
    for (int i = 0; i < s.ambient_dim_; ++i) h[i] = Rational(0);
    for (const auto& r : s.positive_)
      if (r.tclass == c)
        for (int i = 0; i < s.ambient_dim_; ++i) h[i] += r.ambient[i] * Rational(1, 2);
    s.half_sum_[c] = h;
  }

  // Dominant roots: highest root, and the dominant root of minimal length.
  for (size_t r = 0; r < s.positive_.size(); ++r) {
    if (!coords_nonneg(s.positive_[r].weight_coords)) continue;
    if (s.positive_[r].norm2 == nmax) s.highest_ = static_cast<int>(r);
    if (s.positive_[r].norm2 == nmin) s.dominant_short_ = static_cast<int>(r);
  }
  if (s.highest_ < 0 || s.dominant_short_ < 0)
    throw std::logic_error("dominant root detection failed");

  return sys;
}

}  // namespace macd
