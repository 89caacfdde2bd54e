#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "macd/cartan.hpp"
#include "macd/types.hpp"

namespace macd {

struct Root {
  VecQ ambient;
  Coords simple_coeffs;  // expansion over simple roots (integers)
  Coords coroot_coeffs;  // expansion of the coroot over simple coroots
  Coords weight_coords;  // fundamental-basis coordinates, w_i = <alpha, alpha_i^v>
  Rational norm2;        // <alpha, alpha>
  int tclass = 0;        // multiplicity class: 0 short-orbit, 1 long-orbit
  long height = 0;       // sum of simple_coeffs
};

/// Full combinatorial skeleton of an irreducible reduced root system in a
/// fixed rational ambient realization. `build` produces the Bourbaki
/// realization rescaled so short roots have squared length 2 (the rescaling
/// lives in the metric, keeping all coordinates rational).
///
/// Immutable after construction; safe to share across threads.
class RootSystemData {
 public:
  static std::shared_ptr<const RootSystemData> build(const CartanType& t);

  /// The coroot system, realized in the same ambient space and metric;
  /// positive roots are index-aligned with this system's positive roots and
  /// multiplicity classes are inherited (t_{alpha^v} = t_alpha).
  std::shared_ptr<const RootSystemData> dual_system() const;

  const CartanType& type() const { return type_; }
  int rank() const { return rank_; }
  int ambient_dim() const { return ambient_dim_; }
  const Rational& metric_scale() const { return metric_; }
  bool normalized_short_length() const { return norm2_short_ == Rational(2); }
  bool two_lengths() const { return two_lengths_; }
  const Rational& norm2_short() const { return norm2_short_; }
  const Rational& norm2_long() const { return norm2_long_; }
  const mpz_class& weyl_order() const { return weyl_order_; }

  const std::vector<VecQ>& simple_roots() const { return simple_; }
  const std::vector<Root>& positive_roots() const { return positive_; }
  const MatI& cartan() const { return cartan_; }            // a_ij = <alpha_i, alpha_j^v>
  const MatQ& fundamental_weights() const { return fund_; }  // columns, ambient
  /// Half sums (1/2) sum_{alpha>0, tclass=c} alpha, ambient, per class.
  const VecQ& half_sum(int tclass) const { return half_sum_[tclass]; }

  Rational inner(const VecQ& x, const VecQ& y) const;
  VecQ ambient_of_weight(const Coords& c) const;
  /// Fundamental coordinates of an ambient vector; empty if not in the lattice.
  std::optional<Coords> weight_coords_of_ambient(const VecQ& v) const;

  /// Simple-root coefficients of a weight given in fundamental coordinates.
  VecQ simple_coeffs_of_weight(const Coords& c) const;
  /// Sum of simple-root coefficients (rational height).
  Rational height_of_weight(const Coords& c) const;

  /// s_i acting on fundamental coordinates.
  void reflect_weight(Coords& c, int i) const;
  /// s_i acting on root coefficient vectors (over simple roots).
  void reflect_root_coeffs(Coords& m, int i) const;

  /// <x, alpha_r^v> for x in fundamental coordinates.
  long pairing_with_coroot(const Coords& c, int r) const {
    return coords_dot(c, positive_[r].coroot_coeffs);
  }
  /// <alpha, alpha_j^v> for a root coefficient vector.
  long root_pairing(const Coords& m, int j) const;

  /// Positive-root index of +-alpha given root coefficients; (index, sign).
  std::optional<std::pair<int, int>> find_root(const Coords& m) const;

  /// Index of the dominant root of minimal length (its weight is the
  /// quasi-minuscule weight of the system).
  int dominant_short_root_index() const { return dominant_short_; }
  /// Index of the highest root.
  int highest_root_index() const { return highest_; }

 private:
  RootSystemData() = default;
  static std::shared_ptr<const RootSystemData> construct(
      const CartanType& t, const Rational& metric, const std::vector<VecQ>& simples,
      const std::vector<int>* inherited_tclass_by_primal_index,
      const std::vector<Coords>* primal_order);

  CartanType type_{'A', 1};
  int rank_ = 0;
  int ambient_dim_ = 0;
  Rational metric_;
  bool two_lengths_ = false;
  Rational norm2_short_, norm2_long_;
  mpz_class weyl_order_;
  std::vector<VecQ> simple_;
  std::vector<Root> positive_;
  MatI cartan_;
  MatQ cartan_inv_;    // A^{-1}
  MatQ fund_;          // ambient fundamental weights, columns
  MatQ weight_to_simple_;  // A^{-T}
  VecQ half_sum_[2];
  std::map<Coords, int> root_index_;  // positive root lookup by simple coefficients
  int dominant_short_ = -1;
  int highest_ = -1;
};

using RootSystemPtr = std::shared_ptr<const RootSystemData>;

/// Spec-level constructor: Bourbaki realization of the given type.
inline RootSystemPtr build_root_system(const CartanType& t) {
  return RootSystemData::build(t);
}

}  // namespace macd
