#pragma once

#include <memory>

#include "macd/small_weights.hpp"
#include "macd/weight.hpp"

namespace macd {

enum class PairMode { S_eq_R, S_eq_R_dual };

inline const char* to_string(PairMode m) {
  return m == PairMode::S_eq_R ? "S=R" : "S=R^v";
}

/// Admissible pair (R,S), S = R or S = R^v, sharing one ambient metric.
/// Carries both realizations (R and its coroot system), the lattice of
/// the operator weights (the weight lattice of S^v), and the star bijection
/// alpha -> alpha_* = alpha/u_alpha of R onto S.
class AdmissiblePair {
 public:
  static std::shared_ptr<const AdmissiblePair> make(const CartanType& t, PairMode mode);

  PairMode mode() const { return mode_; }
  const RootSystemPtr& R() const { return R_; }
  const RootSystemPtr& R_dual() const { return Rdual_; }
  /// System whose positive roots are S^+ (index-aligned with R^+).
  const RootSystemPtr& S_system() const { return mode_ == PairMode::S_eq_R ? R_ : Rdual_; }
  /// System whose weight lattice is Lambda (= S^v).
  const RootSystemPtr& lambda_system() const {
    return mode_ == PairMode::S_eq_R ? Rdual_ : R_;
  }

  /// Global exponent denominator: every pairing of lattice points lands in
  /// (1/D)Z; D is even so half powers of t specialize exactly as well.
  long exponent_denominator() const { return D_; }

  /// u_alpha by multiplicity class (1 for S=R; <alpha,alpha>/2 for S=R^v).
  long u(int tclass) const { return u_[tclass]; }
  long u_of_root(int r) const {
    return u_[R_->positive_roots()[static_cast<size_t>(r)].tclass];
  }

  /// <alpha_*, eta> for the r-th positive root of R and eta in Lambda. Exact
  /// integer; equals the pairing of eta with the coroot of the S^v-root
  /// collinear with alpha.
  long star_pairing(int r, const Coords& eta) const {
    const Root& al = R_->positive_roots()[static_cast<size_t>(r)];
    return mode_ == PairMode::S_eq_R ? coords_dot(eta, al.simple_coeffs)
                                     : coords_dot(eta, al.coroot_coeffs);
  }

  /// Lambda-coordinates of alpha_*^v (the S^v-root collinear with alpha_r).
  const Coords& star_covector(int r) const {
    return lambda_system()->positive_roots()[static_cast<size_t>(r)].weight_coords;
  }

  /// alpha_* as an ambient vector.
  VecQ star_ambient(int r) const;

  Weight P_weight(Coords c) const { return Weight(R_, std::move(c)); }
  Weight lambda_weight(Coords c) const { return Weight(lambda_system(), std::move(c)); }

  /// The pair (S^v, R^v) driving the Pieri/duality side.
  std::shared_ptr<const AdmissiblePair> dual_pair() const;

  /// Smallness of omega in Lambda^+ (classification in S^v).
  WeightClass classify_lambda(const Weight& omega) const;

 private:
  AdmissiblePair() = default;
  RootSystemPtr R_, Rdual_;
  PairMode mode_ = PairMode::S_eq_R_dual;
  long D_ = 2;
  long u_[2] = {1, 1};
};

using PairPtr = std::shared_ptr<const AdmissiblePair>;

}  // namespace macd
