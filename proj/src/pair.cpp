#include "macd/pair.hpp"

#include <numeric>

namespace macd {

namespace {

// lcm of denominators of all pairwise inner products among the fundamental
// weights of both lattices, forced even.
long exponent_denominator_of(const RootSystemData& R, const RootSystemData& Rdual) {
  std::vector<VecQ> basis;
  for (int i = 0; i < R.rank(); ++i) basis.push_back(R.fundamental_weights().col(i));
  for (int i = 0; i < Rdual.rank(); ++i) basis.push_back(Rdual.fundamental_weights().col(i));
  mpz_class lcm = 2;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i; j < basis.size(); ++j) {
      Rational p = R.inner(basis[i], basis[j]);
      mpz_class den = p.den();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
  if (!lcm.fits_slong_p()) throw std::overflow_error("exponent denominator overflow");
  return lcm.get_si();
}

}  // namespace

std::shared_ptr<const AdmissiblePair> AdmissiblePair::make(const CartanType& t,
                                                           PairMode mode) {
  auto pair = std::shared_ptr<AdmissiblePair>(new AdmissiblePair());
  pair->R_ = build_root_system(t);
  pair->Rdual_ = pair->R_->dual_system();
  pair->mode_ = mode;
  pair->D_ = exponent_denominator_of(*pair->R_, *pair->Rdual_);
  if (mode == PairMode::S_eq_R) {
    pair->u_[0] = pair->u_[1] = 1;
  } else {
    if (!pair->R_->normalized_short_length())
      throw std::logic_error("mode S=R^v requires the normalized realization");
    auto half = [](const Rational& n2) {
      Rational u = n2 / Rational(2);
      return u.as_long();
    };
    pair->u_[0] = half(pair->R_->norm2_short());
    pair->u_[1] = half(pair->R_->norm2_long());
  }
  return pair;
}

VecQ AdmissiblePair::star_ambient(int r) const {
  const Root& al = R_->positive_roots()[static_cast<size_t>(r)];
  VecQ v = al.ambient;
  const Rational inv_u(1, u_of_root(r));
  for (int i = 0; i < v.size(); ++i) v[i] = v[i] * inv_u;
  return v;
}

std::shared_ptr<const AdmissiblePair> AdmissiblePair::dual_pair() const {
  auto pair = std::shared_ptr<AdmissiblePair>(new AdmissiblePair());
  pair->mode_ = mode_;
  pair->D_ = D_;
  if (mode_ == PairMode::S_eq_R) {
    // (R,R) -> (R^v, R^v); u stays 1.
    pair->R_ = Rdual_;
    pair->Rdual_ = R_;
    pair->u_[0] = pair->u_[1] = 1;
  } else {
    // (R, R^v) is self-dual.
    pair->R_ = R_;
    pair->Rdual_ = Rdual_;
    pair->u_[0] = u_[0];
    pair->u_[1] = u_[1];
  }
  return pair;
}

WeightClass AdmissiblePair::classify_lambda(const Weight& omega) const {
  if (omega.sys.get() != lambda_system().get())
    throw lattice_mismatch();
  return classify_weight(omega);
}

}  // namespace macd
