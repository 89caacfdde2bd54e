#pragma once

#include <array>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "macd/rational.hpp"

namespace macd {

struct unsupported_regime : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exponent record of one evaluated exponential: e^nu(x) =
/// q^{q_exp} * t_short^{t_exp[0]} * t_long^{t_exp[1]}.
struct ExpRecord {
  Rational q_exp;
  Rational t_exp[2];
};

/// Specialized coefficient backend: the generators Q = q^{1/D} and
/// T_c = t_c^{1/2} carry exact rational values, so every exponent that the
/// admissible pair can produce specializes inside the rationals.
class RationalBackend {
 public:
  using Scalar = Rational;

  RationalBackend(long D, Rational Q, Rational Ts, Rational Tl)
      : D_(D), Q_(std::move(Q)), T_{std::move(Ts), std::move(Tl)} {}

  /// t_c = q^{u_c * k_c} (the finite-density regime).
  static RationalBackend k_regime(long D, long u_short, long u_long, const Rational& Q,
                                  long ks, long kl) {
    if (ks < 1 || kl < 1) throw unsupported_regime("k exponents must be >= 1");
    RationalBackend b(D, Q, pow(Q, D * u_short * ks / 2), pow(Q, D * u_long * kl / 2));
    b.k_ = std::array<long, 2>{ks, kl};
    return b;
  }

  long D() const { return D_; }
  std::optional<std::array<long, 2>> k_regime_exponents() const { return k_; }

  Scalar from_rational(const Rational& r) const { return r; }

  Scalar q_pow(const Rational& e) const {
    Rational s = e * Rational(D_);
    if (!s.is_integer())
      throw std::logic_error("q exponent " + e.str() + " not in (1/D)Z, D=" +
                             std::to_string(D_));
    return pow(Q_, s.as_long());
  }
  /// t_c^{n/2}
  Scalar t_half(int tclass, long n) const { return pow(T_[tclass], n); }
  Scalar t_pow(int tclass, const Rational& e) const {
    Rational s = e * Rational(2);
    if (!s.is_integer()) throw std::logic_error("t exponent not in (1/2)Z: " + e.str());
    return pow(T_[tclass], s.as_long());
  }
  Scalar of_record(const ExpRecord& r) const {
    return q_pow(r.q_exp) * t_pow(0, r.t_exp[0]) * t_pow(1, r.t_exp[1]);
  }

  Rational q() const { return pow(Q_, D_); }
  Rational t(int tclass) const { return pow(T_[tclass], 2); }

  std::string describe() const {
    std::ostringstream os;
    os << "Q=" << Q_ << " Ts=" << T_[0] << " Tl=" << T_[1] << " D=" << D_;
    if (k_) os << " k=(" << (*k_)[0] << "," << (*k_)[1] << ")";
    return os.str();
  }

 private:
  long D_;
  Rational Q_;
  Rational T_[2];
  std::optional<std::array<long, 2>> k_;
};

}  // namespace macd
