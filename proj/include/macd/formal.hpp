#pragma once

#include <array>
#include <map>
#include <optional>
#include <sstream>

#include "macd/scalar.hpp"

namespace macd {

/// Sparse Laurent polynomial in the generators Q = q^{1/D}, Ts = t_s^{1/2},
/// Tl = t_l^{1/2}, exact rational coefficients.
class Laurent {
 public:
  using Exp = std::array<long, 3>;

  Laurent() = default;
  static Laurent constant(const Rational& c) { return monomial({0, 0, 0}, c); }
  static Laurent monomial(const Exp& e, const Rational& c) {
    Laurent p;
    if (!c.is_zero()) p.t_[e] = c;
    return p;
  }

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first == Exp{0, 0, 0});
  }
  size_t size() const { return t_.size(); }
  const std::map<Exp, Rational>& terms() const { return t_; }

  void add_term(const Exp& e, const Rational& c) {
    auto it = t_.find(e);
    if (it == t_.end()) {
      if (!c.is_zero()) t_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  Laurent& operator+=(const Laurent& o) {
    for (auto& [e, c] : o.t_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (auto& [e, c] : o.t_) add_term(e, -c);
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { a += b; return a; }
  friend Laurent operator-(Laurent a, const Laurent& b) { a -= b; return a; }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (auto& [ea, ca] : a.t_)
      for (auto& [eb, cb] : b.t_)
        r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return r;
  }
  Laurent operator-() const {
    Laurent r;
    for (auto& [e, c] : t_) r.t_.emplace(e, -c);
    return r;
  }
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.t_ == b.t_; }

  /// Shift so all exponents are >= 0 and divide by the coefficient content;
  /// returns the extracted monomial factor (exponents, content).
  std::pair<Exp, Rational> extract_content() {
    if (t_.empty()) return {{0, 0, 0}, Rational(1)};
    Exp mins = t_.begin()->first;
    for (auto& [e, c] : t_)
      for (int i = 0; i < 3; ++i) mins[i] = std::min(mins[i], e[i]);
    mpz_class g(0), l(1);
    for (auto& [e, c] : t_) {
      mpz_class n = c.num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
      mpz_class d = c.den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    Rational content(mpq_class(g, l));
    if (t_.begin()->second.sign() < 0) content = -content;
    std::map<Exp, Rational> out;
    for (auto& [e, c] : t_)
      out.emplace(Exp{e[0] - mins[0], e[1] - mins[1], e[2] - mins[2]}, c / content);
    t_ = std::move(out);
    return {mins, content};
  }

  Rational evaluate(const Rational& Q, const Rational& Ts, const Rational& Tl) const {
    Rational s(0);
    for (auto& [e, c] : t_) s += c * pow(Q, e[0]) * pow(Ts, e[1]) * pow(Tl, e[2]);
    return s;
  }

  std::string str() const;
};

/// Element of the fraction field of the Laurent ring. Equality is decided by
/// cross multiplication; no polynomial gcd is attempted beyond monomial and
/// rational content.
class FormalScalar {
 public:
  FormalScalar() : num_(), den_(Laurent::constant(Rational(1))) {}
  FormalScalar(int n) : FormalScalar(Rational(n)) {}
  FormalScalar(const Rational& c)
      : num_(Laurent::constant(c)), den_(Laurent::constant(Rational(1))) {}
  explicit FormalScalar(Laurent p)
      : num_(std::move(p)), den_(Laurent::constant(Rational(1))) {}
  FormalScalar(Laurent n, Laurent d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw division_by_zero();
    normalize();
  }

  static FormalScalar monomial(const Laurent::Exp& e, const Rational& c = Rational(1)) {
    return FormalScalar(Laurent::monomial(e, c));
  }

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend FormalScalar operator+(const FormalScalar& a, const FormalScalar& b) {
    return FormalScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend FormalScalar operator-(const FormalScalar& a, const FormalScalar& b) {
    return FormalScalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend FormalScalar operator*(const FormalScalar& a, const FormalScalar& b) {
    return FormalScalar(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend FormalScalar operator/(const FormalScalar& a, const FormalScalar& b) {
    if (b.is_zero()) throw division_by_zero();
    return FormalScalar(a.num_ * b.den_, a.den_ * b.num_);
  }
  FormalScalar operator-() const {
    FormalScalar r = *this;
    r.num_ = -r.num_;
    return r;
  }
  FormalScalar& operator+=(const FormalScalar& o) { return *this = *this + o; }
  FormalScalar& operator-=(const FormalScalar& o) { return *this = *this - o; }
  FormalScalar& operator*=(const FormalScalar& o) { return *this = *this * o; }
  FormalScalar& operator/=(const FormalScalar& o) { return *this = *this / o; }

  friend bool operator==(const FormalScalar& a, const FormalScalar& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend bool operator!=(const FormalScalar& a, const FormalScalar& b) { return !(a == b); }

  /// Substitute rational generator values.
  Rational evaluate(const Rational& Q, const Rational& Ts, const Rational& Tl) const {
    Rational d = den_.evaluate(Q, Ts, Tl);
    if (d.is_zero()) throw division_by_zero();
    return num_.evaluate(Q, Ts, Tl) / d;
  }

  std::string str() const;

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = Laurent::constant(Rational(1));
      return;
    }
    auto [en, cn] = num_.extract_content();
    auto [ed, cd] = den_.extract_content();
    // carry the leftover monomial and content into the numerator
    Laurent::Exp shift{en[0] - ed[0], en[1] - ed[1], en[2] - ed[2]};
    num_ = num_ * Laurent::monomial(shift, cn / cd);
  }

  Laurent num_, den_;
};

/// Formal coefficient backend over the three generators.
class FormalBackend {
 public:
  using Scalar = FormalScalar;

  explicit FormalBackend(long D) : D_(D) {}

  /// Formal k-regime: t_c = q^{u_c k_c}, i.e. T_c is substituted by a power
  /// of Q; one-variable formal computations.
  static FormalBackend k_regime(long D, long u_short, long u_long, long ks, long kl) {
    FormalBackend b(D);
    b.k_ = std::array<long, 2>{ks, kl};
    b.t_sub_[0] = D * u_short * ks / 2;
    b.t_sub_[1] = D * u_long * kl / 2;
    return b;
  }

  long D() const { return D_; }
  std::optional<std::array<long, 2>> k_regime_exponents() const { return k_; }

  Scalar from_rational(const Rational& r) const { return Scalar(r); }

  Scalar q_pow(const Rational& e) const {
    Rational s = e * Rational(D_);
    if (!s.is_integer()) throw std::logic_error("q exponent not in (1/D)Z: " + e.str());
    return Scalar::monomial({s.as_long(), 0, 0});
  }
  Scalar t_half(int tclass, long n) const {
    if (k_) return Scalar::monomial({t_sub_[tclass] * n, 0, 0});
    Laurent::Exp e{0, 0, 0};
    e[static_cast<size_t>(tclass) + 1] = n;
    return Scalar::monomial(e);
  }
  Scalar t_pow(int tclass, const Rational& e) const {
    Rational s = e * Rational(2);
    if (!s.is_integer()) throw std::logic_error("t exponent not in (1/2)Z: " + e.str());
    return t_half(tclass, s.as_long());
  }
  Scalar of_record(const ExpRecord& r) const {
    return q_pow(r.q_exp) * t_pow(0, r.t_exp[0]) * t_pow(1, r.t_exp[1]);
  }

  std::string describe() const {
    std::ostringstream os;
    os << "formal D=" << D_;
    if (k_) os << " k=(" << (*k_)[0] << "," << (*k_)[1] << ")";
    return os.str();
  }

 private:
  long D_;
  std::optional<std::array<long, 2>> k_;
  long t_sub_[2] = {0, 0};
};

}  // namespace macd
