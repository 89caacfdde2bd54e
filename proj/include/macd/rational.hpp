#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace macd {

struct division_by_zero : std::domain_error {
  division_by_zero() : std::domain_error("exact division by zero") {}
};

/// Exact rational number. Thin value wrapper around GMP's mpq_class that
/// keeps results canonical and hides gmp expression templates from Eigen.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(n) {}
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw division_by_zero();
    v_.canonicalize();
  }
  explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }
  explicit Rational(const mpz_class& z) : v_(z) {}

  // Accepts "p", "-p", "p/q".
  static Rational parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (q.get_den() == 0) throw division_by_zero();
    q.canonicalize();
    return Rational(std::move(q));
  }

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  // Floor as machine integer; throws if out of range.
  long floor_long() const {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    if (!f.fits_slong_p()) throw std::overflow_error("rational floor out of range");
    return f.get_si();
  }
  // Exact conversion to machine integer; throws unless an integer in range.
  long as_long() const {
    if (!is_integer()) throw std::domain_error("rational is not an integer: " + str());
    if (!v_.get_num().fits_slong_p()) throw std::overflow_error("integer out of range");
    return v_.get_num().get_si();
  }

  std::string str() const { return v_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw division_by_zero();
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_.get_str();
  }

 private:
  mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational inverse(const Rational& r) {
  if (r.is_zero()) throw division_by_zero();
  mpq_class inv;
  mpq_inv(inv.get_mpq_t(), r.raw().get_mpq_t());
  return Rational(std::move(inv));
}

/// r^e for any integer e (negative powers invert first).
inline Rational pow(const Rational& r, long e) {
  if (e == 0) return Rational(1);
  Rational base = e < 0 ? inverse(r) : r;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1ul
                          : static_cast<unsigned long>(e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(), n);
  mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(), n);
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(std::move(q));
}

inline mpz_class factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

}  // namespace macd

namespace Eigen {

template <>
struct NumTraits<macd::Rational> {
  using Real = macd::Rational;
  using NonInteger = macd::Rational;
  using Nested = macd::Rational;
  using Literal = macd::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60
  };
  static inline macd::Rational epsilon() { return macd::Rational(0); }
  static inline macd::Rational dummy_precision() { return macd::Rational(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
