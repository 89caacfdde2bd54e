#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace macd {

struct invalid_cartan_type : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Irreducible reduced Cartan type: family A..G plus rank, with the classical
/// rank restrictions enforced at construction.
class CartanType {
 public:
  CartanType(char family, int rank);

  /// Parses "A2", "E8", "b3", ...
  static CartanType parse(const std::string& s);

  char family() const { return family_; }
  int rank() const { return rank_; }
  bool simply_laced() const {
    return family_ == 'A' || family_ == 'D' || family_ == 'E';
  }

  /// Order of the Weyl group (exact; product formula, no enumeration).
  mpz_class weyl_order() const;

  /// Number of positive roots.
  int positive_root_count() const;

  /// Cartan type of the dual root system (B_n <-> C_n, others self-dual).
  CartanType dual() const;

  std::string str() const { return std::string(1, family_) + std::to_string(rank_); }

  friend bool operator==(const CartanType& a, const CartanType& b) {
    return a.family_ == b.family_ && a.rank_ == b.rank_;
  }
  friend bool operator!=(const CartanType& a, const CartanType& b) { return !(a == b); }

 private:
  char family_;
  int rank_;
};

}  // namespace macd
