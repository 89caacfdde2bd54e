#include "macd/cartan.hpp"

#include <cctype>

namespace macd {

CartanType::CartanType(char family, int rank)
    : family_(static_cast<char>(std::toupper(static_cast<unsigned char>(family)))),
      rank_(rank) {
  auto fail = [&](const std::string& constraint) {
    throw invalid_cartan_type("invalid Cartan type " + std::string(1, family_) +
                              std::to_string(rank_) + ": requires " + constraint);
  };
  switch (family_) {
    case 'A':
      if (rank_ < 1) fail("rank >= 1");
      break;
    case 'B':
      if (rank_ < 2) fail("rank >= 2");
      break;
    case 'C':
      if (rank_ < 2) fail("rank >= 2");
      break;
    case 'D':
      if (rank_ < 3) fail("rank >= 3");
      break;
    case 'E':
      if (rank_ < 6 || rank_ > 8) fail("rank in {6,7,8}");
      break;
    case 'F':
      if (rank_ != 4) fail("rank = 4");
      break;
    case 'G':
      if (rank_ != 2) fail("rank = 2");
      break;
    default:
      throw invalid_cartan_type("unknown family '" + std::string(1, family_) +
                                "': expected one of A,B,C,D,E,F,G");
  }
}

CartanType CartanType::parse(const std::string& s) {
  if (s.size() < 2) throw invalid_cartan_type("cannot parse Cartan type: " + s);
  char fam = s[0];
  std::string num = s.substr(1);
  for (char ch : num)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw invalid_cartan_type("cannot parse Cartan type: " + s);
  return CartanType(fam, std::stoi(num));
}

mpz_class CartanType::weyl_order() const {
  auto fac = [](unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
  };
  mpz_class two_pow;
  switch (family_) {
    case 'A':
      return fac(static_cast<unsigned long>(rank_) + 1);
    case 'B':
    case 'C':
      mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(rank_));
      return two_pow * fac(static_cast<unsigned long>(rank_));
    case 'D':
      mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(rank_ - 1));
      return two_pow * fac(static_cast<unsigned long>(rank_));
    case 'E':
      if (rank_ == 6) return 51840;
      if (rank_ == 7) return 2903040;
      return 696729600;
    case 'F':
      return 1152;
    default:  // G
      return 12;
  }
}

int CartanType::positive_root_count() const {
  switch (family_) {
    case 'A':
      return rank_ * (rank_ + 1) / 2;
    case 'B':
    case 'C':
      return rank_ * rank_;
    case 'D':
      return rank_ * (rank_ - 1);
    case 'E':
      if (rank_ == 6) return 36;
      if (rank_ == 7) return 63;
      return 120;
    case 'F':
      return 24;
    default:  // G
      return 6;
  }
}

CartanType CartanType::dual() const {
  if (family_ == 'B') return CartanType('C', rank_);
  if (family_ == 'C') return CartanType('B', rank_);
  return *this;
}

}  // namespace macd
