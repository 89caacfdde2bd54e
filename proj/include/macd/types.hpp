#pragma once

#include <Eigen/Dense>
#include <vector>

#include "macd/rational.hpp"

namespace macd {

using VecQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using MatQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using MatI = Eigen::MatrixXi;

/// Integer coordinate vector (fundamental-weight basis or simple-root basis).
using Coords = std::vector<long>;

inline Coords coords_zero(int n) { return Coords(static_cast<size_t>(n), 0); }

inline Coords coords_add(const Coords& a, const Coords& b) {
  Coords r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline Coords coords_sub(const Coords& a, const Coords& b) {
  Coords r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

inline Coords coords_neg(const Coords& a) {
  Coords r(a);
  for (auto& x : r) x = -x;
  return r;
}

inline Coords coords_scale(const Coords& a, long s) {
  Coords r(a);
  for (auto& x : r) x *= s;
  return r;
}

inline long coords_dot(const Coords& a, const Coords& b) {
  long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool coords_is_zero(const Coords& a) {
  for (auto x : a)
    if (x != 0) return false;
  return true;
}

inline bool coords_nonneg(const Coords& a) {
  for (auto x : a)
    if (x < 0) return false;
  return true;
}

}  // namespace macd
