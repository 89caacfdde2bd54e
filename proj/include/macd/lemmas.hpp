#pragma once

#include "macd/pair.hpp"

namespace macd {

/// Machine check of the two root-displacement lemmas behind the operator's
/// polynomiality: for small dominant nu <= omega and qualifying beta,
/// (a) the stated root set is a single W_{nu,omega}-orbit, and
/// (b) exactly one root alpha in that orbit makes nu -+ alpha_*^v dominant,
/// with the displaced weight again small (and <= omega for the raising case).
struct LemmaReport {
  Weight omega;
  bool passed = true;
  int cases_lowering = 0;  // checked (nu, beta) pairs, <beta_*,nu> = 2
  int cases_raising = 0;   // checked (nu, beta) pairs, beta in R_nu, <beta_*,omega> = 2
  bool vacuous = false;    // no qualifying beta at all (minuscule omega)
  std::vector<std::string> failures;
};

LemmaReport verify_appendix_lemmas(const AdmissiblePair& pair, const Weight& omega);

}  // namespace macd
