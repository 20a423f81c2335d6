#pragma once

#include <vector>

#include "saddlecert/unipoly.hpp"

namespace saddlecert {

/// Sturm chain of p: starts with p, p', then each term is the negated
/// Euclidean remainder of the two before; stops at the zero remainder.
class SturmChain {
 public:
  explicit SturmChain(const UniPoly& p);

  const std::vector<UniPoly>& sequence() const { return seq_; }

  /// Sign variations of the chain evaluated at x (zeros skipped).
  int variations_at(const Rational& x) const;

 private:
  std::vector<UniPoly> seq_;
};

/// Number of distinct real roots of p in the half-open interval (lo, hi].
/// The input is reduced to its square-free part first, so multiple roots
/// count once. Rejects the zero polynomial and lo >= hi.
int sturm_root_count(const UniPoly& p, const Rational& lo, const Rational& hi);

/// Distinct real roots in the open interval (lo, hi): the half-open count
/// minus an exact root test at hi.
int sturm_root_count_open(const UniPoly& p, const Rational& lo, const Rational& hi);

/// Sufficient condition for a real-rooted polynomial to have only
/// non-negative roots: after skipping zero low-order coefficients, the
/// remaining signs are non-zero and strictly alternate. Signs are listed
/// from the constant coefficient upward.
///
/// Throws std::invalid_argument on an all-zero sequence and std::domain_error
/// if a zero appears among the high-order block (the condition does not
/// apply there, so neither true nor false would be sound).
bool descartes_all_roots_nonneg(const std::vector<int>& signs);

}  // namespace saddlecert
