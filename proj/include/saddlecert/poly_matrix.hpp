#pragma once

#include <vector>

#include "saddlecert/rational.hpp"
#include "saddlecert/unipoly.hpp"

namespace saddlecert {

/// Symmetric n x n matrix with UniPoly entries.
class PolyMatrix {
 public:
  explicit PolyMatrix(int n);

  int dim() const { return n_; }

  const UniPoly& at(int i, int j) const;
  /// Sets both (i,j) and (j,i).
  void set(int i, int j, UniPoly value);
  void add(int i, int j, const UniPoly& value);

  bool is_symmetric() const;  // trivially true; kept for constructed inputs
  bool is_constant() const;   // every entry degree <= 0
  bool is_zero() const;

  /// Entrywise evaluation at mu; requires a constant result consumer.
  std::vector<std::vector<Rational>> eval_mu(const Rational& mu) const;

  PolyMatrix& operator+=(const PolyMatrix& o);
  PolyMatrix& operator-=(const PolyMatrix& o);
  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
  PolyMatrix scaled(const UniPoly& s) const;

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }
  friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

  /// Leading principal submatrix of size m.
  PolyMatrix top_left(int m) const;

 private:
  int n_;
  std::vector<UniPoly> e_;  // row-major, symmetry maintained by set()
};

/// det(M - zeta I), expanded exactly via Faddeev-LeVerrier. The only
/// divisions are by the integers 1..n, which are exact over the rationals,
/// so no polynomial fraction field is ever needed.
BiPoly char_poly(const PolyMatrix& m);

/// Exact PSD decision for a matrix with degree-0 entries. Primary route:
/// characteristic polynomial + Descartes sign pattern (valid because a
/// symmetric matrix is real-rooted). Cross-checked against a pivoted exact
/// LDL^T factorization; disagreement would indicate a bug and throws.
bool psd_check_constant(const PolyMatrix& m);

/// The LDL^T route on its own (symmetric pivoting on the largest diagonal
/// entry; a vanishing pivot forces the whole remaining block to be zero).
bool psd_via_exact_ldlt(std::vector<std::vector<Rational>> a);

}  // namespace saddlecert
