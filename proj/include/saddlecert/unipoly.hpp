#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "saddlecert/rational.hpp"

namespace saddlecert {

/// Dense univariate polynomial over Rational; coefficient k multiplies mu^k.
/// The stored coefficient sequence never ends in a zero unless the polynomial
/// is identically zero (empty coefficient vector, degree() == -1).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(Rational constant);
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs);

  static UniPoly zero() { return UniPoly(); }
  static UniPoly monomial(int degree, Rational coeff);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  Rational coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational leading() const;

  Rational eval(const Rational& x) const;
  UniPoly derivative() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& p, const Rational& s);
  friend UniPoly operator*(const Rational& s, const UniPoly& p) { return p * s; }
  friend UniPoly operator/(const UniPoly& p, const Rational& s);

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  /// Quotient and remainder; divisor must be non-zero.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

  /// Monic gcd (1 for coprime inputs, 0 only if both are zero).
  static UniPoly gcd(UniPoly a, UniPoly b);

  /// p / gcd(p, p'): same distinct roots, all simple.
  UniPoly square_free_part() const;

  /// Divides every coefficient by the leading one.
  UniPoly monic() const;

  std::string str(const std::string& var = "mu") const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Polynomial in zeta whose coefficients are polynomials in mu.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<UniPoly> zeta_coeffs);

  int degree() const { return static_cast<int>(zeta_coeffs_.size()) - 1; }
  bool is_zero() const { return zeta_coeffs_.empty(); }
  UniPoly coeff(int j) const;
  const std::vector<UniPoly>& zeta_coeffs() const { return zeta_coeffs_; }

  /// Substitutes a value for mu, leaving a univariate polynomial in zeta.
  UniPoly eval_mu(const Rational& mu) const;

  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    return a.zeta_coeffs_ == b.zeta_coeffs_;
  }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

 private:
  std::vector<UniPoly> zeta_coeffs_;
};

}  // namespace saddlecert
