#include "saddlecert/unipoly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace saddlecert {

UniPoly::UniPoly(Rational constant) {
  coeffs_.push_back(std::move(constant));
  normalize();
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {
  normalize();
}

UniPoly UniPoly::monomial(int degree, Rational coeff) {
  if (degree < 0) throw std::invalid_argument("UniPoly::monomial: negative degree");
  std::vector<Rational> c(degree + 1);
  c[degree] = std::move(coeff);
  return UniPoly(std::move(c));
}

void UniPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational();
  return coeffs_[k];
}

Rational UniPoly::leading() const {
  if (coeffs_.empty()) return Rational();
  return coeffs_.back();
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly();
  std::vector<Rational> d(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k)
    d[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::operator-() const {
  std::vector<Rational> c(coeffs_.size());
  for (size_t k = 0; k < coeffs_.size(); ++k) c[k] = -coeffs_[k];
  return UniPoly(std::move(c));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  normalize();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& p, const Rational& s) {
  std::vector<Rational> c(p.coeffs_.size());
  for (size_t k = 0; k < p.coeffs_.size(); ++k) c[k] = p.coeffs_[k] * s;
  return UniPoly(std::move(c));
}

UniPoly operator/(const UniPoly& p, const Rational& s) {
  if (s.is_zero()) throw std::domain_error("UniPoly: division by zero scalar");
  std::vector<Rational> c(p.coeffs_.size());
  for (size_t k = 0; k < p.coeffs_.size(); ++k) c[k] = p.coeffs_[k] / s;
  return UniPoly(std::move(c));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("UniPoly::divmod: zero divisor");
  UniPoly rem = a;
  if (a.degree() < b.degree()) return {UniPoly(), rem};
  std::vector<Rational> q(a.degree() - b.degree() + 1);
  const Rational lead = b.leading();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int shift = rem.degree() - b.degree();
    Rational factor = rem.leading() / lead;
    q[shift] = factor;
    rem -= UniPoly::monomial(shift, factor) * b;
  }
  return {UniPoly(std::move(q)), rem};
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this / leading();
}

UniPoly UniPoly::square_free_part() const {
  if (is_zero()) throw std::domain_error("UniPoly: square-free part of zero");
  if (degree() == 0) return UniPoly(Rational(1));
  UniPoly g = gcd(*this, derivative());
  return divmod(*this, g).first;
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) os << " + ";
    os << coeffs_[k].str();
    if (k >= 1) os << "*" << var;
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

BiPoly::BiPoly(std::vector<UniPoly> zeta_coeffs) : zeta_coeffs_(std::move(zeta_coeffs)) {
  while (!zeta_coeffs_.empty() && zeta_coeffs_.back().is_zero()) zeta_coeffs_.pop_back();
}

UniPoly BiPoly::coeff(int j) const {
  if (j < 0 || j >= static_cast<int>(zeta_coeffs_.size())) return UniPoly();
  return zeta_coeffs_[j];
}

UniPoly BiPoly::eval_mu(const Rational& mu) const {
  std::vector<Rational> c(zeta_coeffs_.size());
  for (size_t j = 0; j < zeta_coeffs_.size(); ++j) c[j] = zeta_coeffs_[j].eval(mu);
  return UniPoly(std::move(c));
}

}  // namespace saddlecert
