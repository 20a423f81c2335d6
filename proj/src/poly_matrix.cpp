#include "saddlecert/poly_matrix.hpp"

#include <stdexcept>
#include <utility>

#include "saddlecert/sturm.hpp"

namespace saddlecert {

PolyMatrix::PolyMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * n) {
  if (n <= 0) throw std::invalid_argument("PolyMatrix: dimension must be positive");
}

const UniPoly& PolyMatrix::at(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_)
    throw std::out_of_range("PolyMatrix::at");
  return e_[static_cast<size_t>(i) * n_ + j];
}

void PolyMatrix::set(int i, int j, UniPoly value) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_)
    throw std::out_of_range("PolyMatrix::set");
  e_[static_cast<size_t>(i) * n_ + j] = value;
  e_[static_cast<size_t>(j) * n_ + i] = std::move(value);
}

void PolyMatrix::add(int i, int j, const UniPoly& value) {
  set(i, j, at(i, j) + value);
}

bool PolyMatrix::is_symmetric() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool PolyMatrix::is_constant() const {
  for (const UniPoly& p : e_)
    if (p.degree() > 0) return false;
  return true;
}

bool PolyMatrix::is_zero() const {
  for (const UniPoly& p : e_)
    if (!p.is_zero()) return false;
  return true;
}

std::vector<std::vector<Rational>> PolyMatrix::eval_mu(const Rational& mu) const {
  std::vector<std::vector<Rational>> out(n_, std::vector<Rational>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[i][j] = at(i, j).eval(mu);
  return out;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
  if (o.n_ != n_) throw std::invalid_argument("PolyMatrix: dimension mismatch");
  for (size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
  return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& o) {
  if (o.n_ != n_) throw std::invalid_argument("PolyMatrix: dimension mismatch");
  for (size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
  return *this;
}

PolyMatrix PolyMatrix::scaled(const UniPoly& s) const {
  PolyMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j) out.set(i, j, at(i, j) * s);
  return out;
}

PolyMatrix PolyMatrix::top_left(int m) const {
  if (m <= 0 || m > n_) throw std::invalid_argument("PolyMatrix::top_left");
  PolyMatrix out(m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) out.set(i, j, at(i, j));
  return out;
}

namespace {

// Dense polynomial matrix product, no symmetry assumed on the result.
std::vector<UniPoly> mat_mul(const PolyMatrix& a, const std::vector<UniPoly>& b, int n) {
  std::vector<UniPoly> c(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const UniPoly& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        const UniPoly& bkj = b[static_cast<size_t>(k) * n + j];
        if (bkj.is_zero()) continue;
        c[static_cast<size_t>(i) * n + j] += aik * bkj;
      }
    }
  return c;
}

}  // namespace

BiPoly char_poly(const PolyMatrix& m) {
  const int n = m.dim();
  // Faddeev-LeVerrier: det(lambda I - A) = lambda^n + c1 lambda^{n-1} + ... + cn
  // with B0 = I, Mk = A B_{k-1}, ck = -tr(Mk)/k, Bk = Mk + ck I.
  std::vector<UniPoly> b(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) b[static_cast<size_t>(i) * n + i] = UniPoly(Rational(1));
  std::vector<UniPoly> c(n + 1);
  c[n] = UniPoly(Rational(1));  // coefficient of lambda^n
  for (int k = 1; k <= n; ++k) {
    std::vector<UniPoly> mk = mat_mul(m, b, n);
    UniPoly trace;
    for (int i = 0; i < n; ++i) trace += mk[static_cast<size_t>(i) * n + i];
    UniPoly ck = -(trace / Rational(k));
    for (int i = 0; i < n; ++i) mk[static_cast<size_t>(i) * n + i] += ck;
    c[n - k] = std::move(ck);
    b = std::move(mk);
  }
  // det(A - zeta I) = (-1)^n det(zeta I - A)
  if (n % 2 != 0)
    for (UniPoly& p : c) p = -p;
  return BiPoly(std::move(c));
}

bool psd_via_exact_ldlt(std::vector<std::vector<Rational>> a) {
  const int n = static_cast<int>(a.size());
  for (int k = 0; k < n; ++k) {
    // symmetric pivot: largest remaining diagonal entry
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (a[i][i] > a[piv][piv]) piv = i;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      for (int i = 0; i < n; ++i) std::swap(a[i][piv], a[i][k]);
    }
    const Rational d = a[k][k];
    if (d.sign() < 0) return false;
    if (d.is_zero()) {
      // PSD requires the whole remaining block to vanish
      for (int i = k; i < n; ++i)
        for (int j = k; j < n; ++j)
          if (!a[i][j].is_zero()) return false;
      return true;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a[i][j] -= a[i][k] * a[k][j] / d;
  }
  return true;
}

bool psd_check_constant(const PolyMatrix& m) {
  if (!m.is_constant())
    throw std::invalid_argument("psd_check_constant: entries must be degree 0");

  BiPoly p = char_poly(m);  // det(M - zeta I); monic in zeta for even dim
  std::vector<int> signs(m.dim() + 1);
  // Work with det(zeta I - M) = (-1)^n det(M - zeta I) so roots are eigenvalues.
  const int flip = (m.dim() % 2 != 0) ? -1 : 1;
  for (int j = 0; j <= m.dim(); ++j) signs[j] = flip * p.coeff(j).eval(Rational(0)).sign();
  bool by_descartes;
  try {
    by_descartes = descartes_all_roots_nonneg(signs);
  } catch (const std::domain_error&) {
    // an interior zero is impossible when all roots are non-negative
    by_descartes = false;
  }

  bool by_ldlt = psd_via_exact_ldlt(m.eval_mu(Rational(0)));
  if (by_descartes != by_ldlt)
    throw std::logic_error("psd_check_constant: routes disagree");
  return by_descartes;
}

}  // namespace saddlecert
