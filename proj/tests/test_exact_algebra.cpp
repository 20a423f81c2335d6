#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <Eigen/Dense>

#include <random>

#include "saddlecert/certificate.hpp"
#include "saddlecert/poly_matrix.hpp"
#include "saddlecert/rational.hpp"
#include "saddlecert/sturm.hpp"
#include "saddlecert/unipoly.hpp"

using namespace saddlecert;

namespace {

Rational rand_rational(std::mt19937_64& rng, int mag = 20) {
  std::uniform_int_distribution<long> num(-mag, mag);
  std::uniform_int_distribution<long> den(1, mag);
  return Rational(num(rng), den(rng));
}

UniPoly rand_poly(std::mt19937_64& rng, int max_deg = 4) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::vector<Rational> c(deg(rng) + 1);
  for (auto& r : c) r = rand_rational(rng);
  return UniPoly(std::move(c));
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(Rational::from_string("1/5") == Rational(1, 5));
  CHECK(Rational::from_string("-81/10") == Rational(-81, 10));
  CHECK(Rational::from_string("-0.25") == Rational(-1, 4));
  CHECK(Rational::from_string("7") == Rational(7));
  CHECK(Rational(4, 8) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(-1, 2).str() == "-1/2");
  CHECK_THROWS(Rational::from_string("1/0"));
  CHECK_THROWS(Rational::from_string("abc"));
}

TEST_CASE("unipoly evaluation") {
  std::mt19937_64 rng(0);
  CHECK(UniPoly(Rational(7)).eval(rand_rational(rng)) == Rational(7));
  // constant polynomial 1 evaluates to 1 anywhere
  CHECK(UniPoly(Rational(1)).eval(Rational(1, 3)) == Rational(1));
  UniPoly p{Rational(6), Rational(-5), Rational(1)};  // 6 - 5mu + mu^2
  CHECK(p.eval(Rational(2)) == Rational(0));
  CHECK(p.eval(Rational(3)) == Rational(0));
  CHECK(p.eval(Rational(0)) == Rational(6));
}

TEST_CASE("unipoly ring axioms on random triples") {
  std::mt19937_64 rng(42);
  for (int it = 0; it < 200; ++it) {
    UniPoly a = rand_poly(rng), b = rand_poly(rng), c = rand_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + UniPoly::zero() == a);
    CHECK(a * UniPoly(Rational(1)) == a);
    CHECK(a - a == UniPoly::zero());
    CHECK(a * b == b * a);
  }
}

TEST_CASE("unipoly divmod and gcd") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 100; ++it) {
    UniPoly a = rand_poly(rng), b = rand_poly(rng);
    if (b.is_zero()) continue;
    auto [q, r] = UniPoly::divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
  UniPoly f{Rational(-1), Rational(0), Rational(1)};  // mu^2 - 1
  UniPoly g{Rational(1), Rational(1)};                // mu + 1
  CHECK(UniPoly::gcd(f, g) == g.monic());
}

TEST_CASE("char_poly on small constant matrices") {
  PolyMatrix d23(2);
  d23.set(0, 0, UniPoly(Rational(2)));
  d23.set(1, 1, UniPoly(Rational(3)));
  BiPoly p = char_poly(d23);
  CHECK(p.coeff(0) == UniPoly(Rational(6)));
  CHECK(p.coeff(1) == UniPoly(Rational(-5)));
  CHECK(p.coeff(2) == UniPoly(Rational(1)));

  PolyMatrix z(2);
  BiPoly pz = char_poly(z);
  CHECK(pz.coeff(0) == UniPoly::zero());
  CHECK(pz.coeff(1) == UniPoly::zero());
  CHECK(pz.coeff(2) == UniPoly(Rational(1)));
}

TEST_CASE("char_poly with planted rational spectrum") {
  // conjugate a diagonal by rational Givens rotations (Pythagorean triples)
  std::mt19937_64 rng(11);
  const std::pair<long, long> triples[] = {{3, 4}, {5, 12}, {8, 15}, {7, 24}};
  for (int it = 0; it < 20; ++it) {
    const int n = 4;
    std::vector<Rational> spec(n);
    for (auto& s : spec) s = rand_rational(rng, 6);
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i) a[i][i] = spec[i];
    std::uniform_int_distribution<int> pick(0, 3), coord(0, n - 1);
    for (int rot = 0; rot < 6; ++rot) {
      auto [x, y] = triples[pick(rng)];
      // (x^2-y^2, 2xy, x^2+y^2) gives an exact rational (cos, sin)
      long h = x * x + y * y;
      Rational c(x * x - y * y, h), s(2 * x * y, h);
      int i = coord(rng), j = coord(rng);
      if (i == j) continue;
      // a <- G a G^T with G the rotation in plane (i, j)
      for (int k = 0; k < n; ++k) {
        Rational ai = a[i][k], aj = a[j][k];
        a[i][k] = c * ai - s * aj;
        a[j][k] = s * ai + c * aj;
      }
      for (int k = 0; k < n; ++k) {
        Rational ai = a[k][i], aj = a[k][j];
        a[k][i] = c * ai - s * aj;
        a[k][j] = s * ai + c * aj;
      }
    }
    PolyMatrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        REQUIRE(a[i][j] == a[j][i]);
        m.set(i, j, UniPoly(a[i][j]));
      }
    BiPoly p = char_poly(m);
    for (const Rational& lam : spec) {
      Rational v;
      for (int j = 0; j <= p.degree(); ++j) {
        Rational pw(1);
        for (int k = 0; k < j; ++k) pw *= lam;
        v += p.coeff(j).eval(Rational(0)) * pw;
      }
      CHECK(v == Rational(0));
    }
  }
}

TEST_CASE("sturm root counting on constructed polynomials") {
  UniPoly q{Rational(-1, 4), Rational(0), Rational(1)};  // mu^2 - 1/4
  CHECK(sturm_root_count_open(q, Rational(0), Rational(1)) == 1);

  UniPoly r{Rational(2), Rational(-3), Rational(1)};  // roots 1, 2
  CHECK(sturm_root_count_open(r, Rational(0), Rational(1)) == 0);
  CHECK(sturm_root_count(r, Rational(0), Rational(1)) == 1);  // half-open picks up 1

  // (mu - 1/3)(mu - 2/3)(mu + 5)
  UniPoly f = UniPoly{Rational(-1, 3), Rational(1)} *
              UniPoly{Rational(-2, 3), Rational(1)} *
              UniPoly{Rational(5), Rational(1)};
  CHECK(sturm_root_count_open(f, Rational(0), Rational(1)) == 2);

  CHECK_THROWS(sturm_root_count(UniPoly::zero(), Rational(0), Rational(1)));
}

TEST_CASE("sturm count matches brute force on random linear-factor products") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> nfac(1, 5);
  for (int it = 0; it < 100; ++it) {
    int k = nfac(rng);
    UniPoly p(Rational(1));
    std::vector<Rational> roots;
    for (int i = 0; i < k; ++i) {
      Rational root = rand_rational(rng, 4);
      roots.push_back(root);
      p = p * UniPoly{-root, Rational(1)};
    }
    Rational lo(-2), hi(2);
    int expect = 0;
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    for (const Rational& root : roots)
      if (root > lo && root <= hi) ++expect;
    CHECK(sturm_root_count(p, lo, hi) == expect);
    // square-free reduction changes nothing about distinct counts
    CHECK(sturm_root_count(p.square_free_part(), lo, hi) == expect);
  }
}

TEST_CASE("descartes sufficient condition") {
  CHECK(descartes_all_roots_nonneg({1, -1, 1}));        // zeta^2 - 5 zeta + 6
  CHECK_FALSE(descartes_all_roots_nonneg({1, 1, 1}));   // zeta^2 + 5 zeta + 6
  CHECK(descartes_all_roots_nonneg({0, -1, 1}));        // low-order zero skipped
  CHECK_THROWS_AS(descartes_all_roots_nonneg({0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(descartes_all_roots_nonneg({1, 0, 1}), std::domain_error);
}

TEST_CASE("descartes on the mu = 0 row of the x characteristic table") {
  Certificate cert = load_certificate();
  std::vector<int> signs;
  for (int j = 0; j <= 8; ++j) signs.push_back(cert.Cx[0][j].sign());
  CHECK(signs[0] == 0);
  CHECK(descartes_all_roots_nonneg(signs));
}

TEST_CASE("char_poly of Sx reproduces the table entries") {
  Certificate cert = load_certificate();
  BiPoly px = char_poly(cert.Sx);
  CHECK(px.coeff(8) == UniPoly(Rational(1)));
  CHECK(px.coeff(7).eval(Rational(0)) == Rational(-4322, 25));
}

TEST_CASE("psd_check_constant on simple matrices") {
  PolyMatrix id3(3);
  for (int i = 0; i < 3; ++i) id3.set(i, i, UniPoly(Rational(1)));
  CHECK(psd_check_constant(id3));

  PolyMatrix ind(2);
  ind.set(0, 0, UniPoly(Rational(1)));
  ind.set(1, 1, UniPoly(Rational(-1)));
  CHECK_FALSE(psd_check_constant(ind));

  Certificate cert = load_certificate();
  PolyMatrix gap(3);
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      Rational v = (i == j ? Rational(150) : Rational(0)) - cert.Qx[i][j];
      gap.set(i, j, UniPoly(v));
    }
  CHECK(psd_check_constant(gap));
}

TEST_CASE("psd_check_constant agrees with a floating-point eigensolver") {
  std::mt19937_64 rng(5);
  int tested = 0;
  for (int it = 0; it < 100; ++it) {
    const int n = 4;
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) a[i][j] = a[j][i] = rand_rational(rng, 8);
    // half the cases get a diagonal boost toward PSD territory
    if (it % 2 == 0)
      for (int i = 0; i < n; ++i) a[i][i] += Rational(20);

    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = a[i][j].to_double();
    double lmin = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m).eigenvalues()(0);
    if (std::abs(lmin) < 1e-7) continue;
    ++tested;

    PolyMatrix pm(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) pm.set(i, j, UniPoly(a[i][j]));
    CHECK(psd_check_constant(pm) == (lmin > 0));
  }
  CHECK(tested >= 80);
}

TEST_CASE("exact ldlt handles zero pivots on singular psd matrices") {
  // rank-1 psd: vv^T
  std::vector<std::vector<Rational>> a(3, std::vector<Rational>(3));
  Rational v[3] = {Rational(1), Rational(-2), Rational(3, 2)};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a[i][j] = v[i] * v[j];
  CHECK(psd_via_exact_ldlt(a));
  a[2][2] -= Rational(1, 1000000);
  CHECK_FALSE(psd_via_exact_ldlt(a));
}
