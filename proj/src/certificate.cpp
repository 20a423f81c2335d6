#include "saddlecert/certificate.hpp"

#include <json.hpp>
#include <stdexcept>

#include "saddlecert/certificate_data.hpp"
#include "saddlecert/sturm.hpp"

namespace saddlecert {

namespace {

Rational rat(const char* s) { return Rational::from_string(s); }

PolyMatrix parse_s(const char* const data[8][8][3]) {
  PolyMatrix m(kCanonicalBlockDim);
  for (int i = 0; i < 8; ++i)
    for (int j = i; j < 8; ++j)
      m.set(i, j, UniPoly{rat(data[i][j][0]), rat(data[i][j][1]), rat(data[i][j][2])});
  return m;
}

Mat3 parse_q(const char* const data[3][3]) {
  Mat3 q;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) q[i][j] = rat(data[i][j]);
  return q;
}

}  // namespace

Certificate load_certificate() {
  Certificate c;
  c.Qx = parse_q(detail::kQx);
  c.Qy = parse_q(detail::kQy);
  c.lambda1 = Rational(4);
  c.lambda2 = Rational(79, 5);
  c.lambda3 = Rational(81, 5);
  c.Sx = parse_s(detail::kSx);
  c.Sy = parse_s(detail::kSy);
  c.Cx.assign(8, std::vector<Rational>(9));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 9; ++j) c.Cx[i][j] = rat(detail::kCx[i][j]);
  c.Cy.assign(10, std::vector<Rational>(9));
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 9; ++j) c.Cy[i][j] = rat(detail::kCy[i][j]);
  return c;
}

const std::vector<MultiplierTerm>& multiplier_schedule() {
  using F = MultiplierTerm::Family;
  // The third concavity term takes x_{t+1}, the point actually used by the
  // alternating ascent step; with x_t instead, the function values fail to
  // cancel and an out-of-basis gradient coordinate survives (the verifier
  // reports this for any schedule through basis_mismatch).
  static const std::vector<MultiplierTerm> schedule = {
      {F::Smooth, Idx::T, Idx::T, Idx::T1, Idx::T1, 1},
      {F::Convex, Idx::T, Idx::T1, Idx::T, Idx::T, 2},
      {F::Convex, Idx::Star, Idx::T, Idx::T, Idx::T, 2},
      {F::Concave, Idx::T, Idx::Star, Idx::Star, Idx::T, 2},
      {F::Convex, Idx::Star, Idx::T1, Idx::T1, Idx::T, 3},
      {F::Concave, Idx::T1, Idx::Star, Idx::Star, Idx::T, 3},
      {F::Concave, Idx::T, Idx::T1, Idx::T1, Idx::T, 3},
      {F::Convex, Idx::T1, Idx::Star, Idx::Star, Idx::T, 23},
      {F::Concave, Idx::Star, Idx::T, Idx::T1, Idx::T, 23},
  };
  return schedule;
}

namespace {

// Quadratic-form contribution s * (c0,c1,c2)' Q3 (c0,c1,c2) over one block.
void add_qform(PolyMatrix& quad, const Mat3& q,
               const std::array<BlockVec, 3>& coords, const UniPoly& s) {
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      add_sym_outer(quad, coords[a], coords[b], s * q[a][b]);
}

Rational weight(const Certificate& cert, int id) {
  switch (id) {
    case 1: return cert.lambda1;
    case 2: return cert.lambda2;
    case 3: return cert.lambda3;
    case 23: return cert.lambda2 + cert.lambda3;
  }
  throw std::logic_error("unknown multiplier weight id");
}

}  // namespace

SymExpr assemble_residual(const Certificate& cert) {
  // 2(1-mu), 2(1-mu)(1-mu/5), 2(1-mu)^2
  const UniPoly clear{Rational(2), Rational(-2)};
  const UniPoly clear_contract{Rational(2), Rational(-12, 5), Rational(2, 5)};
  const UniPoly clear_sq{Rational(2), Rational(-4), Rational(2)};

  SymExpr r;
  const int gtt = gradient_slot({Idx::T, Idx::T});
  const std::array<BlockVec, 3> xi_x = {unit_vec(0), unit_vec(gtt), unit_vec(7)};
  const std::array<BlockVec, 3> xi_y = xi_x;  // same slot layout per block
  const SuccessorMap nxt = successor_coordinates();
  const std::array<BlockVec, 3> xi1_x = {nxt.x_displacement, nxt.x_gradient, nxt.x_momentum};
  const std::array<BlockVec, 3> xi1_y = {nxt.y_displacement, nxt.y_gradient, nxt.y_momentum};

  add_qform(r.quad_x, cert.Qx, xi_x, clear_contract);
  add_qform(r.quad_y, cert.Qy, xi_y, clear_contract);
  add_qform(r.quad_x, cert.Qx, xi1_x, -clear);
  add_qform(r.quad_y, cert.Qy, xi1_y, -clear);
  add_sym_outer(r.quad_x, unit_vec(gtt), unit_vec(gtt), -clear_sq);
  add_sym_outer(r.quad_y, unit_vec(gtt), unit_vec(gtt), -clear_sq);

  for (const MultiplierTerm& t : multiplier_schedule()) {
    SymExpr m;
    switch (t.family) {
      case MultiplierTerm::Family::Smooth:
        m = expand_smoothness(t.i, t.j, t.k, t.l);
        break;
      case MultiplierTerm::Family::Convex:
        m = expand_co_coercivity(CoercivityRole::ConvexInX, t.i, t.j, t.k);
        break;
      case MultiplierTerm::Family::Concave:
        m = expand_co_coercivity(CoercivityRole::ConcaveInY, t.i, t.j, t.k);
        break;
    }
    r -= m.scaled(weight(cert, t.weight_id));
  }
  return r;
}

VerificationReport verify_identity(const Certificate& cert) {
  VerificationReport rep;
  SymExpr r = assemble_residual(cert);

  rep.funvals_cancel = true;
  for (const auto& [p, c] : r.funvals) {
    if (!c.is_zero()) {
      rep.funvals_cancel = false;
      rep.diagnostics.push_back("function value at grid " + grid_name(p) +
                                " survives with coefficient " + c.str());
    }
  }

  // canonical 8x8 blocks against the appendix matrices
  rep.residual_matches_appendix = true;
  for (Block b : {Block::X, Block::Y}) {
    const PolyMatrix& quad = b == Block::X ? r.quad_x : r.quad_y;
    const PolyMatrix& ref = b == Block::X ? cert.Sx : cert.Sy;
    for (int i = 0; i < kCanonicalBlockDim; ++i)
      for (int j = i; j < kCanonicalBlockDim; ++j)
        if (quad.at(i, j) != ref.at(i, j)) {
          rep.residual_matches_appendix = false;
          rep.diagnostics.push_back(
              std::string(b == Block::X ? "Sx" : "Sy") + " entry (" +
              block_basis(b)[i].name() + ", " + block_basis(b)[j].name() +
              "): residual " + quad.at(i, j).str() + " vs certificate " +
              ref.at(i, j).str());
        }
  }

  // surviving coefficients on appended, non-canonical coordinates
  for (Block b : {Block::X, Block::Y}) {
    const PolyMatrix& quad = b == Block::X ? r.quad_x : r.quad_y;
    for (int i = kCanonicalBlockDim; i < kBlockDim; ++i) {
      bool hit = false;
      for (int j = 0; j < kBlockDim; ++j)
        if (!quad.at(i, j).is_zero()) hit = true;
      if (hit) {
        rep.basis_mismatch.push_back(block_basis(b)[i]);
        rep.diagnostics.push_back("non-canonical coordinate " +
                                  block_basis(b)[i].name() +
                                  " carries a non-zero coefficient");
      }
    }
  }
  return rep;
}

bool verify_q_bounds(const Certificate& cert) {
  auto to_matrix = [](const Mat3& q) {
    PolyMatrix m(3);
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) m.set(i, j, UniPoly(q[i][j]));
    return m;
  };
  PolyMatrix qx = to_matrix(cert.Qx), qy = to_matrix(cert.Qy);
  PolyMatrix e11(3), eye(3);
  e11.set(0, 0, UniPoly(Rational(50)));
  for (int i = 0; i < 3; ++i) eye.set(i, i, UniPoly(Rational(150)));
  return psd_check_constant(qx - e11) && psd_check_constant(qy - e11) &&
         psd_check_constant(eye - qx) && psd_check_constant(eye - qy);
}

bool verify_charpoly_tables(const Certificate& cert) {
  for (int which = 0; which < 2; ++which) {
    const PolyMatrix& s = which == 0 ? cert.Sx : cert.Sy;
    const auto& table = which == 0 ? cert.Cx : cert.Cy;
    BiPoly p = char_poly(s);
    if (p.degree() != 8) return false;
    for (int j = 0; j < 9; ++j) {
      std::vector<Rational> coeffs(table.size());
      for (size_t i = 0; i < table.size(); ++i) coeffs[i] = table[i][j];
      if (p.coeff(j) != UniPoly(std::move(coeffs))) return false;
    }
  }
  return true;
}

PsdIntervalResult verify_psd_on_interval(const PolyMatrix& s) {
  PsdIntervalResult res;
  const int n = s.dim();
  BiPoly p = char_poly(s);

  std::vector<UniPoly> c(n + 1);
  for (int j = 0; j <= n; ++j) {
    c[j] = p.coeff(j);
    if (c[j].is_zero()) {
      res.failure = "coefficient c_" + std::to_string(j) + " is identically zero";
      return res;
    }
  }

  // (ii) alternating signs at mu = 0; only c_0 may vanish there
  std::vector<int> signs(n + 1);
  for (int j = 0; j <= n; ++j) {
    signs[j] = c[j].eval(Rational(0)).sign();
    if (j >= 1 && signs[j] == 0) {
      res.failure = "c_" + std::to_string(j) + "(0) = 0 outside the allowed c_0 case";
      return res;
    }
  }
  try {
    if (!descartes_all_roots_nonneg(signs)) {
      res.failure = "sign pattern at mu = 0 does not alternate";
      return res;
    }
  } catch (const std::exception& e) {
    res.failure = std::string("sign pattern at mu = 0: ") + e.what();
    return res;
  }

  // (iii) persistence when c_0 vanishes at 0
  if (signs[0] == 0) {
    const Rational lin = c[0].coeff(1);
    if (!(lin.sign() > 0)) {
      res.failure = "mu-linear coefficient of c_0 is not strictly positive";
      return res;
    }
    if (lin.sign() == signs[1]) {
      res.failure = "mu-linear coefficient of c_0 does not oppose the sign of c_1(0)";
      return res;
    }
  }

  // (iv) no coefficient polynomial changes sign inside (0,1)
  for (int j = 0; j <= n; ++j) {
    if (c[j].degree() == 0) continue;
    int roots = sturm_root_count_open(c[j], Rational(0), Rational(1));
    if (roots != 0) {
      res.failure = "c_" + std::to_string(j) + " has " + std::to_string(roots) +
                    " root(s) in (0,1)";
      return res;
    }
  }

  res.ok = true;
  return res;
}

VerificationReport verify_certificate(const Certificate& cert) {
  VerificationReport rep = verify_identity(cert);
  rep.q_sandwich = verify_q_bounds(cert);
  if (!rep.q_sandwich) rep.diagnostics.push_back("Q sandwich bounds failed");
  rep.charpoly_tables_match = verify_charpoly_tables(cert);
  if (!rep.charpoly_tables_match)
    rep.diagnostics.push_back("characteristic-polynomial tables do not match");
  PsdIntervalResult px = verify_psd_on_interval(cert.Sx);
  PsdIntervalResult py = verify_psd_on_interval(cert.Sy);
  rep.psd_on_interval = px.ok && py.ok;
  if (!px.ok) rep.diagnostics.push_back("Sx PSD certification: " + px.failure);
  if (!py.ok) rep.diagnostics.push_back("Sy PSD certification: " + py.failure);
  return rep;
}

std::string VerificationReport::to_json() const {
  nlohmann::json j;
  j["funvals_cancel"] = funvals_cancel;
  j["residual_matches_appendix"] = residual_matches_appendix;
  j["basis_mismatch"] = nlohmann::json::array();
  for (const BasisCoordinate& c : basis_mismatch) j["basis_mismatch"].push_back(c.name());
  j["q_sandwich"] = q_sandwich;
  j["charpoly_tables_match"] = charpoly_tables_match;
  j["psd_on_interval"] = psd_on_interval;
  j["diagnostics"] = diagnostics;
  j["pass"] = pass();
  return j.dump(2);
}

}  // namespace saddlecert
