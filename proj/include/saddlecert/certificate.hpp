#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "saddlecert/poly_matrix.hpp"
#include "saddlecert/rational.hpp"
#include "saddlecert/symexpr.hpp"

namespace saddlecert {

using Mat3 = std::array<std::array<Rational, 3>, 3>;

/// The exact constants of the convergence certificate for alternating
/// gradient-descent-ascent with eta = 1/5, beta = -1/2 on 1-smooth,
/// mu-strongly-convex-strongly-concave objectives.
struct Certificate {
  Mat3 Qx, Qy;
  Rational lambda1, lambda2, lambda3;
  PolyMatrix Sx{kCanonicalBlockDim}, Sy{kCanonicalBlockDim};
  /// Cx[i][j] = coefficient of mu^i in the zeta^j coefficient of
  /// det(Sx - zeta I); likewise Cy.
  std::vector<std::vector<Rational>> Cx, Cy;
  Rational eta{1, 5};
  Rational beta{-1, 2};
};

/// The shipped constants, transcribed verbatim as exact rationals.
Certificate load_certificate();

/// One multiplier combination term: weight * M(expansion arguments).
struct MultiplierTerm {
  enum class Family { Smooth, Convex, Concave };
  Family family;
  // Smooth uses (i, j, k, l); Convex/Concave use (i, j, k).
  Idx i, j, k, l;
  // 1, 2, 3 selects lambda1 / lambda2 / lambda3; 23 selects lambda2+lambda3.
  int weight_id;
};

/// The 9-term multiplier schedule of the certificate.
const std::vector<MultiplierTerm>& multiplier_schedule();

/// 2(1-mu) * [ (1-mu/5) xi_t' Q xi_t - xi_{t+1}' Q xi_{t+1}
///             - (1-mu) ||grad f(z_t)||^2 - sum_a lambda_a M_a ],
/// assembled symbolically over the extended basis. When the certificate is
/// exact, the function values cancel and the quadratic blocks equal Sx, Sy.
SymExpr assemble_residual(const Certificate& cert);

/// Per-entry or per-coefficient findings from a verification stage.
struct VerificationReport {
  bool funvals_cancel = false;
  bool residual_matches_appendix = false;
  std::vector<BasisCoordinate> basis_mismatch;
  bool q_sandwich = false;
  bool charpoly_tables_match = false;
  bool psd_on_interval = false;  // both Sx and Sy
  std::vector<std::string> diagnostics;

  bool pass() const {
    return funvals_cancel && residual_matches_appendix && basis_mismatch.empty() &&
           q_sandwich && charpoly_tables_match && psd_on_interval;
  }

  std::string to_json() const;
};

/// Identity stage: function-value cancellation, entrywise match of the
/// residual quadratic blocks against Sx / Sy, and detection of any
/// non-canonical basis coordinate with a surviving coefficient.
/// Mismatches are reported in the fragment, never thrown.
VerificationReport verify_identity(const Certificate& cert);

/// Exact proof of 50 E11 <= Qx, Qy and Qx, Qy <= 150 I.
bool verify_q_bounds(const Certificate& cert);

/// char_poly(Sx), char_poly(Sy) must reproduce the Cx / Cy tables entry by
/// entry.
bool verify_charpoly_tables(const Certificate& cert);

struct PsdIntervalResult {
  bool ok = false;
  std::string failure;  // which check, which coefficient index
  explicit operator bool() const { return ok; }
};

/// Certifies S >= 0 for every mu in [0,1):
///  (i)   zeta-coefficients c_j(mu) of char_poly(S);
///  (ii)  alternating sign pattern of c_j(0), allowing c_0(0) = 0;
///  (iii) if c_0(0) = 0, the mu-linear coefficient of c_0 must be strictly
///        positive and opposite in sign to c_1(0);
///  (iv)  every c_j has zero roots in the open interval (0,1).
PsdIntervalResult verify_psd_on_interval(const PolyMatrix& s);

/// Runs every stage and aggregates.
VerificationReport verify_certificate(const Certificate& cert);

}  // namespace saddlecert
