#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "saddlecert/poly_matrix.hpp"
#include "saddlecert/rational.hpp"
#include "saddlecert/unipoly.hpp"

namespace saddlecert {

/// Time index on the iterate grid.
enum class Idx { T, T1, Star };

std::string idx_name(Idx i);

/// A point (x_i, y_j) on the 3 x 3 grid of iterate/saddle combinations.
struct GridPoint {
  Idx xi;
  Idx yi;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

std::string grid_name(GridPoint p);
std::vector<GridPoint> all_grid_points();

enum class Block { X, Y };

/// One coordinate of the extended per-block state. The canonical layout has
/// 8 coordinates per block:
///   0: displacement (x_t - x* resp. y_t - y*)
///   1..6: gradient block at grid points (*,t), (*,t+1), (t+1,*),
///         (t,t), (t+1,t), (t+1,t+1)
///   7: momentum (v_t resp. w_t)
/// Two further gradient coordinates exist on the grid, (t,*) and (t,t+1);
/// they are carried as appended non-canonical slots 8 and 9 so that an
/// expansion referencing them is representable and reportable rather than
/// silently dropped. The gradient at (*,*) is identically zero by
/// stationarity of the saddle point and is not a coordinate.
struct BasisCoordinate {
  enum class Kind { Displacement, Gradient, Momentum };
  Block block;
  Kind kind;
  GridPoint at;  // meaningful for Kind::Gradient only

  std::string name() const;
  friend auto operator<=>(const BasisCoordinate&, const BasisCoordinate&) = default;
};

inline constexpr int kCanonicalBlockDim = 8;
inline constexpr int kBlockDim = 10;  // canonical 8 + 2 appended gradients

/// Coordinate list for one block, canonical order first.
const std::vector<BasisCoordinate>& block_basis(Block b);

/// Slot of a gradient coordinate within its block basis (1..6, 8, 9).
/// Throws for (*,*), which is not a coordinate.
int gradient_slot(GridPoint p);

/// A linear combination of one block's basis coordinates with UniPoly
/// coefficients (index = basis slot).
using BlockVec = std::array<UniPoly, kBlockDim>;

BlockVec zero_vec();
BlockVec unit_vec(int slot);

/// Quadratic expression over the extended two-block state plus a linear
/// combination of grid function values:
///   quad_x-form + quad_y-form + sum over grid of funvals[p] * f(p).
/// Coefficients are polynomials in mu; every stored expression carries the
/// global clearing factor 2(1-mu), which turns the 1/(2(1-mu)) co-coercivity
/// denominator into polynomial coefficients. Cross-block quadratic terms
/// cannot arise in this block structure and are not representable.
struct SymExpr {
  PolyMatrix quad_x{kBlockDim};
  PolyMatrix quad_y{kBlockDim};
  std::map<GridPoint, UniPoly> funvals;

  bool is_zero() const;

  SymExpr& operator+=(const SymExpr& o);
  SymExpr& operator-=(const SymExpr& o);
  friend SymExpr operator+(SymExpr a, const SymExpr& b) { return a += b; }
  friend SymExpr operator-(SymExpr a, const SymExpr& b) { return a -= b; }
  SymExpr scaled(const Rational& s) const;

  /// Exact evaluation at concrete scalar (d=1) coordinate values, grid
  /// function values, and a rational mu. Used by the numeric oracles.
  Rational evaluate(const BlockVec& x_values_poly, const BlockVec& y_values_poly,
                    const std::map<GridPoint, Rational>& f_values,
                    const Rational& mu) const;
  Rational evaluate(const std::array<Rational, kBlockDim>& x_values,
                    const std::array<Rational, kBlockDim>& y_values,
                    const std::map<GridPoint, Rational>& f_values,
                    const Rational& mu) const;
};

/// Adds s * (u v^T + v u^T)/2 into m: the quadratic-form contribution of
/// s * <u-part, v-part>.
void add_sym_outer(PolyMatrix& m, const BlockVec& u, const BlockVec& v,
                   const UniPoly& s);

enum class CoercivityRole { ConvexInX, ConcaveInY };

/// Co-coercivity expansion M_convex(x_i, x_j, y_k) or M_concave(y_i, y_j, x_k)
/// over the extended basis, scaled by 2(1-mu). Displacements at t+1 are
/// eliminated through the update relations before coefficient extraction,
/// and the gradient at (*,*) is substituted by zero.
SymExpr expand_co_coercivity(CoercivityRole role, Idx i, Idx j, Idx k);

/// Smoothness expansion for the pair (x_i, y_j), (x_k, y_l):
/// ||(x_i,y_j)-(x_k,y_l)||^2 - ||grad f(x_i,y_j)-grad f(x_k,y_l)||^2,
/// scaled by 2(1-mu). Carries no function values.
SymExpr expand_smoothness(Idx i, Idx j, Idx k, Idx l);

/// The coordinates of the next Lyapunov state xi_{t+1} as exact linear
/// combinations of extended-basis coordinates, for eta = 1/5, beta = -1/2.
struct SuccessorMap {
  BlockVec x_displacement, x_gradient, x_momentum;
  BlockVec y_displacement, y_gradient, y_momentum;
};
SuccessorMap successor_coordinates();

}  // namespace saddlecert
