#include "saddlecert/symexpr.hpp"

#include <stdexcept>

namespace saddlecert {

std::string idx_name(Idx i) {
  switch (i) {
    case Idx::T: return "t";
    case Idx::T1: return "t+1";
    case Idx::Star: return "*";
  }
  return "?";
}

std::string grid_name(GridPoint p) {
  return "(" + idx_name(p.xi) + "," + idx_name(p.yi) + ")";
}

std::vector<GridPoint> all_grid_points() {
  std::vector<GridPoint> out;
  for (Idx a : {Idx::T, Idx::T1, Idx::Star})
    for (Idx b : {Idx::T, Idx::T1, Idx::Star}) out.push_back({a, b});
  return out;
}

std::string BasisCoordinate::name() const {
  std::string blk = block == Block::X ? "x" : "y";
  switch (kind) {
    case Kind::Displacement: return blk + "-displacement";
    case Kind::Momentum: return block == Block::X ? "v" : "w";
    case Kind::Gradient: return "grad_" + blk + grid_name(at);
  }
  return "?";
}

namespace {

const GridPoint kGradOrder[] = {
    {Idx::Star, Idx::T}, {Idx::Star, Idx::T1}, {Idx::T1, Idx::Star},
    {Idx::T, Idx::T}, {Idx::T1, Idx::T}, {Idx::T1, Idx::T1},
    // appended, non-canonical
    {Idx::T, Idx::Star}, {Idx::T, Idx::T1}};

std::vector<BasisCoordinate> make_basis(Block b) {
  std::vector<BasisCoordinate> out;
  out.push_back({b, BasisCoordinate::Kind::Displacement, {}});
  for (int g = 0; g < 6; ++g)
    out.push_back({b, BasisCoordinate::Kind::Gradient, kGradOrder[g]});
  out.push_back({b, BasisCoordinate::Kind::Momentum, {}});
  for (int g = 6; g < 8; ++g)
    out.push_back({b, BasisCoordinate::Kind::Gradient, kGradOrder[g]});
  return out;
}

}  // namespace

const std::vector<BasisCoordinate>& block_basis(Block b) {
  static const std::vector<BasisCoordinate> x = make_basis(Block::X);
  static const std::vector<BasisCoordinate> y = make_basis(Block::Y);
  return b == Block::X ? x : y;
}

int gradient_slot(GridPoint p) {
  if (p.xi == Idx::Star && p.yi == Idx::Star)
    throw std::invalid_argument("gradient_slot: grad at (*,*) is identically zero");
  for (int g = 0; g < 8; ++g)
    if (kGradOrder[g] == p) return g < 6 ? g + 1 : g + 2;  // momentum sits at 7
  throw std::logic_error("gradient_slot: unreachable");
}

BlockVec zero_vec() { return {}; }

BlockVec unit_vec(int slot) {
  BlockVec v;
  v[slot] = UniPoly(Rational(1));
  return v;
}

bool SymExpr::is_zero() const {
  if (!quad_x.is_zero() || !quad_y.is_zero()) return false;
  for (const auto& [p, c] : funvals)
    if (!c.is_zero()) return false;
  return true;
}

SymExpr& SymExpr::operator+=(const SymExpr& o) {
  quad_x += o.quad_x;
  quad_y += o.quad_y;
  for (const auto& [p, c] : o.funvals) funvals[p] += c;
  return *this;
}

SymExpr& SymExpr::operator-=(const SymExpr& o) {
  quad_x -= o.quad_x;
  quad_y -= o.quad_y;
  for (const auto& [p, c] : o.funvals) funvals[p] -= c;
  return *this;
}

SymExpr SymExpr::scaled(const Rational& s) const {
  SymExpr out;
  UniPoly sp{s};
  out.quad_x = quad_x.scaled(sp);
  out.quad_y = quad_y.scaled(sp);
  for (const auto& [p, c] : funvals) out.funvals[p] = c * s;
  return out;
}

Rational SymExpr::evaluate(const std::array<Rational, kBlockDim>& xv,
                           const std::array<Rational, kBlockDim>& yv,
                           const std::map<GridPoint, Rational>& fv,
                           const Rational& mu) const {
  Rational acc;
  for (int i = 0; i < kBlockDim; ++i)
    for (int j = 0; j < kBlockDim; ++j) {
      if (!quad_x.at(i, j).is_zero()) acc += quad_x.at(i, j).eval(mu) * xv[i] * xv[j];
      if (!quad_y.at(i, j).is_zero()) acc += quad_y.at(i, j).eval(mu) * yv[i] * yv[j];
    }
  for (const auto& [p, c] : funvals) {
    if (c.is_zero()) continue;
    auto it = fv.find(p);
    if (it == fv.end()) throw std::invalid_argument("SymExpr::evaluate: missing f" + grid_name(p));
    acc += c.eval(mu) * it->second;
  }
  return acc;
}

Rational SymExpr::evaluate(const BlockVec& xp, const BlockVec& yp,
                           const std::map<GridPoint, Rational>& fv,
                           const Rational& mu) const {
  std::array<Rational, kBlockDim> xv, yv;
  for (int i = 0; i < kBlockDim; ++i) {
    xv[i] = xp[i].eval(mu);
    yv[i] = yp[i].eval(mu);
  }
  return evaluate(xv, yv, fv, mu);
}

void add_sym_outer(PolyMatrix& m, const BlockVec& u, const BlockVec& v,
                   const UniPoly& s) {
  if (s.is_zero()) return;
  const Rational half(1, 2);
  for (int i = 0; i < kBlockDim; ++i) {
    if (u[i].is_zero() && v[i].is_zero()) continue;
    for (int j = i; j < kBlockDim; ++j) {
      UniPoly t = u[i] * v[j] + v[i] * u[j];
      if (t.is_zero()) continue;
      if (i == j)
        m.add(i, j, s * (t * half));
      else
        m.add(i, j, s * (t * half));
    }
  }
}

namespace {

const Rational kEta(1, 5);
const Rational kBeta(-1, 2);

// x_i - x* over the x-block basis, with the t+1 position eliminated through
// the update relation x_{t+1} = x_t - eta grad_x(t,t) + beta v_t.
BlockVec x_position(Idx i) {
  BlockVec p = zero_vec();
  switch (i) {
    case Idx::Star:
      break;
    case Idx::T:
      p[0] = UniPoly(Rational(1));
      break;
    case Idx::T1:
      p[0] = UniPoly(Rational(1));
      p[gradient_slot({Idx::T, Idx::T})] = UniPoly(-kEta);
      p[7] = UniPoly(kBeta);
      break;
  }
  return p;
}

// y_i - y*; the ascent step uses grad_y at (x_{t+1}, y_t).
BlockVec y_position(Idx i) {
  BlockVec p = zero_vec();
  switch (i) {
    case Idx::Star:
      break;
    case Idx::T:
      p[0] = UniPoly(Rational(1));
      break;
    case Idx::T1:
      p[0] = UniPoly(Rational(1));
      p[gradient_slot({Idx::T1, Idx::T})] = UniPoly(kEta);
      p[7] = UniPoly(kBeta);
      break;
  }
  return p;
}

BlockVec gradient_vec(GridPoint p) {
  if (p.xi == Idx::Star && p.yi == Idx::Star) return zero_vec();  // stationarity
  return unit_vec(gradient_slot(p));
}

BlockVec vec_sub(const BlockVec& a, const BlockVec& b) {
  BlockVec out;
  for (int i = 0; i < kBlockDim; ++i) out[i] = a[i] - b[i];
  return out;
}

BlockVec vec_axpy(const BlockVec& a, const UniPoly& s, const BlockVec& b) {
  BlockVec out;
  for (int i = 0; i < kBlockDim; ++i) out[i] = a[i] + s * b[i];
  return out;
}

const UniPoly kOne{Rational(1)};
// 2(1-mu)
const UniPoly kClear{Rational(2), Rational(-2)};
// mu(1-mu)
const UniPoly kMuOneMinusMu{Rational(0), Rational(1), Rational(-1)};
const UniPoly kMu{Rational(0), Rational(1)};

void check_idx(Idx i) {
  if (i != Idx::T && i != Idx::T1 && i != Idx::Star)
    throw std::invalid_argument("grid index outside {t, t+1, *}");
}

}  // namespace

SymExpr expand_co_coercivity(CoercivityRole role, Idx i, Idx j, Idx k) {
  check_idx(i); check_idx(j); check_idx(k);
  SymExpr e;
  const bool convex = role == CoercivityRole::ConvexInX;
  PolyMatrix& quad = convex ? e.quad_x : e.quad_y;

  BlockVec pi = convex ? x_position(i) : y_position(i);
  BlockVec pj = convex ? x_position(j) : y_position(j);
  BlockVec d = vec_sub(pi, pj);

  GridPoint gp_i = convex ? GridPoint{i, k} : GridPoint{k, i};
  GridPoint gp_j = convex ? GridPoint{j, k} : GridPoint{k, j};
  BlockVec gi = gradient_vec(gp_i);
  BlockVec gj = gradient_vec(gp_j);

  // convex: + f(x_i,y_k) - f(x_j,y_k); concave: + f(x_k,y_j) - f(x_k,y_i)
  e.funvals[convex ? gp_i : gp_j] += kClear;
  e.funvals[convex ? gp_j : gp_i] -= kClear;
  // convex: minus gradient inner term; concave: plus (concavity of the
  // restriction flips the linearization)
  add_sym_outer(quad, gj, d, convex ? -kClear : kClear);
  // - mu (1-mu) ||p_i - p_j||^2   (from 2(1-mu) * mu/2 ||.||^2)
  add_sym_outer(quad, d, d, -kMuOneMinusMu);
  // - ||g_i - g_j - mu (p_i - p_j)||^2   (the 1/(2(1-mu)) denominator cleared)
  // concave role: the co-coercivity of -f(x_k, .) has gradient -grad_y, and
  // the roles of (i, j) swap in the gradient difference; the squared norm is
  // symmetric under the overall sign, so g_j - g_i - mu d covers it.
  BlockVec gd = convex ? vec_sub(gi, gj) : vec_sub(gj, gi);
  BlockVec q = vec_axpy(gd, -kMu, d);
  add_sym_outer(quad, q, q, -kOne);
  return e;
}

SymExpr expand_smoothness(Idx i, Idx j, Idx k, Idx l) {
  check_idx(i); check_idx(j); check_idx(k); check_idx(l);
  SymExpr e;
  BlockVec dxv = vec_sub(x_position(i), x_position(k));
  BlockVec dyv = vec_sub(y_position(j), y_position(l));
  BlockVec dgx = vec_sub(gradient_vec({i, j}), gradient_vec({k, l}));
  BlockVec dgy = vec_sub(gradient_vec({i, j}), gradient_vec({k, l}));
  add_sym_outer(e.quad_x, dxv, dxv, kClear);
  add_sym_outer(e.quad_y, dyv, dyv, kClear);
  add_sym_outer(e.quad_x, dgx, dgx, -kClear);
  add_sym_outer(e.quad_y, dgy, dgy, -kClear);
  return e;
}

SuccessorMap successor_coordinates() {
  SuccessorMap m;
  m.x_displacement = x_position(Idx::T1);
  m.x_gradient = gradient_vec({Idx::T1, Idx::T1});
  m.x_momentum = zero_vec();
  m.x_momentum[gradient_slot({Idx::T, Idx::T})] = UniPoly(-kEta);
  m.x_momentum[7] = UniPoly(kBeta);
  m.y_displacement = y_position(Idx::T1);
  m.y_gradient = gradient_vec({Idx::T1, Idx::T1});
  m.y_momentum = zero_vec();
  m.y_momentum[gradient_slot({Idx::T1, Idx::T})] = UniPoly(kEta);
  m.y_momentum[7] = UniPoly(kBeta);
  return m;
}

}  // namespace saddlecert
