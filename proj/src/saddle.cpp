#include "saddlecert/saddle.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <memory>
#include <random>
#include <stdexcept>

namespace saddlecert {

namespace {

double norm_sq(const Vec& a) {
  double s = 0;
  for (double x : a) s += x * x;
  return s;
}

void check_finite(const Vec& g, const Vec& x, const Vec& y) {
  for (double v : g)
    if (!std::isfinite(v)) {
      std::string p = "(";
      for (double t : x) p += std::to_string(t) + ",";
      p += " | ";
      for (double t : y) p += std::to_string(t) + ",";
      p += ")";
      throw std::runtime_error("non-finite gradient at " + p);
    }
}

Vec axpy(const Vec& a, double s, const Vec& b) {
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + s * b[i];
  return out;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

}  // namespace

Algorithm algorithm_from_string(const std::string& s) {
  if (s == "gda") return Algorithm::Gda;
  if (s == "sim-nm" || s == "sim-momentum") return Algorithm::SimMomentum;
  if (s == "alt-nm" || s == "alt-neg-momentum") return Algorithm::AltNegMomentum;
  if (s == "eg" || s == "extragradient") return Algorithm::Extragradient;
  if (s == "ogda") return Algorithm::Ogda;
  throw std::invalid_argument("unknown algorithm: " + s);
}

std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::Gda: return "gda";
    case Algorithm::SimMomentum: return "sim-nm";
    case Algorithm::AltNegMomentum: return "alt-nm";
    case Algorithm::Extragradient: return "eg";
    case Algorithm::Ogda: return "ogda";
  }
  return "?";
}

OptimizerState initial_state(Vec x0, Vec y0) {
  OptimizerState s;
  s.v.assign(x0.size(), 0.0);
  s.w.assign(y0.size(), 0.0);
  s.x = std::move(x0);
  s.y = std::move(y0);
  return s;
}

StepOutput step_alt_neg_momentum(const SaddleObjective& obj,
                                 const OptimizerState& s, const AlgoParams& p) {
  StepOutput out;
  Vec gx = obj.grad_x(s.x, s.y);
  check_finite(gx, s.x, s.y);
  out.grads_used.push_back({GradEval::Which::X, s.x, s.y, gx});
  Vec x1 = axpy(axpy(s.x, -p.eta, gx), p.beta, s.v);

  Vec gy = obj.grad_y(x1, s.y);
  check_finite(gy, x1, s.y);
  out.grads_used.push_back({GradEval::Which::Y, x1, s.y, gy});
  Vec y1 = axpy(axpy(s.y, p.eta, gy), p.beta, s.w);

  out.next.v = sub(x1, s.x);
  out.next.w = sub(y1, s.y);
  out.next.x = std::move(x1);
  out.next.y = std::move(y1);
  out.next.step_index = s.step_index + 1;
  return out;
}

StepOutput step_sim_momentum(const SaddleObjective& obj,
                             const OptimizerState& s, const AlgoParams& p) {
  StepOutput out;
  Vec gx = obj.grad_x(s.x, s.y);
  Vec gy = obj.grad_y(s.x, s.y);
  check_finite(gx, s.x, s.y);
  check_finite(gy, s.x, s.y);
  out.grads_used.push_back({GradEval::Which::X, s.x, s.y, gx});
  out.grads_used.push_back({GradEval::Which::Y, s.x, s.y, gy});
  Vec x1 = axpy(axpy(s.x, -p.eta, gx), p.beta, s.v);
  Vec y1 = axpy(axpy(s.y, p.eta, gy), p.beta, s.w);
  out.next.v = sub(x1, s.x);
  out.next.w = sub(y1, s.y);
  out.next.x = std::move(x1);
  out.next.y = std::move(y1);
  out.next.step_index = s.step_index + 1;
  return out;
}

StepOutput step_baseline(const SaddleObjective& obj, const OptimizerState& s,
                         const AlgoParams& p) {
  StepOutput out;
  out.next.step_index = s.step_index + 1;
  switch (p.algorithm) {
    case Algorithm::Gda: {
      Vec gx = obj.grad_x(s.x, s.y);
      Vec gy = obj.grad_y(s.x, s.y);
      check_finite(gx, s.x, s.y);
      check_finite(gy, s.x, s.y);
      out.grads_used.push_back({GradEval::Which::X, s.x, s.y, gx});
      out.grads_used.push_back({GradEval::Which::Y, s.x, s.y, gy});
      out.next.x = axpy(s.x, -p.eta, gx);
      out.next.y = axpy(s.y, p.eta, gy);
      out.next.v.assign(s.x.size(), 0.0);
      out.next.w.assign(s.y.size(), 0.0);
      return out;
    }
    case Algorithm::Extragradient: {
      Vec gx = obj.grad_x(s.x, s.y);
      Vec gy = obj.grad_y(s.x, s.y);
      check_finite(gx, s.x, s.y);
      check_finite(gy, s.x, s.y);
      out.grads_used.push_back({GradEval::Which::X, s.x, s.y, gx});
      out.grads_used.push_back({GradEval::Which::Y, s.x, s.y, gy});
      Vec xh = axpy(s.x, -p.eta, gx);
      Vec yh = axpy(s.y, p.eta, gy);
      Vec gxh = obj.grad_x(xh, yh);
      Vec gyh = obj.grad_y(xh, yh);
      check_finite(gxh, xh, yh);
      check_finite(gyh, xh, yh);
      out.grads_used.push_back({GradEval::Which::X, xh, yh, gxh});
      out.grads_used.push_back({GradEval::Which::Y, xh, yh, gyh});
      out.next.x = axpy(s.x, -p.eta, gxh);
      out.next.y = axpy(s.y, p.eta, gyh);
      out.next.v.assign(s.x.size(), 0.0);
      out.next.w.assign(s.y.size(), 0.0);
      return out;
    }
    case Algorithm::Ogda: {
      // v, w hold the previous gradient; at t = 0 they are zero and are
      // seeded with the current gradient, so the first step is plain gda.
      Vec gx = obj.grad_x(s.x, s.y);
      Vec gy = obj.grad_y(s.x, s.y);
      check_finite(gx, s.x, s.y);
      check_finite(gy, s.x, s.y);
      out.grads_used.push_back({GradEval::Which::X, s.x, s.y, gx});
      out.grads_used.push_back({GradEval::Which::Y, s.x, s.y, gy});
      Vec px = s.step_index == 0 ? gx : s.v;
      Vec py = s.step_index == 0 ? gy : s.w;
      out.next.x = axpy(axpy(s.x, -2.0 * p.eta, gx), p.eta, px);
      out.next.y = axpy(axpy(s.y, 2.0 * p.eta, gy), -p.eta, py);
      out.next.v = std::move(gx);
      out.next.w = std::move(gy);
      return out;
    }
    default:
      throw std::invalid_argument("step_baseline: not a baseline algorithm");
  }
}

StepOutput step(const SaddleObjective& obj, const OptimizerState& s,
                const AlgoParams& p) {
  switch (p.algorithm) {
    case Algorithm::AltNegMomentum: return step_alt_neg_momentum(obj, s, p);
    case Algorithm::SimMomentum: return step_sim_momentum(obj, s, p);
    default: return step_baseline(obj, s, p);
  }
}

ProblemSpec ProblemSpec::bilinear(int d) {
  ProblemSpec s;
  s.family = Family::Bilinear;
  s.dx = s.dy = d;
  return s;
}

ProblemSpec ProblemSpec::fig1_scsc(double mu) {
  ProblemSpec s;
  s.family = Family::Fig1Scsc;
  s.dx = s.dy = 1;
  s.mu = mu;
  return s;
}

ProblemSpec ProblemSpec::random_quadratic(int dx, int dy, double mu, double L, uint64_t seed) {
  ProblemSpec s;
  s.family = Family::RandomQuadratic;
  s.dx = dx;
  s.dy = dy;
  s.mu = mu;
  s.L = L;
  s.seed = seed;
  return s;
}

ProblemSpec ProblemSpec::nonquadratic_cc(int d, double coupling, uint64_t seed) {
  ProblemSpec s;
  s.family = Family::NonquadraticCc;
  s.dx = s.dy = d;
  s.coupling = coupling;
  s.seed = seed;
  return s;
}

std::string ProblemSpec::name() const {
  switch (family) {
    case Family::Bilinear: return "bilinear";
    case Family::Fig1Scsc: return "fig1-scsc";
    case Family::RandomQuadratic: return "random-quad";
    case Family::NonquadraticCc: return "nonquad-cc";
  }
  return "?";
}

namespace {

using Matrix = Eigen::MatrixXd;
using EVec = Eigen::VectorXd;

Matrix random_gaussian(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = normal(rng);
  return m;
}

// Symmetric matrix with a planted spectrum in [lo, hi].
Matrix random_spd(int d, double lo, double hi, std::mt19937_64& rng) {
  Matrix q = Eigen::HouseholderQR<Matrix>(random_gaussian(d, d, rng)).householderQ();
  std::uniform_real_distribution<double> u(lo, hi);
  EVec spec(d);
  for (int i = 0; i < d; ++i) spec(i) = (i == 0) ? hi : (i == d - 1 ? lo : u(rng));
  return q * spec.asDiagonal() * q.transpose();
}

SaddleObjective make_bilinear(int d) {
  SaddleObjective o;
  o.dx = o.dy = d;
  o.smoothness_L = 1.0;
  o.strong_mu = 0.0;
  o.value = [](const Vec& x, const Vec& y) {
    double s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
  };
  o.grad_x = [](const Vec&, const Vec& y) { return y; };
  o.grad_y = [](const Vec& x, const Vec&) { return x; };
  o.saddle = {{Vec(d, 0.0), Vec(d, 0.0)}};
  return o;
}

SaddleObjective make_fig1_scsc(double mu) {
  if (mu < 0 || mu >= 1) throw std::invalid_argument("fig1_scsc: requires 0 <= mu < 1");
  const double s = std::sqrt(1.0 - mu * mu);
  SaddleObjective o;
  o.dx = o.dy = 1;
  o.smoothness_L = 1.0;  // largest singular value of the (constant) Hessian
  o.strong_mu = mu;
  o.value = [mu, s](const Vec& x, const Vec& y) {
    return 0.5 * mu * x[0] * x[0] + s * x[0] * y[0] - 0.5 * mu * y[0] * y[0];
  };
  o.grad_x = [mu, s](const Vec& x, const Vec& y) { return Vec{mu * x[0] + s * y[0]}; };
  o.grad_y = [mu, s](const Vec& x, const Vec& y) { return Vec{s * x[0] - mu * y[0]}; };
  o.saddle = {{Vec{0.0}, Vec{0.0}}};
  return o;
}

SaddleObjective make_random_quadratic(const ProblemSpec& spec) {
  if (spec.dx <= 0 || spec.dy <= 0)
    throw std::invalid_argument("random_quadratic: dimensions must be positive");
  if (spec.mu < 0) throw std::invalid_argument("random_quadratic: mu < 0");
  if (spec.mu >= spec.L) throw std::invalid_argument("random_quadratic: mu >= L");
  if (spec.mu > spec.L / 2)
    throw std::invalid_argument("random_quadratic: block spectra live in [mu, L/2]");
  std::mt19937_64 rng(spec.seed);

  auto p = std::make_shared<Matrix>(random_spd(spec.dx, spec.mu, spec.L / 2, rng));
  auto r = std::make_shared<Matrix>(random_spd(spec.dy, spec.mu, spec.L / 2, rng));
  Matrix braw = random_gaussian(spec.dx, spec.dy, rng);
  double smax = braw.jacobiSvd().singularValues()(0);
  auto b = std::make_shared<Matrix>(braw * ((spec.L / 2) / smax));

  std::normal_distribution<double> normal(0.0, 1.0);
  auto xs = std::make_shared<EVec>(spec.dx);
  auto ys = std::make_shared<EVec>(spec.dy);
  for (int i = 0; i < spec.dx; ++i) (*xs)(i) = normal(rng);
  for (int i = 0; i < spec.dy; ++i) (*ys)(i) = normal(rng);

  SaddleObjective o;
  o.dx = spec.dx;
  o.dy = spec.dy;
  o.smoothness_L = spec.L;  // max(||P||,||R||) + ||B|| <= L/2 + L/2
  o.strong_mu = spec.mu;
  o.value = [p, r, b, xs, ys](const Vec& x, const Vec& y) {
    EVec u = Eigen::Map<const EVec>(x.data(), x.size()) - *xs;
    EVec t = Eigen::Map<const EVec>(y.data(), y.size()) - *ys;
    return 0.5 * u.dot(*p * u) + u.dot(*b * t) - 0.5 * t.dot(*r * t);
  };
  o.grad_x = [p, b, xs, ys](const Vec& x, const Vec& y) {
    EVec u = Eigen::Map<const EVec>(x.data(), x.size()) - *xs;
    EVec t = Eigen::Map<const EVec>(y.data(), y.size()) - *ys;
    EVec g = *p * u + *b * t;
    return Vec(g.data(), g.data() + g.size());
  };
  o.grad_y = [r, b, xs, ys](const Vec& x, const Vec& y) {
    EVec u = Eigen::Map<const EVec>(x.data(), x.size()) - *xs;
    EVec t = Eigen::Map<const EVec>(y.data(), y.size()) - *ys;
    EVec g = b->transpose() * u - *r * t;
    return Vec(g.data(), g.data() + g.size());
  };
  o.saddle = {{Vec(xs->data(), xs->data() + spec.dx), Vec(ys->data(), ys->data() + spec.dy)}};
  return o;
}

SaddleObjective make_nonquadratic_cc(const ProblemSpec& spec) {
  if (spec.dx <= 0) throw std::invalid_argument("nonquadratic_cc: dimension must be positive");
  if (spec.coupling < 0) throw std::invalid_argument("nonquadratic_cc: negative coupling");
  const int d = spec.dx;
  const double c = spec.coupling;
  std::mt19937_64 rng(spec.seed);
  Matrix araw = random_gaussian(d, d, rng);
  double smax = araw.jacobiSvd().singularValues()(0);
  auto a = std::make_shared<Matrix>(araw / smax);  // ||A||_op = 1

  // h = log cosh: h' = tanh (1-Lipschitz), h'' in (0, 1]
  auto logcosh = [](double t) {
    double at = std::abs(t);
    return at + std::log1p(std::exp(-2.0 * at)) - std::log(2.0);
  };

  SaddleObjective o;
  o.dx = o.dy = d;
  o.smoothness_L = 1.0 + c;
  o.strong_mu = 0.0;
  o.value = [a, c, logcosh](const Vec& x, const Vec& y) {
    double s = 0;
    for (double t : x) s += logcosh(t);
    for (double t : y) s -= logcosh(t);
    EVec xv = Eigen::Map<const EVec>(x.data(), x.size());
    EVec yv = Eigen::Map<const EVec>(y.data(), y.size());
    return s + c * xv.dot(*a * yv);
  };
  o.grad_x = [a, c](const Vec& x, const Vec& y) {
    EVec yv = Eigen::Map<const EVec>(y.data(), y.size());
    EVec coup = *a * yv;
    Vec g(x.size());
    for (size_t i = 0; i < x.size(); ++i) g[i] = std::tanh(x[i]) + c * coup(i);
    return g;
  };
  o.grad_y = [a, c](const Vec& x, const Vec& y) {
    EVec xv = Eigen::Map<const EVec>(x.data(), x.size());
    EVec coup = a->transpose() * xv;
    Vec g(y.size());
    for (size_t i = 0; i < y.size(); ++i) g[i] = -std::tanh(y[i]) + c * coup(i);
    return g;
  };
  o.saddle = {{Vec(d, 0.0), Vec(d, 0.0)}};
  return o;
}

}  // namespace

SaddleObjective make_problem(const ProblemSpec& spec) {
  if (spec.dx <= 0 || spec.dy <= 0)
    throw std::invalid_argument("make_problem: dimensions must be positive");
  switch (spec.family) {
    case ProblemSpec::Family::Bilinear: return make_bilinear(spec.dx);
    case ProblemSpec::Family::Fig1Scsc: return make_fig1_scsc(spec.mu);
    case ProblemSpec::Family::RandomQuadratic: return make_random_quadratic(spec);
    case ProblemSpec::Family::NonquadraticCc: return make_nonquadratic_cc(spec);
  }
  throw std::invalid_argument("make_problem: unknown family");
}

SaddleObjective rescale_to_unit_smoothness(const SaddleObjective& obj) {
  if (!(obj.smoothness_L > 0))
    throw std::invalid_argument("rescale: smoothness must be positive");
  const double L = obj.smoothness_L;
  SaddleObjective o = obj;
  o.smoothness_L = 1.0;
  o.strong_mu = obj.strong_mu / L;
  auto value = obj.value;
  auto gx = obj.grad_x;
  auto gy = obj.grad_y;
  o.value = [value, L](const Vec& x, const Vec& y) { return value(x, y) / L; };
  o.grad_x = [gx, L](const Vec& x, const Vec& y) {
    Vec g = gx(x, y);
    for (double& t : g) t /= L;
    return g;
  };
  o.grad_y = [gy, L](const Vec& x, const Vec& y) {
    Vec g = gy(x, y);
    for (double& t : g) t /= L;
    return g;
  };
  return o;
}

double finite_diff_check(const SaddleObjective& obj,
                         const std::vector<std::pair<Vec, Vec>>& points,
                         double h) {
  if (!(h > 0)) throw std::invalid_argument("finite_diff_check: h must be positive");
  double worst = 0.0;
  for (const auto& [x, y] : points) {
    Vec gx = obj.grad_x(x, y);
    Vec gy = obj.grad_y(x, y);
    double err = 0.0, scale = 1.0;
    for (double g : gx) scale = std::max(scale, std::abs(g));
    for (double g : gy) scale = std::max(scale, std::abs(g));
    for (size_t i = 0; i < x.size(); ++i) {
      Vec xp = x, xm = x;
      xp[i] += h;
      xm[i] -= h;
      double fd = (obj.value(xp, y) - obj.value(xm, y)) / (2 * h);
      err = std::max(err, std::abs(fd - gx[i]));
    }
    for (size_t i = 0; i < y.size(); ++i) {
      Vec yp = y, ym = y;
      yp[i] += h;
      ym[i] -= h;
      double fd = (obj.value(x, yp) - obj.value(x, ym)) / (2 * h);
      err = std::max(err, std::abs(fd - gy[i]));
    }
    worst = std::max(worst, err / scale);
  }
  return worst;
}

}  // namespace saddlecert
