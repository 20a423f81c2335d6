#include "saddlecert/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace saddlecert {

namespace {

double norm_sq(const Vec& a) {
  double s = 0;
  for (double t : a) s += t * t;
  return s;
}

double dist_sq(const Vec& a, const Vec& b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

TrajectoryRecord run_trajectory(const SaddleObjective& obj, const AlgoParams& params,
                                const Vec& x0, const Vec& y0, int64_t T) {
  if (static_cast<int>(x0.size()) != obj.dx || static_cast<int>(y0.size()) != obj.dy)
    throw std::invalid_argument("run_trajectory: initial point dimension mismatch");
  if (T < 1) throw std::invalid_argument("run_trajectory: need at least one step");

  TrajectoryRecord rec;
  rec.params = params;
  rec.states.reserve(T + 1);
  rec.states.push_back(initial_state(x0, y0));
  if (params.algorithm == Algorithm::Ogda) {
    // seed the gradient memory so the first step reduces to gda
    rec.states[0].v = obj.grad_x(x0, y0);
    rec.states[0].w = obj.grad_y(x0, y0);
  }

  for (int64_t t = 0; t < T; ++t) {
    StepOutput out = step(obj, rec.states.back(), params);
    rec.gradient_evaluations += static_cast<int64_t>(out.grads_used.size());
    double r = norm_sq(out.next.x) + norm_sq(out.next.y);
    if (!(r < 1e24))
      throw DivergenceError("trajectory escaped past ||z|| = 1e12 at step " +
                            std::to_string(t + 1));
    rec.states.push_back(std::move(out.next));
  }

  for (const OptimizerState& s : rec.states) {
    Vec gx = obj.grad_x(s.x, s.y);
    Vec gy = obj.grad_y(s.x, s.y);
    rec.grad_norm_sq.push_back(norm_sq(gx) + norm_sq(gy));
    if (obj.saddle)
      rec.dist_sq.push_back(dist_sq(s.x, obj.saddle->first) +
                            dist_sq(s.y, obj.saddle->second));
  }
  return rec;
}

LyapunovTrace lyapunov_trace(const SaddleObjective& obj, const TrajectoryRecord& rec,
                             const Certificate& cert) {
  LyapunovTrace tr;
  if (rec.params.algorithm != Algorithm::AltNegMomentum) {
    tr.detail = "lyapunov trace requires the alternating negative-momentum method";
    return tr;
  }
  if (!obj.saddle) {
    tr.detail = "lyapunov trace requires a known saddle point";
    return tr;
  }
  const double L = obj.smoothness_L;
  const double eta_req = cert.eta.to_double() / L;
  const double beta_req = cert.beta.to_double();
  if (std::abs(rec.params.eta - eta_req) > 1e-12 * (1 + std::abs(eta_req)) ||
      std::abs(rec.params.beta - beta_req) > 1e-12) {
    tr.detail = "lyapunov trace requires eta = 1/(5L), beta = -1/2";
    return tr;
  }

  double qx[3][3], qy[3][3];
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      qx[a][b] = cert.Qx[a][b].to_double();
      qy[a][b] = cert.Qy[a][b].to_double();
    }
  const double mu = obj.strong_mu / L;
  const Vec& xs = obj.saddle->first;
  const Vec& ys = obj.saddle->second;

  auto quad_form = [](const double q[3][3], const Vec* c[3]) {
    double acc = 0;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        if (q[a][b] == 0.0) continue;
        double ip = 0;
        for (size_t i = 0; i < c[a]->size(); ++i) ip += (*c[a])[i] * (*c[b])[i];
        acc += q[a][b] * ip;
      }
    return acc;
  };

  std::vector<double> xi_norm_sq(rec.states.size());
  std::vector<double> grad_sq_tilde(rec.states.size());
  for (size_t t = 0; t < rec.states.size(); ++t) {
    const OptimizerState& s = rec.states[t];
    Vec dxv(s.x.size()), dyv(s.y.size());
    for (size_t i = 0; i < s.x.size(); ++i) dxv[i] = s.x[i] - xs[i];
    for (size_t i = 0; i < s.y.size(); ++i) dyv[i] = s.y[i] - ys[i];
    Vec gx = obj.grad_x(s.x, s.y);
    Vec gy = obj.grad_y(s.x, s.y);
    for (double& g : gx) g /= L;
    for (double& g : gy) g /= L;
    const Vec* cx[3] = {&dxv, &gx, &s.v};
    const Vec* cy[3] = {&dyv, &gy, &s.w};
    tr.lyapunov.push_back(quad_form(qx, cx) + quad_form(qy, cy));
    xi_norm_sq[t] = norm_sq(dxv) + norm_sq(gx) + norm_sq(s.v) + norm_sq(dyv) +
                    norm_sq(gy) + norm_sq(s.w);
    grad_sq_tilde[t] = norm_sq(gx) + norm_sq(gy);
  }

  tr.ok = true;
  for (size_t t = 0; t + 1 < rec.states.size(); ++t) {
    double r = (1.0 - mu / 5.0) * tr.lyapunov[t] - tr.lyapunov[t + 1] -
               (1.0 - mu) * grad_sq_tilde[t];
    tr.residual.push_back(r);
    double tol = 1e-9 * (1.0 + std::abs(tr.lyapunov[t]));
    if (tr.ok && r < -tol) {
      tr.ok = false;
      tr.first_violation = static_cast<int64_t>(t);
      tr.detail = "progress inequality violated at step " + std::to_string(t);
    }
  }
  for (size_t t = 0; t < rec.states.size() && tr.ok; ++t) {
    // rescaling f -> f/L leaves iterates and displacements unchanged
    double lo = 50.0 * rec.dist_sq[t];
    double hi = 150.0 * xi_norm_sq[t];
    double tol = 1e-9 * (1.0 + std::abs(tr.lyapunov[t]));
    if (tr.lyapunov[t] < lo - tol || tr.lyapunov[t] > hi + tol) {
      tr.ok = false;
      tr.first_violation = static_cast<int64_t>(t);
      tr.detail = "sandwich bound violated at step " + std::to_string(t);
    }
  }
  return tr;
}

std::string RateReport::to_json(const TrajectoryRecord& rec) const {
  nlohmann::ordered_json j;
  j["problem"] = rec.problem.name();
  j["algorithm"] = algorithm_name(rec.params.algorithm);
  j["eta"] = rec.params.eta;
  j["beta"] = rec.params.beta;
  j["T"] = rec.steps();
  j["theorem"] = theorem;
  j["bound"] = bound;
  j["measured"] = measured;
  j["margin"] = margin;
  j["pass"] = pass;
  return j.dump(2);
}

RateReport check_cc_bound(const TrajectoryRecord& rec) {
  RateReport r;
  r.theorem = "cc";
  if (rec.dist_sq.empty())
    throw std::invalid_argument("check_cc_bound: saddle point unknown");
  const int64_t T = rec.steps();
  if (T <= 0) throw std::invalid_argument("check_cc_bound: no steps");
  const double eta = rec.params.eta;
  double sum = 0, mn = rec.grad_norm_sq[0];
  for (int64_t t = 0; t < T; ++t) {
    sum += rec.grad_norm_sq[t];
    mn = std::min(mn, rec.grad_norm_sq[t]);
  }
  r.measured = sum / static_cast<double>(T);
  r.min_grad_norm_sq = mn;
  r.bound = 12.0 * rec.dist_sq[0] / (eta * eta * static_cast<double>(T));
  r.margin = r.bound - r.measured;
  r.pass = r.measured <= r.bound * (1 + 1e-9) + 1e-300;
  return r;
}

RateReport check_scsc_bound(const TrajectoryRecord& rec, double mu) {
  RateReport r;
  r.theorem = "scsc";
  if (rec.dist_sq.empty())
    throw std::invalid_argument("check_scsc_bound: saddle point unknown");
  if (!(mu > 0)) throw std::invalid_argument("check_scsc_bound: mu must be positive");
  const double eta = rec.params.eta;
  const double rho = 1.0 - eta * mu;
  const double d0 = rec.dist_sq[0];
  r.pass = true;
  double factor = 1.0;
  double worst = -1e300;
  for (size_t t = 1; t < rec.dist_sq.size(); ++t) {
    factor *= rho;
    double bound = 6.0 * factor * d0;
    if (rec.dist_sq[t] > bound * (1 + 1e-9)) r.pass = false;
    if (rec.dist_sq[t] - bound > worst) {
      worst = rec.dist_sq[t] - bound;
      r.measured = rec.dist_sq[t];
      r.bound = bound;
    }
  }
  r.margin = r.bound - r.measured;
  return r;
}

Fig1Result reproduce_fig1(const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);

  Fig1Result res;
  const int64_t T = 200;

  SaddleObjective bil = make_problem(ProblemSpec::bilinear(1));
  SaddleObjective scsc = make_problem(ProblemSpec::fig1_scsc(0.01));
  Vec x0{1.0}, y0{0.0};

  AlgoParams alt{0.2, -0.5, Algorithm::AltNegMomentum};
  AlgoParams sim_left{0.2, -0.8, Algorithm::SimMomentum};
  AlgoParams sim_right{0.1, -0.9, Algorithm::SimMomentum};

  res.left_alternating = run_trajectory(bil, alt, x0, y0, T);
  res.left_alternating.problem = ProblemSpec::bilinear(1);
  res.left_simultaneous = run_trajectory(bil, sim_left, x0, y0, T);
  res.left_simultaneous.problem = ProblemSpec::bilinear(1);
  res.right_alternating = run_trajectory(scsc, alt, x0, y0, T);
  res.right_alternating.problem = ProblemSpec::fig1_scsc(0.01);
  res.right_simultaneous = run_trajectory(scsc, sim_right, x0, y0, T);
  res.right_simultaneous.problem = ProblemSpec::fig1_scsc(0.01);

  res.left_alternating_contracts =
      res.left_alternating.dist_sq.back() < res.left_alternating.dist_sq.front();
  res.left_simultaneous_diverges =
      res.left_simultaneous.dist_sq.back() > res.left_simultaneous.dist_sq.front();
  res.right_alternating_closer =
      res.right_alternating.dist_sq.back() < res.right_simultaneous.dist_sq.back();

  auto emit = [&](const TrajectoryRecord& rec, const std::string& stem) {
    export_csv(rec, (fs::path(out_dir) / (stem + ".csv")).string());
    export_svg(rec, (fs::path(out_dir) / (stem + ".svg")).string());
  };
  emit(res.left_alternating, "left_alternating");
  emit(res.left_simultaneous, "left_simultaneous");
  emit(res.right_alternating, "right_alternating");
  emit(res.right_simultaneous, "right_simultaneous");
  return res;
}

std::string trajectory_csv(const TrajectoryRecord& rec,
                           const std::vector<double>* lyapunov) {
  std::ostringstream out;
  out << "t";
  const size_t dx = rec.states[0].x.size(), dy = rec.states[0].y.size();
  for (size_t i = 0; i < dx; ++i) out << ",x" << i;
  for (size_t i = 0; i < dy; ++i) out << ",y" << i;
  out << ",grad_norm_sq,dist_sq,lyapunov\n";
  for (size_t t = 0; t < rec.states.size(); ++t) {
    out << t;
    for (double v : rec.states[t].x) out << "," << fmt17(v);
    for (double v : rec.states[t].y) out << "," << fmt17(v);
    out << "," << fmt17(rec.grad_norm_sq[t]);
    out << "," << (rec.dist_sq.empty() ? "" : fmt17(rec.dist_sq[t]));
    out << "," << (lyapunov ? fmt17((*lyapunov)[t]) : "");
    out << "\n";
  }
  return out.str();
}

void export_csv(const TrajectoryRecord& rec, const std::string& path,
                const std::vector<double>* lyapunov) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << trajectory_csv(rec, lyapunov);
}

std::string trajectory_svg(const TrajectoryRecord& rec) {
  if (rec.states[0].x.size() != 1 || rec.states[0].y.size() != 1)
    throw std::invalid_argument("svg export requires dx = dy = 1");
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const OptimizerState& s : rec.states) {
    xmin = std::min(xmin, s.x[0]);
    xmax = std::max(xmax, s.x[0]);
    ymin = std::min(ymin, s.y[0]);
    ymax = std::max(ymax, s.y[0]);
  }
  double spanx = std::max(xmax - xmin, 1e-9), spany = std::max(ymax - ymin, 1e-9);
  double pad = 0.05 * std::max(spanx, spany);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
      << fmt17(xmin - pad) << " " << fmt17(ymin - pad) << " "
      << fmt17(spanx + 2 * pad) << " " << fmt17(spany + 2 * pad) << "\">\n";
  double sw = 0.004 * std::max(spanx, spany);
  out << "<polyline fill=\"none\" stroke=\"#1f5fbf\" stroke-width=\"" << fmt17(sw)
      << "\" points=\"";
  for (size_t t = 0; t < rec.states.size(); ++t) {
    if (t) out << " ";
    out << fmt17(rec.states[t].x[0]) << "," << fmt17(rec.states[t].y[0]);
  }
  out << "\"/>\n";
  double mr = 2.5 * sw;
  out << "<circle cx=\"" << fmt17(rec.states.front().x[0]) << "\" cy=\""
      << fmt17(rec.states.front().y[0]) << "\" r=\"" << fmt17(mr)
      << "\" fill=\"#2a9d2a\"/>\n";
  out << "<circle cx=\"" << fmt17(rec.states.back().x[0]) << "\" cy=\""
      << fmt17(rec.states.back().y[0]) << "\" r=\"" << fmt17(mr)
      << "\" fill=\"#c23030\"/>\n";
  out << "</svg>\n";
  return out.str();
}

void export_svg(const TrajectoryRecord& rec, const std::string& path) {
  std::string body = trajectory_svg(rec);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << body;
}

}  // namespace saddlecert
