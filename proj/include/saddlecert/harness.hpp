#pragma once

#include <string>
#include <vector>

#include "saddlecert/certificate.hpp"
#include "saddlecert/saddle.hpp"

namespace saddlecert {

struct TrajectoryRecord {
  ProblemSpec problem;
  AlgoParams params;
  std::vector<OptimizerState> states;  // states[0] = initial, size T+1
  std::vector<double> grad_norm_sq;    // ||grad f(z_t)||^2, t = 0..T
  std::vector<double> dist_sq;         // ||z_t - z*||^2 when z* known, else empty
  int64_t gradient_evaluations = 0;

  int64_t steps() const { return static_cast<int64_t>(states.size()) - 1; }
};

/// Runs T steps from (x0, y0) with zero initial momentum. Deterministic for
/// a fixed (spec seed, params, z0, T). Aborts with DivergenceError when
/// ||z_t|| exceeds 1e12.
TrajectoryRecord run_trajectory(const SaddleObjective& obj, const AlgoParams& params,
                                const Vec& x0, const Vec& y0, int64_t T);

struct LyapunovTrace {
  std::vector<double> lyapunov;  // xi_t' Q xi_t, t = 0..T (rescaled objective)
  std::vector<double> residual;  // r_t, t = 0..T-1
  bool ok = false;
  int64_t first_violation = -1;  // step index of first failed inequality
  std::string detail;
};

/// Lyapunov values and per-step progress residuals
///   r_t = (1 - mu~/5) xi_t' Q xi_t - xi_{t+1}' Q xi_{t+1}
///         - (1 - mu~) ||grad f~(z_t)||^2
/// computed on the rescaled objective f~ = f/L, mu~ = mu/L, so Q applies
/// with eta = 1/5 exactly. Requires an alt-neg-momentum record with
/// eta = 1/(5L), beta = -1/2 and a known saddle. Checks r_t >= -tol and the
/// sandwich 50||z_t-z*||^2 <= xi_t' Q xi_t <= 150||xi_t||^2 + tol with
/// tol = 1e-9 (1 + xi_t' Q xi_t).
LyapunovTrace lyapunov_trace(const SaddleObjective& obj, const TrajectoryRecord& rec,
                             const Certificate& cert);

struct RateReport {
  std::string theorem;  // "cc" or "scsc"
  double bound = 0.0;
  double measured = 0.0;
  double margin = 0.0;  // bound - measured
  bool pass = false;
  double min_grad_norm_sq = 0.0;  // cc only
  std::string to_json(const TrajectoryRecord& rec) const;
};

/// (1/T) sum_{t<T} ||grad f(z_t)||^2 <= 12 ||z0-z*||^2 / (eta^2 T).
RateReport check_cc_bound(const TrajectoryRecord& rec);

/// ||z_T' - z*||^2 <= 6 (1 - eta mu)^T' ||z0-z*||^2 at every prefix T' <= T.
RateReport check_scsc_bound(const TrajectoryRecord& rec, double mu);

struct Fig1Result {
  TrajectoryRecord left_alternating, left_simultaneous;
  TrajectoryRecord right_alternating, right_simultaneous;
  bool left_alternating_contracts = false;   // final radius < initial
  bool left_simultaneous_diverges = false;   // final radius > initial
  bool right_alternating_closer = false;     // beats simultaneous at T=200
};

/// The two trajectory pairs on f = xy and on the 2-d strongly-convex
/// strongly-concave problem with mu = 0.01, 200 steps each; writes CSV and
/// SVG files into out_dir.
Fig1Result reproduce_fig1(const std::string& out_dir);

/// CSV: header t,x...,y...,grad_norm_sq,dist_sq,lyapunov; one row per step;
/// 17 significant digits; byte-deterministic.
void export_csv(const TrajectoryRecord& rec, const std::string& path,
                const std::vector<double>* lyapunov = nullptr);
std::string trajectory_csv(const TrajectoryRecord& rec,
                           const std::vector<double>* lyapunov = nullptr);

/// Single polyline of the (x, y) path with start/end markers; requires
/// dx = dy = 1.
void export_svg(const TrajectoryRecord& rec, const std::string& path);
std::string trajectory_svg(const TrajectoryRecord& rec);

}  // namespace saddlecert
