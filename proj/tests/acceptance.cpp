// Acceptance checklist. Prints one line per criterion and exits non-zero if
// any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>

#include "saddlecert/certificate.hpp"
#include "saddlecert/harness.hpp"
#include "saddlecert/sturm.hpp"

using namespace saddlecert;

namespace {

int failures = 0;

void report(int num, const char* what, bool ok, double seconds = -1) {
  if (!ok) ++failures;
  if (seconds >= 0)
    std::printf("%s criterion %2d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", num, what, seconds);
  else
    std::printf("%s criterion %2d: %s\n", ok ? "PASS" : "FAIL", num, what);
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Vec rand_unit(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Vec v(d);
  double s = 0;
  for (double& t : v) {
    t = n(rng);
    s += t * t;
  }
  for (double& t : v) t /= std::sqrt(s);
  return v;
}

Rational rand_rational(std::mt19937_64& rng, int mag = 9) {
  std::uniform_int_distribution<long> num(-mag, mag);
  std::uniform_int_distribution<long> den(1, mag);
  return Rational(num(rng), den(rng));
}

}  // namespace

int main() {
  Certificate cert = load_certificate();

  {  // 1: exact progress identity
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep = verify_identity(cert);
    double dt = seconds_since(t0);
    bool ok = rep.funvals_cancel && rep.residual_matches_appendix &&
              rep.basis_mismatch.empty() && dt < 60;
    report(1, "progress identity: function values cancel, residual matches the "
              "shipped S matrices exactly", ok, dt);
  }

  report(2, "Q sandwich 50 E11 <= Qx, Qy <= 150 I proved exactly", verify_q_bounds(cert));

  {  // 3: characteristic tables
    bool ok = verify_charpoly_tables(cert) &&
              char_poly(cert.Sx).coeff(7).coeff(0) == Rational(-4322, 25) &&
              char_poly(cert.Sy).coeff(7).coeff(0) == Rational(-4342, 25);
    report(3, "characteristic polynomials reproduce both coefficient tables", ok);
  }

  {  // 4: PSD on [0,1) via Descartes + Sturm
    auto t0 = std::chrono::steady_clock::now();
    bool ok = verify_psd_on_interval(cert.Sx).ok && verify_psd_on_interval(cert.Sy).ok;
    double dt = seconds_since(t0);
    report(4, "S matrices certified PSD for all mu in [0,1)", ok && dt < 120, dt);
  }

  {  // 5: convex-concave rate, 20 seeds, T = 1000
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (uint64_t seed = 0; seed < 20 && ok; ++seed) {
      std::mt19937_64 rng(seed);
      for (ProblemSpec spec : {ProblemSpec::bilinear(2),
                               ProblemSpec::nonquadratic_cc(4, 1.0, seed)}) {
        SaddleObjective obj = make_problem(spec);
        AlgoParams p{1.0 / (5.0 * obj.smoothness_L), -0.5, Algorithm::AltNegMomentum};
        TrajectoryRecord rec =
            run_trajectory(obj, p, rand_unit(obj.dx, rng), rand_unit(obj.dy, rng), 1000);
        rec.problem = spec;
        if (!check_cc_bound(rec).pass) ok = false;
      }
    }
    double dt = seconds_since(t0);
    report(5, "mean squared gradient bounded by 12 d0 / (eta^2 T) on cc problems",
           ok && dt < 10, dt);
  }

  {  // 6: strongly-convex-concave rate at every prefix, T = 2000
    bool ok = true;
    for (uint64_t seed = 0; seed < 20 && ok; ++seed) {
      std::mt19937_64 rng(1000 + seed);
      for (ProblemSpec spec : {ProblemSpec::fig1_scsc(0.01),
                               ProblemSpec::random_quadratic(5, 5, 0.05, 1.0, seed)}) {
        SaddleObjective obj = make_problem(spec);
        Vec x0 = rand_unit(obj.dx, rng), y0 = rand_unit(obj.dy, rng);
        if (obj.saddle)
          for (int i = 0; i < obj.dx; ++i) x0[i] += obj.saddle->first[i];
        if (obj.saddle)
          for (int i = 0; i < obj.dy; ++i) y0[i] += obj.saddle->second[i];
        AlgoParams p{1.0 / (5.0 * obj.smoothness_L), -0.5, Algorithm::AltNegMomentum};
        TrajectoryRecord rec = run_trajectory(obj, p, x0, y0, 2000);
        if (!check_scsc_bound(rec, obj.strong_mu).pass) ok = false;
      }
    }
    report(6, "linear convergence 6 (1 - eta mu)^T d0 at all prefixes on scsc problems", ok);
  }

  {  // 7: per-step progress beyond linear gradients
    bool ok = true;
    for (uint64_t seed = 0; seed < 5 && ok; ++seed) {
      std::mt19937_64 rng(2000 + seed);
      SaddleObjective obj = make_problem(ProblemSpec::nonquadratic_cc(4, 1.0, seed));
      AlgoParams p{1.0 / (5.0 * obj.smoothness_L), -0.5, Algorithm::AltNegMomentum};
      TrajectoryRecord rec =
          run_trajectory(obj, p, rand_unit(4, rng), rand_unit(4, rng), 500);
      LyapunovTrace tr = lyapunov_trace(obj, rec, cert);
      if (!tr.ok) ok = false;
      for (size_t t = 0; t < tr.residual.size(); ++t)
        if (tr.residual[t] < -1e-9 * (1 + std::abs(tr.lyapunov[t]))) ok = false;
    }
    report(7, "per-step Lyapunov progress holds on non-quadratic trajectories", ok);
  }

  {  // 8: headline figure, ordinal
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "sc_acceptance_fig1";
    fs::remove_all(dir);
    Fig1Result res = reproduce_fig1(dir.string());
    bool ok = res.left_alternating_contracts && res.left_simultaneous_diverges &&
              res.right_alternating_closer;
    fs::remove_all(dir);
    report(8, "alternating negative momentum beats the simultaneous variant on both panels", ok);
  }

  {  // 9: negative controls on the certificate constants
    std::mt19937_64 rng(424242);
    int detected = 0;
    const int trials = 20;
    for (int it = 0; it < trials; ++it) {
      Certificate bad = load_certificate();
      std::uniform_int_distribution<int> kind(0, 2);
      switch (kind(rng)) {
        case 0: {
          Rational* l[3] = {&bad.lambda1, &bad.lambda2, &bad.lambda3};
          Rational* target = l[std::uniform_int_distribution<int>(0, 2)(rng)];
          *target = -*target;
          break;
        }
        case 1: {
          std::uniform_int_distribution<int> ij(0, 2);
          int i = ij(rng), j = ij(rng);
          bad.Qx[i][j] += Rational(1);
          bad.Qx[j][i] = bad.Qx[i][j];
          break;
        }
        default: {
          std::uniform_int_distribution<int> ij(0, 7);
          int i = ij(rng), j = ij(rng);
          bad.Sy.set(i, j, bad.Sy.at(i, j) + UniPoly(rand_rational(rng)));
          break;
        }
      }
      if (!verify_certificate(bad).pass()) ++detected;
    }
    report(9, "planted perturbations of lambda, Q, or S are always detected",
           detected == trials);
  }

  {  // 10: property suites, representative sweep
    bool ok = true;
    std::mt19937_64 rng(31337);

    // ring sanity
    for (int it = 0; it < 50; ++it) {
      UniPoly a{rand_rational(rng), rand_rational(rng), rand_rational(rng)};
      UniPoly b{rand_rational(rng), rand_rational(rng)};
      UniPoly c{rand_rational(rng)};
      if ((a + b) * c != a * c + b * c) ok = false;
    }

    // sturm vs brute force
    for (int it = 0; it < 50; ++it) {
      UniPoly p(Rational(1));
      std::vector<Rational> roots;
      for (int i = 0; i < 3; ++i) {
        Rational r = rand_rational(rng, 4);
        roots.push_back(r);
        p = p * UniPoly{-r, Rational(1)};
      }
      std::sort(roots.begin(), roots.end());
      roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
      int expect = 0;
      for (const Rational& r : roots)
        if (r > Rational(-2) && r <= Rational(2)) ++expect;
      if (sturm_root_count(p, Rational(-2), Rational(2)) != expect) ok = false;
    }

    // stepper invariants: fixed point and momentum bookkeeping
    SaddleObjective obj = make_problem(ProblemSpec::random_quadratic(3, 3, 0.1, 2.0, 77));
    AlgoParams p{0.1, -0.5, Algorithm::AltNegMomentum};
    OptimizerState s = initial_state(obj.saddle->first, obj.saddle->second);
    for (int t = 0; t < 5; ++t) s = step(obj, s, p).next;
    for (int i = 0; i < 3; ++i)
      if (std::abs(s.x[i] - obj.saddle->first[i]) > 1e-12) ok = false;

    OptimizerState r = initial_state(rand_unit(3, rng), rand_unit(3, rng));
    for (int t = 0; t < 10; ++t) {
      OptimizerState next = step(obj, r, p).next;
      for (int i = 0; i < 3; ++i)
        if (std::abs(next.v[i] - (next.x[i] - r.x[i])) > 1e-12) ok = false;
      r = next;
    }

    // rescale equivalence
    SaddleObjective scaled = rescale_to_unit_smoothness(obj);
    AlgoParams orig{1.0 / (5.0 * obj.smoothness_L), -0.5, Algorithm::AltNegMomentum};
    AlgoParams unit{0.2, -0.5, Algorithm::AltNegMomentum};
    OptimizerState a = initial_state({1, 0, 0}, {0, 1, 0});
    OptimizerState b = a;
    for (int t = 0; t < 50; ++t) {
      a = step(obj, a, orig).next;
      b = step(scaled, b, unit).next;
    }
    for (int i = 0; i < 3; ++i)
      if (std::abs(a.x[i] - b.x[i]) > 1e-12 * (1 + std::abs(a.x[i]))) ok = false;

    report(10, "algebra and stepper property suites pass", ok);
  }

  if (failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", failures);
  return 1;
}
