#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "saddlecert/certificate.hpp"
#include "saddlecert/harness.hpp"

namespace py = pybind11;
using namespace saddlecert;

namespace {

ProblemSpec spec_from_args(const std::string& problem, int dx, int dy, double mu,
                           double L, double coupling, uint64_t seed) {
  if (problem == "bilinear") return ProblemSpec::bilinear(dx);
  if (problem == "fig1-scsc") return ProblemSpec::fig1_scsc(mu);
  if (problem == "random-quad") return ProblemSpec::random_quadratic(dx, dy, mu, L, seed);
  if (problem == "nonquad-cc") return ProblemSpec::nonquadratic_cc(dx, coupling, seed);
  throw std::invalid_argument("unknown problem family: " + problem);
}

py::dict record_to_dict(const TrajectoryRecord& rec) {
  py::dict d;
  py::list xs, ys;
  for (const OptimizerState& s : rec.states) {
    xs.append(s.x);
    ys.append(s.y);
  }
  d["x"] = std::move(xs);
  d["y"] = std::move(ys);
  d["grad_norm_sq"] = rec.grad_norm_sq;
  d["dist_sq"] = rec.dist_sq;
  d["gradient_evaluations"] = rec.gradient_evaluations;
  d["steps"] = rec.steps();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact certificate verification and saddle-point trajectories";

  m.def("verify_certificate_json", [] {
    return verify_certificate(load_certificate()).to_json();
  });

  m.def(
      "run",
      [](const std::string& problem, const std::string& algo, double eta,
         double beta, int64_t steps, int dx, int dy, double mu, double L,
         double coupling, uint64_t seed, std::optional<Vec> z0) {
        ProblemSpec spec = spec_from_args(problem, dx, dy, mu, L, coupling, seed);
        SaddleObjective obj = make_problem(spec);
        AlgoParams p{eta, beta, algorithm_from_string(algo)};
        Vec x0(obj.dx, 1.0), y0(obj.dy, 0.0);
        if (z0) {
          if (static_cast<int>(z0->size()) != obj.dx + obj.dy)
            throw std::invalid_argument("z0 dimension mismatch");
          x0.assign(z0->begin(), z0->begin() + obj.dx);
          y0.assign(z0->begin() + obj.dx, z0->end());
        }
        TrajectoryRecord rec = run_trajectory(obj, p, x0, y0, steps);
        rec.problem = spec;
        return record_to_dict(rec);
      },
      py::arg("problem"), py::arg("algo"), py::arg("eta"), py::arg("beta"),
      py::arg("steps"), py::arg("dx") = 1, py::arg("dy") = 1, py::arg("mu") = 0.0,
      py::arg("L") = 1.0, py::arg("coupling") = 1.0, py::arg("seed") = 0,
      py::arg("z0") = std::nullopt);

  m.def(
      "check_cc_bound",
      [](const std::string& problem, double eta, double beta, int64_t steps,
         int dx, int dy, double coupling, uint64_t seed, std::optional<Vec> z0) {
        ProblemSpec spec = spec_from_args(problem, dx, dy, 0.0, 1.0, coupling, seed);
        SaddleObjective obj = make_problem(spec);
        AlgoParams p{eta, beta, Algorithm::AltNegMomentum};
        Vec x0(obj.dx, 1.0), y0(obj.dy, 0.0);
        if (z0) {
          x0.assign(z0->begin(), z0->begin() + obj.dx);
          y0.assign(z0->begin() + obj.dx, z0->end());
        }
        TrajectoryRecord rec = run_trajectory(obj, p, x0, y0, steps);
        rec.problem = spec;
        RateReport r = check_cc_bound(rec);
        py::dict d;
        d["bound"] = r.bound;
        d["measured"] = r.measured;
        d["margin"] = r.margin;
        d["pass"] = r.pass;
        return d;
      },
      py::arg("problem"), py::arg("eta"), py::arg("beta"), py::arg("steps"),
      py::arg("dx") = 1, py::arg("dy") = 1, py::arg("coupling") = 1.0,
      py::arg("seed") = 0, py::arg("z0") = std::nullopt);

  m.def("fig1", [](const std::string& out_dir) {
    Fig1Result r = reproduce_fig1(out_dir);
    py::dict d;
    d["left_alternating_contracts"] = r.left_alternating_contracts;
    d["left_simultaneous_diverges"] = r.left_simultaneous_diverges;
    d["right_alternating_closer"] = r.right_alternating_closer;
    return d;
  });
}
