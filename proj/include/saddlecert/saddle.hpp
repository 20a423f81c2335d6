#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace saddlecert {

using Vec = std::vector<double>;

/// Value/gradient oracle for min_x max_y f(x,y) together with certified
/// smoothness and strong-convexity constants and, when known, the saddle
/// point. Immutable after construction; safe to share across threads.
struct SaddleObjective {
  int dx = 0, dy = 0;
  std::function<double(const Vec&, const Vec&)> value;
  std::function<Vec(const Vec&, const Vec&)> grad_x;
  std::function<Vec(const Vec&, const Vec&)> grad_y;
  double smoothness_L = 1.0;  // certified upper bound
  double strong_mu = 0.0;     // certified lower bound, 0 for plain cc
  std::optional<std::pair<Vec, Vec>> saddle;
};

enum class Algorithm { Gda, SimMomentum, AltNegMomentum, Extragradient, Ogda };

Algorithm algorithm_from_string(const std::string& s);  // throws on unknown
std::string algorithm_name(Algorithm a);

struct AlgoParams {
  double eta = 0.2;
  double beta = -0.5;
  Algorithm algorithm = Algorithm::AltNegMomentum;
};

struct OptimizerState {
  Vec x, y;
  Vec v, w;  // momentum; for ogda these slots hold the previous gradient
  int64_t step_index = 0;
};

OptimizerState initial_state(Vec x0, Vec y0);

/// One recorded gradient-block evaluation (the point it was taken at and
/// the value).
struct GradEval {
  enum class Which { X, Y };
  Which which;
  Vec at_x, at_y;
  Vec value;
};

struct StepOutput {
  OptimizerState next;
  std::vector<GradEval> grads_used;
};

/// x+ = x - eta grad_x f(x,y) + beta v; then y+ = y + eta grad_y f(x+, y)
/// + beta w; momenta are iterate differences. Exactly two gradient-block
/// evaluations.
StepOutput step_alt_neg_momentum(const SaddleObjective& obj,
                                 const OptimizerState& s, const AlgoParams& p);

/// Both updates use the gradient at (x_t, y_t).
StepOutput step_sim_momentum(const SaddleObjective& obj,
                             const OptimizerState& s, const AlgoParams& p);

/// gda, extragradient, or ogda (beta ignored). Ogda keeps the previous
/// gradient in the v/w slots; it is initialized to the current gradient at
/// t = 0, making the first step a plain gda step.
StepOutput step_baseline(const SaddleObjective& obj, const OptimizerState& s,
                         const AlgoParams& p);

/// Dispatches on p.algorithm.
StepOutput step(const SaddleObjective& obj, const OptimizerState& s,
                const AlgoParams& p);

/// Problem descriptors for the shipped families.
struct ProblemSpec {
  enum class Family { Bilinear, Fig1Scsc, RandomQuadratic, NonquadraticCc };
  Family family = Family::Bilinear;
  int dx = 1, dy = 1;
  double mu = 0.0, L = 1.0;
  double coupling = 1.0;  // NonquadraticCc only
  uint64_t seed = 0;

  static ProblemSpec bilinear(int d);
  static ProblemSpec fig1_scsc(double mu);
  static ProblemSpec random_quadratic(int dx, int dy, double mu, double L, uint64_t seed);
  static ProblemSpec nonquadratic_cc(int d, double coupling, uint64_t seed);

  std::string name() const;
};

/// Constructs the objective; rejects mu < 0, mu >= L, non-positive dims.
SaddleObjective make_problem(const ProblemSpec& spec);

/// f / L: 1-smooth with strong convexity mu/L; generates the same
/// trajectory under eta = 1/5 as the original under eta = 1/(5L).
SaddleObjective rescale_to_unit_smoothness(const SaddleObjective& obj);

/// Worst relative error of central differences against the gradient oracle
/// over the sample points.
double finite_diff_check(const SaddleObjective& obj,
                         const std::vector<std::pair<Vec, Vec>>& points,
                         double h);

/// Thrown when a trajectory escapes past the divergence guard.
struct DivergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace saddlecert
