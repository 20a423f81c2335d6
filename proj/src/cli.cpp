#include "saddlecert/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "saddlecert/certificate.hpp"
#include "saddlecert/harness.hpp"
#include "saddlecert/rational.hpp"

namespace saddlecert {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

double parse_rational_flag(const std::string& s, const char* flag) {
  try {
    return Rational::from_string(s).to_double();
  } catch (const std::exception&) {
    throw CLI::ValidationError(std::string(flag) + ": not a rational: " + s);
  }
}

Vec parse_csv_doubles(const std::string& s) {
  Vec out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    double v = std::stod(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("bad number: " + tok);
    out.push_back(v);
  }
  return out;
}

unsigned thread_cap() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SADDLECERT_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return std::min<unsigned>(static_cast<unsigned>(v), hw);
  }
  return hw;
}

struct ProblemFlags {
  std::string problem;
  std::string mu = "0", L = "1";
  std::string dims;
  uint64_t seed = 0;
  std::string coupling = "1";
};

void add_problem_flags(CLI::App* cmd, ProblemFlags& f) {
  cmd->add_option("--problem", f.problem, "problem family")
      ->required()
      ->check(CLI::IsMember({"bilinear", "fig1-scsc", "random-quad", "nonquad-cc"}));
  cmd->add_option("--mu", f.mu, "strong convexity (rational)");
  cmd->add_option("--L", f.L, "smoothness (rational)");
  cmd->add_option("--dims", f.dims, "DX,DY");
  cmd->add_option("--seed", f.seed, "rng seed");
  cmd->add_option("--coupling", f.coupling, "coupling strength (nonquad-cc)");
}

ProblemSpec build_spec(const ProblemFlags& f) {
  int dx = 1, dy = 1;
  if (!f.dims.empty()) {
    Vec d = parse_csv_doubles(f.dims);
    if (d.size() != 2 || d[0] < 1 || d[1] < 1 || d[0] != (int)d[0] || d[1] != (int)d[1])
      throw std::invalid_argument("--dims expects DX,DY positive integers");
    dx = static_cast<int>(d[0]);
    dy = static_cast<int>(d[1]);
  }
  double mu = parse_rational_flag(f.mu, "--mu");
  double L = parse_rational_flag(f.L, "--L");
  double coupling = parse_rational_flag(f.coupling, "--coupling");
  if (f.problem == "bilinear") return ProblemSpec::bilinear(dx);
  if (f.problem == "fig1-scsc") return ProblemSpec::fig1_scsc(f.mu == "0" ? 0.01 : mu);
  if (f.problem == "random-quad") return ProblemSpec::random_quadratic(dx, dy, mu, L, f.seed);
  return ProblemSpec::nonquadratic_cc(dx, coupling, f.seed);
}

void write_or_print(const std::string& body, const std::string& out) {
  if (out.empty()) {
    std::cout << body << "\n";
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + out);
  f << body;
}

int cmd_verify(const std::string& out) {
  VerificationReport rep = verify_certificate(load_certificate());
  write_or_print(rep.to_json(), out);
  if (!out.empty())
    std::cout << (rep.pass() ? "certificate verified" : "certificate FAILED") << "\n";
  return rep.pass() ? kExitOk : kExitCheckFailed;
}

struct RunFlags {
  ProblemFlags prob;
  std::string algo;
  std::string eta = "1/5", beta = "-1/2";
  int64_t steps = 0;
  std::string z0, check, out, svg;
};

int cmd_run(const RunFlags& f) {
  ProblemSpec spec = build_spec(f.prob);
  SaddleObjective obj = make_problem(spec);

  AlgoParams params;
  params.algorithm = algorithm_from_string(f.algo);
  params.eta = parse_rational_flag(f.eta, "--eta");
  params.beta = parse_rational_flag(f.beta, "--beta");

  Vec x0(obj.dx, 1.0), y0(obj.dy, 0.0);
  if (!f.z0.empty()) {
    Vec z = parse_csv_doubles(f.z0);
    if (static_cast<int>(z.size()) != obj.dx + obj.dy)
      throw std::invalid_argument("--z0 expects " + std::to_string(obj.dx + obj.dy) +
                                  " values");
    x0.assign(z.begin(), z.begin() + obj.dx);
    y0.assign(z.begin() + obj.dx, z.end());
  }

  if (!f.check.empty() && params.algorithm != Algorithm::AltNegMomentum)
    throw CLI::ValidationError("--check applies to --algo alt-nm only");

  TrajectoryRecord rec = run_trajectory(obj, params, x0, y0, f.steps);
  rec.problem = spec;

  int rc = kExitOk;
  const std::vector<double>* lyap = nullptr;
  LyapunovTrace tr;
  if (f.check == "cc-bound") {
    RateReport r = check_cc_bound(rec);
    std::cout << r.to_json(rec) << "\n";
    rc = r.pass ? kExitOk : kExitCheckFailed;
  } else if (f.check == "scsc-bound") {
    RateReport r = check_scsc_bound(rec, obj.strong_mu);
    std::cout << r.to_json(rec) << "\n";
    rc = r.pass ? kExitOk : kExitCheckFailed;
  } else if (f.check == "lyapunov") {
    tr = lyapunov_trace(obj, rec, load_certificate());
    lyap = &tr.lyapunov;
    nlohmann::ordered_json j;
    j["problem"] = spec.name();
    j["check"] = "lyapunov";
    j["ok"] = tr.ok;
    j["first_violation"] = tr.first_violation;
    j["detail"] = tr.detail;
    std::cout << j.dump(2) << "\n";
    rc = tr.ok ? kExitOk : kExitCheckFailed;
  }

  if (!f.out.empty()) export_csv(rec, f.out, lyap);
  if (!f.svg.empty()) export_svg(rec, f.svg);
  return rc;
}

struct CompareFlags {
  ProblemFlags prob;
  std::vector<std::string> algos;
  std::string eta = "1/5", beta = "-1/2";
  int64_t steps = 0;
  std::string z0, out;
};

int cmd_compare(const CompareFlags& f) {
  ProblemSpec spec = build_spec(f.prob);
  SaddleObjective obj = make_problem(spec);
  double eta = parse_rational_flag(f.eta, "--eta");
  double beta = parse_rational_flag(f.beta, "--beta");
  Vec x0(obj.dx, 1.0), y0(obj.dy, 0.0);
  if (!f.z0.empty()) {
    Vec z = parse_csv_doubles(f.z0);
    if (static_cast<int>(z.size()) != obj.dx + obj.dy)
      throw std::invalid_argument("--z0 dimension mismatch");
    x0.assign(z.begin(), z.begin() + obj.dx);
    y0.assign(z.begin() + obj.dx, z.end());
  }

  struct Entry {
    Algorithm algo;
    TrajectoryRecord rec;
    bool diverged = false;
    std::string error;
  };
  std::vector<Entry> entries(f.algos.size());
  for (size_t i = 0; i < f.algos.size(); ++i)
    entries[i].algo = algorithm_from_string(f.algos[i]);

  const unsigned cap = thread_cap();
  std::mutex m;
  size_t next = 0;
  auto worker = [&] {
    for (;;) {
      size_t i;
      {
        std::lock_guard<std::mutex> lk(m);
        if (next >= entries.size()) return;
        i = next++;
      }
      AlgoParams p{eta, beta, entries[i].algo};
      try {
        entries[i].rec = run_trajectory(obj, p, x0, y0, f.steps);
        entries[i].rec.problem = spec;
      } catch (const DivergenceError& e) {
        entries[i].diverged = true;
        entries[i].error = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < std::min<size_t>(cap, entries.size()); ++i)
    pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  nlohmann::ordered_json j;
  j["problem"] = spec.name();
  j["eta"] = eta;
  j["beta"] = beta;
  j["T"] = f.steps;
  j["runs"] = nlohmann::ordered_json::array();
  for (const Entry& e : entries) {
    nlohmann::ordered_json r;
    r["algorithm"] = algorithm_name(e.algo);
    r["diverged"] = e.diverged;
    if (e.diverged) {
      r["error"] = e.error;
    } else {
      r["final_grad_norm_sq"] = e.rec.grad_norm_sq.back();
      if (!e.rec.dist_sq.empty()) r["final_dist_sq"] = e.rec.dist_sq.back();
      r["gradient_evaluations"] = e.rec.gradient_evaluations;
    }
    j["runs"].push_back(std::move(r));
  }
  write_or_print(j.dump(2), f.out);
  return kExitOk;
}

int cmd_fig1(const std::string& out_dir) {
  Fig1Result res = reproduce_fig1(out_dir);
  nlohmann::ordered_json j;
  j["left_alternating_contracts"] = res.left_alternating_contracts;
  j["left_simultaneous_diverges"] = res.left_simultaneous_diverges;
  j["right_alternating_closer"] = res.right_alternating_closer;
  std::cout << j.dump(2) << "\n";
  bool ok = res.left_alternating_contracts && res.left_simultaneous_diverges &&
            res.right_alternating_closer;
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int dispatch(const std::vector<std::string>& args) {
  CLI::App app{"saddlecert: certified alternating negative-momentum GDA"};
  app.require_subcommand(1);

  std::string verify_out;
  CLI::App* verify = app.add_subcommand("verify", "machine-check the certificate");
  verify->add_option("--out", verify_out, "write the JSON report here");

  RunFlags rf;
  CLI::App* run = app.add_subcommand("run", "run one trajectory");
  add_problem_flags(run, rf.prob);
  run->add_option("--algo", rf.algo, "algorithm")
      ->required()
      ->check(CLI::IsMember({"gda", "sim-nm", "alt-nm", "eg", "ogda"}));
  run->add_option("--eta", rf.eta, "stepsize (rational)");
  run->add_option("--beta", rf.beta, "momentum (rational)");
  run->add_option("--steps", rf.steps, "iteration count")->required()
      ->check(CLI::NonNegativeNumber);
  run->add_option("--z0", rf.z0, "initial point, comma separated");
  run->add_option("--check", rf.check, "bound to test")
      ->check(CLI::IsMember({"cc-bound", "scsc-bound", "lyapunov"}));
  run->add_option("--out", rf.out, "trajectory CSV path");
  run->add_option("--svg", rf.svg, "path figure (2-d problems)");

  CompareFlags cf;
  CLI::App* compare = app.add_subcommand("compare", "run several algorithms");
  add_problem_flags(compare, cf.prob);
  compare->add_option("--algo", cf.algos, "algorithm (repeatable)")
      ->required()
      ->check(CLI::IsMember({"gda", "sim-nm", "alt-nm", "eg", "ogda"}));
  compare->add_option("--eta", cf.eta, "stepsize (rational)");
  compare->add_option("--beta", cf.beta, "momentum (rational)");
  compare->add_option("--steps", cf.steps, "iteration count")->required()
      ->check(CLI::NonNegativeNumber);
  compare->add_option("--z0", cf.z0, "initial point, comma separated");
  compare->add_option("--out", cf.out, "joint JSON report path");

  std::string fig1_out = "fig1_out";
  CLI::App* fig1 = app.add_subcommand("fig1", "reproduce both trajectory pairs");
  fig1->add_option("--out", fig1_out, "output directory");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(verify_out);
    if (run->parsed()) return cmd_run(rf);
    if (compare->parsed()) return cmd_compare(cf);
    if (fig1->parsed()) return cmd_fig1(fig1_out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DivergenceError& e) {
    std::cerr << "diverged: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace saddlecert
