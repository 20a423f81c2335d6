#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "saddlecert/cli.hpp"

using namespace saddlecert;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

fs::path tmp(const std::string& name) { return fs::temp_directory_path() / name; }

}  // namespace

TEST_CASE("verify writes a passing report") {
  fs::path out = tmp("sc_cli_report.json");
  CHECK(dispatch({"verify", "--out", out.string()}) == 0);
  auto j = nlohmann::json::parse(slurp(out));
  CHECK(j["pass"] == true);
  CHECK(j["funvals_cancel"] == true);
  CHECK(j["psd_on_interval"] == true);
  fs::remove(out);
}

TEST_CASE("run emits a csv with one row per state") {
  fs::path out = tmp("sc_cli_run.csv");
  int rc = dispatch({"run", "--problem", "bilinear", "--algo", "alt-nm", "--eta", "1/5",
                     "--beta", "-1/2", "--steps", "200", "--z0", "1,0", "--out",
                     out.string()});
  CHECK(rc == 0);
  CHECK(count_lines(slurp(out)) == 202);
  fs::remove(out);
}

TEST_CASE("rate checks are wired to exit codes") {
  CHECK(dispatch({"run", "--problem", "fig1-scsc", "--mu", "0.01", "--algo", "alt-nm",
                  "--eta", "1/5", "--beta", "-1/2", "--steps", "200", "--z0", "1,0",
                  "--check", "scsc-bound"}) == 0);
  CHECK(dispatch({"run", "--problem", "bilinear", "--algo", "alt-nm", "--eta", "1/5",
                  "--beta", "-1/2", "--steps", "200", "--z0", "1,0", "--check",
                  "cc-bound"}) == 0);
  CHECK(dispatch({"run", "--problem", "fig1-scsc", "--mu", "0.01", "--algo", "alt-nm",
                  "--eta", "1/5", "--beta", "-1/2", "--steps", "100", "--z0", "1,0",
                  "--check", "lyapunov"}) == 0);
}

TEST_CASE("usage errors exit with 2") {
  // the rate checks only apply to the certified method
  CHECK(dispatch({"run", "--problem", "bilinear", "--algo", "gda", "--eta", "1/5",
                  "--steps", "100", "--check", "cc-bound"}) == 2);
  CHECK(dispatch({"nonsense"}) == 2);
  CHECK(dispatch({"run", "--problem", "nope", "--algo", "gda", "--eta", "1/5",
                  "--steps", "10"}) == 2);
  CHECK(dispatch({"run", "--problem", "bilinear", "--algo", "gda", "--eta", "abc",
                  "--steps", "10"}) == 2);
  CHECK(dispatch({}) == 2);
}

TEST_CASE("compare runs several algorithms and reports them") {
  fs::path out = tmp("sc_cli_cmp.json");
  int rc = dispatch({"compare", "--problem", "bilinear", "--algo", "alt-nm", "--algo",
                     "eg", "--algo", "gda", "--eta", "1/5", "--beta", "-1/2", "--steps",
                     "100", "--z0", "1,0", "--out", out.string()});
  CHECK(rc == 0);
  auto j = nlohmann::json::parse(slurp(out));
  CHECK(j["runs"].size() == 3);
  CHECK(j["runs"][0]["algorithm"] == "alt-nm");
  // alt-nm contracts while plain gda spirals out on the bilinear game
  double alt = j["runs"][0]["final_dist_sq"].get<double>();
  double gda = j["runs"][2]["final_dist_sq"].get<double>();
  CHECK(alt < 1.0);
  CHECK(gda > 1.0);
  fs::remove(out);
}

TEST_CASE("fig1 subcommand produces the four trajectory pairs") {
  fs::path dir = tmp("sc_cli_fig1");
  fs::remove_all(dir);
  CHECK(dispatch({"fig1", "--out", dir.string()}) == 0);
  CHECK(fs::exists(dir / "left_alternating.csv"));
  CHECK(fs::exists(dir / "right_simultaneous.svg"));
  fs::remove_all(dir);
}

TEST_CASE("identical argv produces byte-identical artifacts") {
  fs::path a = tmp("sc_cli_det_a.csv"), b = tmp("sc_cli_det_b.csv");
  std::vector<std::string> base = {"run", "--problem", "random-quad", "--dims", "3,3",
                                   "--mu", "1/10", "--L", "1", "--seed", "42", "--algo",
                                   "alt-nm", "--eta", "1/5", "--beta", "-1/2", "--steps",
                                   "50"};
  auto run_to = [&](const fs::path& p) {
    std::vector<std::string> args = base;
    args.push_back("--out");
    args.push_back(p.string());
    CHECK(dispatch(args) == 0);
  };
  run_to(a);
  run_to(b);
  CHECK(slurp(a) == slurp(b));
  fs::remove(a);
  fs::remove(b);
}
