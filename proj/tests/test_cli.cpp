#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#ifndef LENSLAB_CLI_PATH
#error "LENSLAB_CLI_PATH must be defined"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

RunResult run(const std::string& args) {
  const std::string out_path = "cli_test_stdout.txt";
  const std::string cmd = std::string(LENSLAB_CLI_PATH) + " " + args + " > " + out_path + " 2> cli_test_stderr.txt";
  const int status = std::system(cmd.c_str());
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return RunResult{code, slurp(out_path)};
}

}  // namespace

TEST_CASE("order command") {
  auto r = run("order --alpha 0.5 --kind convex --method both");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["closed_form"].get<double>() == doctest::Approx(0.20710678118654752).epsilon(1e-10));
  CHECK(j["numeric"].get<double>() == doctest::Approx(0.20710678118654752).epsilon(1e-8));
  CHECK(j["pass"].get<bool>());

  r = run("order --alpha 1 --kind starlike");
  CHECK(r.exit_code == 0);
  CHECK(nlohmann::json::parse(r.out)["closed_form"].get<double>() == 1.0);

  r = run("order --alpha 0 --kind convex");
  CHECK(r.exit_code == 1);

  r = run("order --alpha 0.5 --kind frobnicate");
  CHECK(r.exit_code == 1);

  r = run("order --alpha 0.5 --kind starlike --method closed --format text");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("closed_form") != std::string::npos);
}

TEST_CASE("scan command") {
  auto r = run("scan --alpha-min 0.1 --alpha-max 1.0 --steps 10 --kind convex");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "alpha,closed_form,numeric,residual,minimizer_t");
  int rows = 0;
  double prev_alpha = 0.0;
  while (std::getline(lines, line)) {
    ++rows;
    std::istringstream fields(line);
    std::string cell;
    std::getline(fields, cell, ',');
    const double alpha = std::stod(cell);
    CHECK(alpha > prev_alpha);
    prev_alpha = alpha;
    std::getline(fields, cell, ',');
    std::getline(fields, cell, ',');
    std::getline(fields, cell, ',');
    CHECK(std::stod(cell) < 1e-8);  // residual column
  }
  CHECK(rows == 10);

  r = run("scan --alpha-min 0.5 --alpha-max 1.0 --steps 2 --kind starlike");
  CHECK(r.exit_code == 0);
  int count = 0;
  std::istringstream lines2(r.out);
  while (std::getline(lines2, line)) ++count;
  CHECK(count == 3);  // header + 2 rows

  CHECK(run("scan --alpha-min 0.5 --alpha-max 0.2 --steps 4 --kind convex").exit_code == 1);
  CHECK(run("scan --alpha-min 0.5 --alpha-max 1.5 --steps 4 --kind convex").exit_code == 1);
}

TEST_CASE("scan is byte-deterministic") {
  CHECK(run("scan --alpha-min 0.2 --alpha-max 0.8 --steps 5 --kind convex --out scan_a.csv").exit_code == 0);
  CHECK(run("scan --alpha-min 0.2 --alpha-max 0.8 --steps 5 --kind convex --out scan_b.csv").exit_code == 0);
  CHECK(slurp("scan_a.csv") == slurp("scan_b.csv"));
  CHECK(!slurp("scan_a.csv").empty());
}

TEST_CASE("verify command") {
  auto r = run("verify --alpha 0.5");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["overall"].get<bool>());
  CHECK(!j["checks"].empty());

  CHECK(run("verify --alpha 1.5").exit_code == 0);
  CHECK(run("verify --alpha 3.0").exit_code == 1);
}

TEST_CASE("grid-image command") {
  auto r = run("grid-image --alpha 0.5 --rays 8 --circles 4 --samples 64 --out img_a.svg");
  CHECK(r.exit_code == 0);
  const std::string svg = slurp("img_a.svg");
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);

  run("grid-image --alpha 0.5 --rays 8 --circles 4 --samples 64 --out img_b.svg");
  CHECK(slurp("img_b.svg") == svg);

  CHECK(run("grid-image --alpha 0.5 --out /nonexistent-dir/x.svg").exit_code == 1);
  CHECK(run("grid-image --alpha 0 --out img_c.svg").exit_code == 1);
}

TEST_CASE("config file provides defaults, flags override") {
  {
    std::ofstream f("lenslab_test.cfg");
    f << "tol=1e-6\n";
  }
  auto r = run("--config lenslab_test.cfg order --alpha 0.5 --kind convex");
  CHECK(r.exit_code == 0);
  CHECK(nlohmann::json::parse(r.out)["tol"].get<double>() == 1e-6);

  r = run("--config lenslab_test.cfg --tol 1e-5 order --alpha 0.5 --kind convex");
  CHECK(r.exit_code == 0);
  CHECK(nlohmann::json::parse(r.out)["tol"].get<double>() == 1e-5);
}
