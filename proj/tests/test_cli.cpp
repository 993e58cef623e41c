#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "phi4sw/serialization.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// run the CLI with stdout captured to a file; stderr folded in
RunResult run_cli(const std::string& args, const fs::path& workdir) {
  const fs::path out_file = workdir / "stdout.txt";
  const std::string cmd = std::string(PHI4SW_CLI_PATH) + " " + args + " > " +
                          out_file.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_file);
  return r;
}

fs::path fresh_dir(const std::string& tag) {
  const fs::path dir = fs::temp_directory_path() / ("phi4sw_cli_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("solve-nome prints the nome and writes the sidecar", "[cli]") {
  const auto dir = fresh_dir("nome");
  const auto r = run_cli("--out " + (dir / "out").string() + " solve-nome", dir);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("q = 1.42142623201") != std::string::npos);
  CHECK(r.out.find("gamma = 3.78191440007") != std::string::npos);
  CHECK(fs::exists(dir / "out" / "elliptic_params.json"));
}

TEST_CASE("configuration errors exit with code two", "[cli]") {
  const auto dir = fresh_dir("cfg");
  CHECK(run_cli("--precision 10 solve-nome", dir).exit_code == 2);
  CHECK(run_cli("galerkin --n 1", dir).exit_code == 2);
  CHECK(run_cli("galerkin --n 4 --delta 1e-44", dir).exit_code == 2);
  CHECK(run_cli("galerkin --n 4 --root-pick bogus", dir).exit_code == 2);
}

TEST_CASE("galerkin writes the report and the comparison table", "[cli]") {
  const auto dir = fresh_dir("gal");
  const auto r = run_cli("--out " + (dir / "out").string() + " galerkin --n 6", dir);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("c_omega = ") != std::string::npos);
  CHECK(fs::exists(dir / "out" / "galerkin_report.json"));
  const std::string csv = slurp(dir / "out" / "galerkin_table.csv");
  CHECK(csv.rfind("j,c_j,R_jj_c,d_j,R_jj_d\n", 0) == 0);
  std::size_t rows = 0;
  for (char ch : csv)
    if (ch == '\n') ++rows;
  CHECK(rows == 19);  // header + 3N rows

  // the stored report parses back
  phi4sw::Json j = phi4sw::Json::parse(slurp(dir / "out" / "galerkin_report.json"));
  const auto rep = phi4sw::solve_report_from_json(j);
  CHECK(rep.n == 6);
  CHECK(rep.converged);
}

TEST_CASE("export-table writes only the table", "[cli]") {
  const auto dir = fresh_dir("table");
  const auto r = run_cli("--out " + (dir / "out").string() + " export-table --n 4", dir);
  CHECK(r.exit_code == 0);
  CHECK(fs::exists(dir / "out" / "galerkin_table.csv"));
  CHECK(!fs::exists(dir / "out" / "galerkin_report.json"));
}

TEST_CASE("build prints the frequency and is deterministic", "[cli]") {
  const auto dir = fresh_dir("build");
  const auto r1 = run_cli("--out " + (dir / "a").string() + " build --n 8", dir);
  CHECK(r1.exit_code == 0);
  CHECK(r1.out.find("omega = 1.0109") != std::string::npos);  // 1 + 1.098e-2 - 6.03e-5
  const auto r2 = run_cli("--out " + (dir / "b").string() + " build --n 8", dir);
  CHECK(r2.exit_code == 0);
  CHECK(slurp(dir / "a" / "solution.json") == slurp(dir / "b" / "solution.json"));
  CHECK(!slurp(dir / "a" / "solution.json").empty());
}

TEST_CASE("zero amplitude builds the trivial solution", "[cli]") {
  const auto dir = fresh_dir("zero");
  const auto r = run_cli("--out " + (dir / "out").string() + " build --n 4 --amplitude 0", dir);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("omega = 1.0000000000") != std::string::npos);
}

TEST_CASE("verify passes on a fresh build and fails on a corrupted one", "[cli][slow]") {
  const auto dir = fresh_dir("verify");
  const auto out = dir / "out";
  REQUIRE(run_cli("--out " + out.string() + " build --n 12", dir).exit_code == 0);

  const auto ok = run_cli("verify " + (out / "solution.json").string(), dir);
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("PASS pde-residual-scaling") != std::string::npos);
  CHECK(ok.out.find("PASS cube-proportionality") != std::string::npos);
  CHECK(ok.out.find("PASS cn-ode") != std::string::npos);
  CHECK(ok.out.find("PASS diagonal-closure") != std::string::npos);

  // corrupt the leading coefficient by 1e-6
  phi4sw::Json j = phi4sw::Json::parse(slurp(out / "solution.json"));
  auto coeffs = j["phi0"]["coeffs"].get<std::vector<std::string>>();
  const phi4sw::BigReal bumped = phi4sw::parse_real(coeffs[0]) + phi4sw::parse_real("1e-6");
  coeffs[0] = phi4sw::to_decimal_string(bumped);
  j["phi0"]["coeffs"] = coeffs;
  std::ofstream(out / "corrupt.json") << j.dump(2);

  const auto bad = run_cli("verify " + (out / "corrupt.json").string(), dir);
  CHECK(bad.exit_code == 5);
  CHECK(bad.out.find("FAIL pde-residual-scaling") != std::string::npos);
}

TEST_CASE("verify rejects unreadable input", "[cli]") {
  const auto dir = fresh_dir("badfile");
  CHECK(run_cli("verify /nonexistent/path.json", dir).exit_code == 2);
  std::ofstream(dir / "garbage.json") << "{not json";
  CHECK(run_cli("verify " + (dir / "garbage.json").string(), dir).exit_code == 2);
}

TEST_CASE("config file supplies defaults and flags win", "[cli]") {
  const auto dir = fresh_dir("conf");
  std::ofstream(dir / "run.json") << R"({"n": 6, "output_dir": ")" << (dir / "fromcfg").string()
                                  << R"("})";
  // config n=6 applies
  const auto r1 = run_cli("--config " + (dir / "run.json").string() + " export-table", dir);
  CHECK(r1.exit_code == 0);
  std::size_t rows1 = 0;
  for (char ch : slurp(dir / "fromcfg" / "galerkin_table.csv"))
    if (ch == '\n') ++rows1;
  CHECK(rows1 == 19);  // 3*6 + header
  // flag overrides config
  const auto r2 = run_cli("--config " + (dir / "run.json").string() + " export-table --n 4", dir);
  CHECK(r2.exit_code == 0);
  std::size_t rows2 = 0;
  for (char ch : slurp(dir / "fromcfg" / "galerkin_table.csv"))
    if (ch == '\n') ++rows2;
  CHECK(rows2 == 13);  // 3*4 + header
}

TEST_CASE("environment variable supplies the output directory", "[cli]") {
  const auto dir = fresh_dir("env");
  const fs::path out_file = dir / "stdout.txt";
  const std::string cmd = "PHI4SW_OUT=" + (dir / "envout").string() + " " + PHI4SW_CLI_PATH +
                          " solve-nome > " + out_file.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 0);
  CHECK(fs::exists(dir / "envout" / "elliptic_params.json"));
}

TEST_CASE("higher precision yields stable further digits", "[cli]") {
  const auto dir = fresh_dir("prec");
  const auto a = run_cli("--out " + (dir / "a").string() + " --precision 60 solve-nome", dir);
  const auto b = run_cli("--out " + (dir / "b").string() + " --precision 60 solve-nome", dir);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  // the sixty-digit q extends the fifty-digit reference
  CHECK(a.out.find("q = 1.4214262320167699965009443086958999677744") != std::string::npos);
}
