// Command-line front end: reproducible runs of the nome solve, the truncated
// diagonal solver, solution assembly, and the verification battery, with
// JSON/CSV artifacts.
//
// Exit codes: 0 success, 1 solver failure, 2 bad configuration or unreadable
// input, 3 root bracketing failure, 4 resonant obstruction, 5 verification
// check failed.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "phi4sw/phi4sw.hpp"
#include "phi4sw/serialization.hpp"

namespace fs = std::filesystem;
using namespace phi4sw;

namespace {

struct RunConfig {
  int precision_digits = 40;
  int n = 0;  // per-command default applied later
  std::string delta = "1e-11";
  std::string amplitude = "1";
  std::string epsilon = "0.01";
  std::string output_dir;
  std::string root_pick = "smallest-abs";
  int grid = 64;
};

void apply_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad config file: ") + e.what());
  }
  if (j.contains("precision_digits")) cfg.precision_digits = j.at("precision_digits").get<int>();
  if (j.contains("n")) cfg.n = j.at("n").get<int>();
  if (j.contains("delta")) cfg.delta = j.at("delta").get<std::string>();
  if (j.contains("amplitude")) cfg.amplitude = j.at("amplitude").get<std::string>();
  if (j.contains("epsilon")) cfg.epsilon = j.at("epsilon").get<std::string>();
  if (j.contains("output_dir")) cfg.output_dir = j.at("output_dir").get<std::string>();
  if (j.contains("root_pick")) cfg.root_pick = j.at("root_pick").get<std::string>();
}

void validate_common(const RunConfig& cfg) {
  if (cfg.precision_digits < 20) throw ConfigError("precision must be at least 20 digits");
  if (cfg.root_pick != "smallest-abs" && cfg.root_pick != "first-found")
    throw ConfigError("root-pick must be smallest-abs or first-found");
}

// precision must be set before this parses anything
BigReal checked_delta(const RunConfig& cfg) {
  BigReal d;
  try {
    d = parse_real(cfg.delta);
  } catch (...) {
    throw ConfigError("unparsable delta: " + cfg.delta);
  }
  if (!(d > pow10<BigReal>(-cfg.precision_digits + 5)))
    throw ConfigError("delta must exceed 10^(5 - precision)");
  return d;
}

RootPick pick_of(const RunConfig& cfg) {
  return cfg.root_pick == "first-found" ? RootPick::FirstFound : RootPick::SmallestAbs;
}

fs::path out_dir(const RunConfig& cfg) {
  std::string dir = cfg.output_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv("PHI4SW_OUT")) dir = env;
  }
  if (dir.empty()) dir = "out";
  fs::create_directories(dir);
  return dir;
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream os(p, std::ios::binary);
  os << text;
}

struct TableRow {
  int j;
  std::string c, rc, d, rd;
};

std::vector<TableRow> comparison_table(const SolveReport<BigReal>& rep) {
  const BigReal q = solve_nome(pow10<BigReal>(-static_cast<long>(working_precision()) + 5));
  const std::size_t rows = rep.residuals.size();  // 3N
  auto f = f_sequence(q, rows);
  DiagonalSeq<BigReal> d(rows);
  for (std::size_t i = 0; i < rows; ++i) d.mode(i) = f.mode(i) / f.mode(0);
  const auto rd = diagonal_residuals(d, eliminate_comega(d));

  std::vector<TableRow> out;
  const auto fmt = [](const BigReal& x) { return x.str(12, std::ios_base::scientific); };
  for (std::size_t i = 0; i < rows; ++i) {
    TableRow row;
    row.j = 2 * static_cast<int>(i) + 1;
    row.c = fmt(rep.c.harmonic_or_zero(row.j));
    row.rc = fmt(rep.residuals[i]);
    row.d = fmt(d.mode(i));
    row.rd = fmt(rd.mode(i));
    out.push_back(row);
  }
  return out;
}

void print_table(std::ostream& os, const std::vector<TableRow>& rows) {
  os << std::setw(4) << "j" << std::setw(24) << "c_j" << std::setw(24) << "R_jj(c)" << std::setw(24)
     << "d_j" << std::setw(24) << "R_jj(d)" << "\n";
  for (const auto& r : rows)
    os << std::setw(4) << r.j << std::setw(24) << r.c << std::setw(24) << r.rc << std::setw(24)
       << r.d << std::setw(24) << r.rd << "\n";
}

std::string table_csv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "j,c_j,R_jj_c,d_j,R_jj_d\n";
  for (const auto& r : rows) os << r.j << ',' << r.c << ',' << r.rc << ',' << r.d << ',' << r.rd << "\n";
  return os.str();
}

int cmd_solve_nome(const RunConfig& cfg) {
  const auto cf = closed_form_params<BigReal>();
  std::cout << "q = " << to_decimal_string(cf.params.q) << "\n"
            << "k = " << to_decimal_string(cf.params.k) << "\n"
            << "gamma = " << to_decimal_string(cf.params.gamma) << "\n"
            << "alpha = " << to_decimal_string(cf.params.alpha) << "\n"
            << "omega1_coeff = " << to_decimal_string(cf.omega1_coeff) << "\n"
            << "fsq_defect = " << to_decimal_string(cf.fsq_defect) << "\n";
  Json j = to_json(cf.params);
  j["precision_digits"] = working_precision();
  j["omega1_coeff"] = to_decimal_string(cf.omega1_coeff);
  j["omega1_f_normalized"] = to_decimal_string(cf.omega1_f_normalized);
  j["fsq_defect"] = to_decimal_string(cf.fsq_defect);
  write_text(out_dir(cfg) / "elliptic_params.json", j.dump(2) + "\n");
  return 0;
}

int cmd_galerkin(const RunConfig& cfg, bool table_only) {
  if (cfg.n < 2 || cfg.n > 50) throw ConfigError("truncation must satisfy 2 <= N <= 50");
  const BigReal delta = checked_delta(cfg);
  const auto rep = galerkin_solve(cfg.n, delta, pick_of(cfg));
  const auto rows = comparison_table(rep);
  print_table(std::cout, rows);
  std::cout << "c_omega = " << to_decimal_string(rep.c_omega) << "\n"
            << "converged = " << (rep.converged ? "true" : "false") << "\n"
            << "max_tail_residual = " << rep.max_tail_residual().str(3, std::ios_base::scientific)
            << "\n";
  const auto dir = out_dir(cfg);
  write_text(dir / "galerkin_table.csv", table_csv(rows));
  if (!table_only) write_text(dir / "galerkin_report.json", to_json(rep).dump(2) + "\n");
  if (!rep.converged) throw NonConvergence("solved block residuals above delta");
  return 0;
}

int cmd_build(const RunConfig& cfg) {
  if (cfg.n < 2 || cfg.n > 50) throw ConfigError("truncation must satisfy 2 <= N <= 50");
  BigReal amplitude, epsilon;
  try {
    amplitude = parse_real(cfg.amplitude);
    epsilon = parse_real(cfg.epsilon);
  } catch (...) {
    throw ConfigError("unparsable amplitude or epsilon");
  }
  if (!(epsilon >= 0)) throw ConfigError("epsilon must be nonnegative");
  const auto cf = closed_form_params<BigReal>();
  const auto sol = build_solution(cf.params, amplitude, epsilon, static_cast<std::size_t>(cfg.n));
  std::cout << "omega = " << to_decimal_string(sol.frequency()) << "\n";
  write_text(out_dir(cfg) / "solution.json", to_json(sol).dump(2) + "\n");
  return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& solution_path) {
  std::ifstream in(solution_path);
  if (!in) throw ParseError("cannot open solution file: " + solution_path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad solution file: ") + e.what());
  }
  const auto sol = solution_from_json(j);

  bool all_pass = true;
  const auto report = [&](const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS " : "FAIL ") << name << ": " << detail << "\n";
    if (!pass) all_pass = false;
  };

  // residual scaling of the original wave equation: successive eps halvings
  // must shrink the sup-norm residual roughly eightfold
  {
    const std::vector<BigReal> eps = {BigReal("1e-2"), BigReal("5e-3"), BigReal("2.5e-3")};
    const auto res = pde_residual_scan(sol, eps, cfg.grid);
    bool ok = true;
    std::ostringstream detail;
    detail << "sup-norm residuals";
    for (std::size_t i = 0; i < res.size(); ++i) {
      detail << ' ' << res[i].str(3, std::ios_base::scientific) << "(/eps^3="
             << BigReal(res[i] / (eps[i] * eps[i] * eps[i])).str(3, std::ios_base::scientific)
             << ')';
    }
    detail << ", ratios";
    for (std::size_t i = 0; i + 1 < res.size(); ++i) {
      const BigReal ratio = res[i] / res[i + 1];
      detail << ' ' << ratio.str(4);
      if (!(ratio >= 6 && ratio <= 10)) ok = false;
    }
    report("pde-residual-scaling", ok, detail.str());
  }

  // proportionality of the cubed coefficient sequence
  {
    const BigReal defect = verify_proportionality(sol.params, 25, 30);
    report("cube-proportionality", defect < pow10<BigReal>(-15),
           "max relative defect " + defect.str(3, std::ios_base::scientific));
  }

  // elliptic cosine differential equation
  {
    const BigReal defect = verify_cn_ode(sol.params, 64);
    report("cn-ode", defect < pow10<BigReal>(-20),
           "max defect " + defect.str(3, std::ios_base::scientific));
  }

  // diagonal closure of the normalized coefficient sequence at omega1 = 1/256
  {
    auto f = f_sequence(sol.params.q, 30);
    DiagonalSeq<BigReal> d(30);
    for (std::size_t i = 0; i < 30; ++i) d.mode(i) = f.mode(i) / f.mode(0);
    const BigReal cw = (BigReal(1) / 256) / (f.mode(0) * f.mode(0));
    const auto r = diagonal_residuals(d, cw);
    BigReal worst(0);
    for (const auto& v : r.values())
      if (abs(v) > worst) worst = abs(v);
    report("diagonal-closure", worst < pow10<BigReal>(-25),
           "max |residual| " + worst.str(3, std::ios_base::scientific));
  }

  if (!all_pass) return 5;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"doubly periodic standing-wave asymptotics for the cubic wave equation"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string config_path, solution_path;

  app.add_option("--config", config_path, "JSON config file (flags win over file values)");
  app.add_option("--precision", cfg.precision_digits, "working precision in decimal digits");
  app.add_option("--out", cfg.output_dir, "output directory (env PHI4SW_OUT overrides default)");

  auto* nome = app.add_subcommand("solve-nome", "solve the nome equation, print parameters");
  auto* gal = app.add_subcommand("galerkin", "solve the N leading diagonal equations");
  auto* build = app.add_subcommand("build", "assemble and store the asymptotic solution");
  auto* verify = app.add_subcommand("verify", "run the verification battery on a stored solution");
  auto* table = app.add_subcommand("export-table", "write the coefficient comparison table");

  for (auto* sc : {gal, table}) {
    sc->add_option("--n", cfg.n, "truncation: number of leading equations");
    sc->add_option("--delta", cfg.delta, "residual tolerance");
    sc->add_option("--root-pick", cfg.root_pick, "smallest-abs|first-found");
  }
  build->add_option("--n", cfg.n, "leading-order modes");
  build->add_option("--amplitude", cfg.amplitude, "oscillation amplitude A");
  build->add_option("--epsilon", cfg.epsilon, "expansion parameter");
  verify->add_option("solution", solution_path, "solution JSON path")->required();
  verify->add_option("--grid", cfg.grid, "lattice points per axis for the residual scan");

  // config file values load first; flags parsed afterwards win
  try {
    for (int i = 1; i < argc; ++i) {
      const std::string arg = argv[i];
      if (arg == "--config" && i + 1 < argc) {
        apply_config_file(argv[i + 1], cfg);
        break;
      }
      if (arg.rfind("--config=", 0) == 0) {
        apply_config_file(arg.substr(9), cfg);
        break;
      }
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }

  CLI11_PARSE(app, argc, argv);

  try {
    validate_common(cfg);
    set_working_precision(static_cast<unsigned>(cfg.precision_digits));

    if (nome->parsed()) return cmd_solve_nome(cfg);
    if (gal->parsed()) {
      if (cfg.n == 0) cfg.n = 8;
      return cmd_galerkin(cfg, false);
    }
    if (table->parsed()) {
      if (cfg.n == 0) cfg.n = 8;
      return cmd_galerkin(cfg, true);
    }
    if (build->parsed()) {
      if (cfg.n == 0) cfg.n = 20;
      return cmd_build(cfg);
    }
    if (verify->parsed()) {
      if (cfg.grid < 64) throw ConfigError("scan grid must have at least 64 points per axis");
      return cmd_verify(cfg, solution_path);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const BracketError& e) {
    std::cerr << "bracketing failed: " << e.what() << "\n";
    return 3;
  } catch (const ResonanceError& e) {
    std::cerr << "resonance obstruction: " << e.what() << "\n";
    return 4;
  } catch (const NonConvergence& e) {
    std::cerr << "no convergence: " << e.what() << "\n";
    return 1;
  } catch (const NoQualifyingRoot& e) {
    std::cerr << "root selection failed: " << e.what() << " (equation " << e.equation_index
              << ")\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
