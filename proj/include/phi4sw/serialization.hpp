#pragma once

#include <nlohmann/json.hpp>

#include <ostream>
#include <string>
#include <vector>

#include "phi4sw/coeff_grid.hpp"
#include "phi4sw/diagonal_seq.hpp"
#include "phi4sw/elliptic.hpp"
#include "phi4sw/errors.hpp"
#include "phi4sw/galerkin.hpp"
#include "phi4sw/perturbation.hpp"
#include "phi4sw/real.hpp"

// Artifact formats. Every scalar serializes as a decimal string carrying the
// full working precision, so files are diffable and round-trip exactly.

namespace phi4sw {

using Json = nlohmann::ordered_json;

inline Json to_json(const DiagonalSeq<BigReal>& s) {
  Json j;
  j["modes"] = s.modes();
  Json arr = Json::array();
  for (const auto& v : s.values()) arr.push_back(to_decimal_string(v));
  j["coeffs"] = arr;
  return j;
}

inline DiagonalSeq<BigReal> diagonal_seq_from_json(const Json& j) {
  if (!j.contains("modes") || !j.contains("coeffs")) throw ParseError("malformed sequence object");
  std::vector<BigReal> c;
  for (const auto& v : j.at("coeffs")) c.push_back(parse_real(v.get<std::string>()));
  if (c.size() != j.at("modes").get<std::size_t>()) throw ParseError("sequence length mismatch");
  return DiagonalSeq<BigReal>(std::move(c));
}

inline Json to_json(const CoeffGrid<BigReal>& g) {
  Json j;
  j["n_x"] = g.max_x();
  j["n_t"] = g.max_t();
  Json arr = Json::array();
  for (const auto& v : g.values()) arr.push_back(to_decimal_string(v));  // row-major
  j["coeffs"] = arr;
  return j;
}

inline CoeffGrid<BigReal> coeff_grid_from_json(const Json& j) {
  if (!j.contains("n_x") || !j.contains("n_t") || !j.contains("coeffs"))
    throw ParseError("malformed grid object");
  const int nx = j.at("n_x").get<int>(), nt = j.at("n_t").get<int>();
  CoeffGrid<BigReal> g(nx, nt);
  const auto& arr = j.at("coeffs");
  if (arr.size() != static_cast<std::size_t>(nx) * nt) throw ParseError("grid size mismatch");
  std::size_t i = 0;
  for (int n = 1; n <= nx; ++n)
    for (int t = 1; t <= nt; ++t) g.at(n, t) = parse_real(arr.at(i++).get<std::string>());
  return g;
}

inline Json to_json(const EllipticParams<BigReal>& p) {
  Json j;
  j["q"] = to_decimal_string(p.q);
  j["k"] = to_decimal_string(p.k);
  j["kprime"] = to_decimal_string(p.kprime);
  j["K"] = to_decimal_string(p.K);
  j["Kprime"] = to_decimal_string(p.Kprime);
  j["gamma"] = to_decimal_string(p.gamma);
  j["alpha"] = to_decimal_string(p.alpha);
  return j;
}

inline EllipticParams<BigReal> elliptic_params_from_json(const Json& j) {
  EllipticParams<BigReal> p;
  try {
    p.q = parse_real(j.at("q").get<std::string>());
    p.k = parse_real(j.at("k").get<std::string>());
    p.kprime = parse_real(j.at("kprime").get<std::string>());
    p.K = parse_real(j.at("K").get<std::string>());
    p.Kprime = parse_real(j.at("Kprime").get<std::string>());
    p.gamma = parse_real(j.at("gamma").get<std::string>());
    p.alpha = parse_real(j.at("alpha").get<std::string>());
  } catch (const nlohmann::json::exception&) {
    throw ParseError("malformed elliptic parameter object");
  }
  return p;
}

inline Json to_json(const SolveReport<BigReal>& r) {
  Json j;
  j["n"] = r.n;
  j["delta"] = to_decimal_string(r.delta);
  j["root_pick"] = r.root_pick == RootPick::SmallestAbs ? "smallest-abs" : "first-found";
  j["converged"] = r.converged;
  j["sweeps"] = r.sweeps;
  j["c_omega"] = to_decimal_string(r.c_omega);
  j["c"] = to_json(r.c);
  Json res = Json::array();
  for (const auto& v : r.residuals) res.push_back(to_decimal_string(v));
  j["residuals"] = res;
  return j;
}

inline SolveReport<BigReal> solve_report_from_json(const Json& j) {
  SolveReport<BigReal> r;
  try {
    r.n = j.at("n").get<int>();
    r.delta = parse_real(j.at("delta").get<std::string>());
    r.root_pick = j.at("root_pick").get<std::string>() == "first-found" ? RootPick::FirstFound
                                                                        : RootPick::SmallestAbs;
    r.converged = j.at("converged").get<bool>();
    r.sweeps = j.at("sweeps").get<int>();
    r.c_omega = parse_real(j.at("c_omega").get<std::string>());
    r.c = diagonal_seq_from_json(j.at("c"));
    for (const auto& v : j.at("residuals")) r.residuals.push_back(parse_real(v.get<std::string>()));
  } catch (const nlohmann::json::exception&) {
    throw ParseError("malformed solve report");
  }
  return r;
}

inline Json to_json(const AsymptoticSolution<BigReal>& s) {
  Json j;
  j["precision_digits"] = working_precision();
  j["amplitude"] = to_decimal_string(s.amplitude);
  j["epsilon"] = to_decimal_string(s.epsilon);
  j["omega1"] = to_decimal_string(s.omega1);
  j["omega2"] = to_decimal_string(s.omega2);
  j["params"] = to_json(s.params);
  j["phi0"] = to_json(s.phi0);
  j["phi1"] = to_json(s.phi1);
  j["phi2"] = to_json(s.phi2);
  return j;
}

inline AsymptoticSolution<BigReal> solution_from_json(const Json& j) {
  AsymptoticSolution<BigReal> s;
  try {
    s.amplitude = parse_real(j.at("amplitude").get<std::string>());
    s.epsilon = parse_real(j.at("epsilon").get<std::string>());
    s.omega1 = parse_real(j.at("omega1").get<std::string>());
    s.omega2 = parse_real(j.at("omega2").get<std::string>());
    s.params = elliptic_params_from_json(j.at("params"));
    s.phi0 = diagonal_seq_from_json(j.at("phi0"));
    s.phi1 = coeff_grid_from_json(j.at("phi1"));
    s.phi2 = coeff_grid_from_json(j.at("phi2"));
  } catch (const nlohmann::json::exception&) {
    throw ParseError("malformed solution file");
  }
  return s;
}

// (n, j, value) rows for plotting.
inline void write_grid_csv(std::ostream& os, const CoeffGrid<BigReal>& g) {
  os << "n,j,value\n";
  for (int n = 1; n <= g.max_x(); ++n)
    for (int j = 1; j <= g.max_t(); ++j) os << n << ',' << j << ',' << to_decimal_string(g.at(n, j)) << '\n';
}

// (x, t, phi) rows on a uniform lattice over one period square.
inline void write_field_csv(std::ostream& os, const AsymptoticSolution<BigReal>& sol,
                            int grid_size) {
  const BigReal two_pi = 2 * pi_value<BigReal>();
  const BigReal om = sol.frequency();
  os << "x,t,phi\n";
  for (int i = 0; i < grid_size; ++i) {
    const BigReal x = two_pi * i / grid_size;
    for (int l = 0; l < grid_size; ++l) {
      const BigReal t = two_pi * l / grid_size / om;  // t~ lattice mapped back to t
      os << to_decimal_string(x) << ',' << to_decimal_string(t) << ','
         << to_decimal_string(evaluate_field(sol, x, t)) << '\n';
    }
  }
}

}  // namespace phi4sw
