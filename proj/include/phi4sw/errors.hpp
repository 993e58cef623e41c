#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace phi4sw {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
  using Error::Error;
};

// Invalid run configuration (precision/truncation/tolerance bounds).
struct ConfigError : Error {
  using Error::Error;
};

// No sign change found when bracketing a root.
struct BracketError : Error {
  using Error::Error;
};

// Iterative sweep exceeded its cap without reaching the tolerance.
struct NonConvergence : Error {
  using Error::Error;
};

// A polynomial solve produced no real root of modulus below one.
struct NoQualifyingRoot : Error {
  int equation_index;  // k such that the unknown was the coefficient of harmonic 2k-1; 0 if n/a

  explicit NoQualifyingRoot(const std::string& what, int k = 0)
      : Error(what), equation_index(k) {}
};

// A diagonal (resonant) harmonic failed the solvability condition.
struct ResonanceError : Error {
  std::vector<std::pair<int, int>> harmonics;

  explicit ResonanceError(std::vector<std::pair<int, int>> offending)
      : Error(describe(offending)), harmonics(std::move(offending)) {}

 private:
  static std::string describe(const std::vector<std::pair<int, int>>& hs) {
    std::ostringstream os;
    os << "resonant diagonal harmonic(s) obstruct a periodic solution:";
    for (const auto& [n, j] : hs) os << " (" << n << "," << j << ")";
    return os.str();
  }
};

// Malformed artifact file.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace phi4sw
