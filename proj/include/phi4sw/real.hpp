#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <ios>
#include <string>

namespace phi4sw {

// Configurable-precision real scalar. Decimal precision is set process-wide
// (thread-locally) before any values are constructed; every value created
// afterwards carries that precision through arithmetic.
using BigReal = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                              boost::multiprecision::et_off>;

inline void set_working_precision(unsigned digits10) { BigReal::default_precision(digits10); }

inline unsigned working_precision() { return BigReal::default_precision(); }

struct ScopedPrecision {
  unsigned saved;
  explicit ScopedPrecision(unsigned digits10) : saved(BigReal::default_precision()) {
    BigReal::default_precision(digits10);
  }
  ~ScopedPrecision() { BigReal::default_precision(saved); }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;
};

template <class Real>
Real pi_value() {
  using std::acos;
  return acos(Real(-1));
}

template <class Real>
Real pow10(long e) {
  using std::pow;
  return pow(Real(10), static_cast<int>(e));
}

// Decimal string preserving full precision (round-trips exactly through the
// string constructor).
inline std::string to_decimal_string(const BigReal& x) {
  return x.str(0, std::ios_base::scientific);
}

inline BigReal parse_real(const std::string& s) { return BigReal(s); }

}  // namespace phi4sw
