#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cauchybv {

using Complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

inline constexpr const char* version_string = "cauchybv 0.1.0";

// Thrown on invalid inputs (bad parameters, mismatched sizes, unusable
// configurations).  Numerical-quality issues are reported via flags, not
// exceptions.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

// Integer power of a complex number; n may be negative (z must be nonzero).
inline Complex ipow(Complex z, int n) {
  if (n < 0) return 1.0 / ipow(z, -n);
  Complex r = 1.0;
  Complex base = z;
  unsigned e = static_cast<unsigned>(n);
  while (e) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1u;
  }
  return r;
}

}  // namespace cauchybv
