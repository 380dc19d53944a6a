#pragma once

#include <complex>
#include <cstddef>
#include <string>

namespace cauchybv::kernels {

// Result of an accumulated complex sum, kept split so SIMD and scalar paths
// share one return type.
struct Sum {
  double re = 0.0;
  double im = 0.0;
  std::complex<double> value() const { return {re, im}; }
};

inline constexpr std::ptrdiff_t no_skip = -1;

enum class Backend { scalar, avx2 };

const char* backend_name(Backend b);
bool backend_supported(Backend b);
Backend best_backend();
Backend active_backend();
// Pins the kernel backend; throws ConfigError if unsupported on this host.
void set_backend(Backend b);
// Parses "scalar" / "avx2" / "auto"; throws ConfigError otherwise.
Backend parse_backend(const std::string& name);

// sum over j != skip of w_j / (s_j - z), arrays in split (re, im) layout.
// The skipped entry may hold anything, including a zero denominator.
Sum cauchy_sum(const double* s_re, const double* s_im, const double* w_re,
               const double* w_im, std::size_t n, double z_re, double z_im,
               std::ptrdiff_t skip = no_skip);

// Reference implementation, always available; SIMD paths are tested
// against it.
Sum cauchy_sum_scalar(const double* s_re, const double* s_im,
                      const double* w_re, const double* w_im, std::size_t n,
                      double z_re, double z_im, std::ptrdiff_t skip = no_skip);

}  // namespace cauchybv::kernels
