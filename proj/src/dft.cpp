#include "cauchybv/dft.hpp"

#include <cmath>
#include <cstddef>

namespace cauchybv {

namespace {

// Twiddle table w_m = e^{-2 pi i m / N}, m = 0..N-1.
std::vector<Complex> twiddles(std::size_t n) {
  std::vector<Complex> w(n);
  for (std::size_t m = 0; m < n; ++m) {
    double ang = (two_pi * static_cast<double>(m)) / static_cast<double>(n);
    w[m] = {std::cos(ang), -std::sin(ang)};
  }
  return w;
}

}  // namespace

int dft_mode(int k, int n) { return k < (n + 1) / 2 ? k : k - n; }

std::vector<Complex> dft_forward(std::span<const Complex> v) {
  const std::size_t n = v.size();
  const auto w = twiddles(n);
  std::vector<Complex> c(n);
  for (std::size_t k = 0; k < n; ++k) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += v[j] * w[(j * k) % n];
    c[k] = acc / static_cast<double>(n);
  }
  return c;
}

std::vector<Complex> dft_inverse(std::span<const Complex> c) {
  const std::size_t n = c.size();
  const auto w = twiddles(n);
  std::vector<Complex> v(n);
  for (std::size_t j = 0; j < n; ++j) {
    Complex acc = 0.0;
    // conj(w) gives the +i kernel.
    for (std::size_t k = 0; k < n; ++k) acc += c[k] * std::conj(w[(j * k) % n]);
    v[j] = acc;
  }
  return v;
}

std::vector<Complex> dft_derivative(std::span<const Complex> v) {
  const std::size_t n = v.size();
  auto c = dft_forward(v);
  for (std::size_t k = 0; k < n; ++k) {
    int mode = dft_mode(static_cast<int>(k), static_cast<int>(n));
    if (n % 2 == 0 && k == n / 2) {
      c[k] = 0.0;  // lone Nyquist mode has no symmetric partner
      continue;
    }
    c[k] *= Complex{0.0, static_cast<double>(mode)};
  }
  return dft_inverse(c);
}

}  // namespace cauchybv
