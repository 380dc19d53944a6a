#include "cauchybv/polyfit.hpp"

#include <cmath>
#include <cstddef>

namespace cauchybv {

Complex extrapolate_to_zero(std::span<const double> x,
                            std::span<const Complex> y, int degree) {
  const std::size_t m = x.size();
  const std::size_t nc = static_cast<std::size_t>(degree) + 1;
  if (degree < 0) throw ConfigError("extrapolation degree must be >= 0");
  if (y.size() != m) throw ConfigError("extrapolation point count mismatch");
  if (m < nc)
    throw ConfigError("extrapolation needs at least degree+1 sample points");

  double xs = 0.0;
  for (double v : x) xs = std::max(xs, std::abs(v));
  if (xs == 0.0) throw ConfigError("extrapolation abscissae are all zero");

  // Row-major Vandermonde in the scaled variable, plus (re, im) RHS columns.
  std::vector<double> a(m * nc);
  std::vector<double> rhs_re(m), rhs_im(m);
  for (std::size_t k = 0; k < m; ++k) {
    double t = x[k] / xs;
    double p = 1.0;
    for (std::size_t c = 0; c < nc; ++c) {
      a[k * nc + c] = p;
      p *= t;
    }
    rhs_re[k] = y[k].real();
    rhs_im[k] = y[k].imag();
  }

  // Householder QR, reflectors applied to A and both RHS columns.
  std::vector<double> v(m);
  for (std::size_t col = 0; col < nc; ++col) {
    double sigma = 0.0;
    for (std::size_t i = col; i < m; ++i) sigma += a[i * nc + col] * a[i * nc + col];
    sigma = std::sqrt(sigma);
    if (sigma == 0.0)
      throw ConfigError("extrapolation system is rank deficient (duplicate offsets?)");
    double pivot = a[col * nc + col];
    double alpha = pivot >= 0.0 ? -sigma : sigma;
    v[col] = pivot - alpha;
    for (std::size_t i = col + 1; i < m; ++i) v[i] = a[i * nc + col];
    double vnorm2 = 0.0;
    for (std::size_t i = col; i < m; ++i) vnorm2 += v[i] * v[i];
    if (vnorm2 == 0.0) continue;  // column already triangular
    auto reflect = [&](auto&& get, auto&& set) {
      double dot = 0.0;
      for (std::size_t i = col; i < m; ++i) dot += v[i] * get(i);
      double f = 2.0 * dot / vnorm2;
      for (std::size_t i = col; i < m; ++i) set(i, get(i) - f * v[i]);
    };
    for (std::size_t c = col + 1; c < nc; ++c)
      reflect([&](std::size_t i) { return a[i * nc + c]; },
              [&](std::size_t i, double val) { a[i * nc + c] = val; });
    reflect([&](std::size_t i) { return rhs_re[i]; },
            [&](std::size_t i, double val) { rhs_re[i] = val; });
    reflect([&](std::size_t i) { return rhs_im[i]; },
            [&](std::size_t i, double val) { rhs_im[i] = val; });
    a[col * nc + col] = alpha;
    for (std::size_t i = col + 1; i < m; ++i) a[i * nc + col] = 0.0;
  }

  double dmin = std::abs(a[0]);
  double dmax = dmin;
  for (std::size_t c = 1; c < nc; ++c) {
    double d = std::abs(a[c * nc + c]);
    dmin = std::min(dmin, d);
    dmax = std::max(dmax, d);
  }
  if (dmin <= 1e-13 * dmax)
    throw ConfigError("extrapolation is ill-conditioned (near-duplicate offsets)");

  // Back substitution; only the constant coefficient is needed, but the full
  // solve is cheap and keeps the rank check honest.
  auto solve = [&](std::vector<double>& rhs) {
    std::vector<double> sol(nc);
    for (std::size_t ci = nc; ci-- > 0;) {
      double s = rhs[ci];
      for (std::size_t c = ci + 1; c < nc; ++c) s -= a[ci * nc + c] * sol[c];
      sol[ci] = s / a[ci * nc + ci];
    }
    return sol;
  };
  auto sol_re = solve(rhs_re);
  auto sol_im = solve(rhs_im);
  // p(0) is the constant term; the column scaling does not touch it.
  return {sol_re[0], sol_im[0]};
}

}  // namespace cauchybv
