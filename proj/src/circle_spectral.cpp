#include "cauchybv/circle_spectral.hpp"

#include <cmath>
#include <limits>

#include "cauchybv/dft.hpp"
#include "cauchybv/singular.hpp"

namespace cauchybv {

namespace {

constexpr double nan_d = std::numeric_limits<double>::quiet_NaN();

void require_circle(const CurveGrid& grid) {
  if (grid.param().kind != CurveKind::unit_circle)
    throw ConfigError("spectral route is defined on the unit circle only");
}

// Periodic distance to tau = 0.
double dist_to_jump(double tau) { return std::min(tau, two_pi - tau); }

}  // namespace

int FourierDensity::mode(int k) const { return dft_mode(k, n); }

Complex FourierDensity::coeff_for_mode(int m) const {
  int k = m >= 0 ? m : m + n;
  if (m >= (n + 1) / 2 || m < -(n / 2)) return 0.0;
  return coeffs[k];
}

FourierDensity fourier_from_samples(const CurveGrid& grid, const Density& f) {
  require_circle(grid);
  if (f.size() != grid.size())
    throw ConfigError("density/grid size mismatch");
  std::vector<Complex> v = f.values;
  for (int j : f.singular_nodes) v[j] = 0.0;
  FourierDensity fd;
  fd.n = grid.size();
  fd.coeffs = dft_forward(v);
  return fd;
}

Density samples_from_fourier(const FourierDensity& fd) {
  Density d;
  d.values = dft_inverse(fd.coeffs);
  return d;
}

FourierDensity b0_multiplier(const FourierDensity& fd) {
  FourierDensity out = fd;
  for (int k = 0; k < out.n; ++k)
    if (out.mode(k) < 0) out.coeffs[k] = -out.coeffs[k];
  return out;
}

Density b0_apply(const CurveGrid& grid, const Density& f) {
  Density out = samples_from_fourier(b0_multiplier(fourier_from_samples(grid, f)));
  out.singular_nodes = f.singular_nodes;
  for (int j : out.singular_nodes) out.values[j] = {nan_d, nan_d};
  return out;
}

double sawtooth_b0_closed_form(double tau) {
  return -std::log(2.0 - 2.0 * std::cos(tau));
}

SawtoothReport sawtooth_demo(int n, double exclusion_radius, int threads) {
  CurveGrid grid = make_curve(CurveParam::circle(), n);
  Density f = sample_density(DensitySpec::make_sawtooth(), grid);
  Density spectral = b0_apply(grid, f);
  Density subtraction = apply_B(grid, f, threads);

  SawtoothReport rep;
  rep.n = n;
  rep.exclusion_radius = exclusion_radius;
  rep.rows.resize(n);

  double sum_sp = 0.0, sum_su = 0.0;
  int included = 0;
  for (int j = 0; j < n; ++j) {
    SawtoothRow& row = rep.rows[j];
    row.tau = grid.tau(j);
    row.f = f.values[j];
    row.b0_spectral = spectral.values[j];
    row.b0_subtraction = subtraction.values[j];
    bool singular = f.is_singular(j);
    row.closed_form = singular ? nan_d : sawtooth_b0_closed_form(row.tau);
    row.excluded = singular || dist_to_jump(row.tau) < exclusion_radius;
    if (!singular) {
      row.err_spectral = std::abs(row.b0_spectral - row.closed_form);
      row.err_subtraction = std::abs(row.b0_subtraction - row.closed_form);
      rep.sup_f = std::max(rep.sup_f, std::abs(row.f));
    } else {
      row.err_spectral = nan_d;
      row.err_subtraction = nan_d;
    }
    if (row.excluded) continue;
    ++included;
    sum_sp += row.err_spectral;
    sum_su += row.err_subtraction;
    rep.max_err_spectral = std::max(rep.max_err_spectral, row.err_spectral);
    rep.max_err_subtraction =
        std::max(rep.max_err_subtraction, row.err_subtraction);
    rep.max_abs_spectral =
        std::max(rep.max_abs_spectral, std::abs(row.b0_spectral));
    rep.max_abs_subtraction =
        std::max(rep.max_abs_subtraction, std::abs(row.b0_subtraction));
  }
  if (included > 0) {
    rep.mean_err_spectral = sum_sp / included;
    rep.mean_err_subtraction = sum_su / included;
  }

  int mid = n / 2;  // tau = pi
  rep.err_at_pi_spectral = rep.rows[mid].err_spectral;
  rep.err_at_pi_subtraction = rep.rows[mid].err_subtraction;

  rep.scan_radii = {0.5, 0.25, 0.1, 0.05};
  for (double r : rep.scan_radii) {
    double msp = 0.0, msu = 0.0;
    for (int j = 0; j < n; ++j) {
      const SawtoothRow& row = rep.rows[j];
      if (f.is_singular(j) || dist_to_jump(row.tau) < r) continue;
      msp = std::max(msp, std::abs(row.b0_spectral));
      msu = std::max(msu, std::abs(row.b0_subtraction));
    }
    rep.scan_max_spectral.push_back(msp);
    rep.scan_max_subtraction.push_back(msu);
  }
  return rep;
}

}  // namespace cauchybv
