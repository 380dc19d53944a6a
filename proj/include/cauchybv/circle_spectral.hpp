#pragma once

#include <vector>

#include "cauchybv/density.hpp"
#include "cauchybv/geometry.hpp"

namespace cauchybv {

// Trigonometric coefficients of a grid density on the unit circle, stored in
// DFT slot order (slot k holds mode k for k < N/2, mode k - N above; for
// even N the lone Nyquist slot is taken as mode -N/2).
struct FourierDensity {
  int n = 0;
  std::vector<Complex> coeffs;

  int mode(int k) const;
  Complex coeff_for_mode(int m) const;  // zero when |m| out of range
};

FourierDensity fourier_from_samples(const CurveGrid& grid, const Density& f);
Density samples_from_fourier(const FourierDensity& fd);

// The involution acts diagonally on circle harmonics: coefficient of mode n
// is multiplied by +1 for n >= 0 and -1 for n < 0.
FourierDensity b0_multiplier(const FourierDensity& fd);

// Spectral route for the involution on the unit circle: DFT, sign flip on
// the negative modes, inverse DFT.  Singular nodes of f enter the transform
// as zero and stay marked singular in the result.
Density b0_apply(const CurveGrid& grid, const Density& f);

// Involution of the sawtooth density i*(pi - tau): the closed form
// -log(2 - 2 cos tau), i.e. the real series sum 2 cos(n tau)/n.
double sawtooth_b0_closed_form(double tau);

struct SawtoothRow {
  double tau = 0.0;
  Complex f;
  Complex b0_spectral;
  Complex b0_subtraction;
  double closed_form = 0.0;
  double err_spectral = 0.0;
  double err_subtraction = 0.0;
  bool excluded = false;
};

// Side-by-side comparison of the spectral and subtraction routes on the
// sawtooth density, whose involution is unbounded at tau = 0.  Nodes within
// exclusion_radius (parameter distance) of the jump are excluded from the
// error statistics; the scan_* fields record how the included supremum grows
// as that radius shrinks.
struct SawtoothReport {
  int n = 0;
  double exclusion_radius = 0.0;
  std::vector<SawtoothRow> rows;
  double max_err_spectral = 0.0;
  double mean_err_spectral = 0.0;
  double max_err_subtraction = 0.0;
  double mean_err_subtraction = 0.0;
  double err_at_pi_spectral = 0.0;
  double err_at_pi_subtraction = 0.0;
  double max_abs_spectral = 0.0;
  double max_abs_subtraction = 0.0;
  double sup_f = 0.0;
  std::vector<double> scan_radii;
  std::vector<double> scan_max_spectral;
  std::vector<double> scan_max_subtraction;
};

SawtoothReport sawtooth_demo(int n, double exclusion_radius, int threads = 1);

}  // namespace cauchybv
