#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "cauchybv/circle_spectral.hpp"
#include "cauchybv/singular.hpp"

using namespace cauchybv;

TEST_SUITE("circle_spectral") {

TEST_CASE("coefficients of sampled trigonometric polynomials") {
  CurveGrid g = make_curve(CurveParam::circle(), 64);
  std::map<int, Complex> coeffs{{0, {0.5, 0.0}}, {3, {1.0, -2.0}}, {-7, {0.0, 1.0}}};
  auto fd = fourier_from_samples(
      g, sample_density(DensitySpec::make_trig_poly(coeffs), g));
  for (int m = -32; m < 32; ++m) {
    Complex want = coeffs.count(m) ? coeffs[m] : Complex{0.0, 0.0};
    CHECK(std::abs(fd.coeff_for_mode(m) - want) <= 1e-13);
  }
  auto back = samples_from_fourier(fd);
  auto direct = sample_density(DensitySpec::make_trig_poly(coeffs), g);
  for (int j = 0; j < 64; ++j)
    CHECK(std::abs(back.values[j] - direct.values[j]) <= 1e-12);
}

TEST_CASE("multiplier action is exact on individual harmonics") {
  const int n = 64;
  CurveGrid g = make_curve(CurveParam::circle(), n);
  for (int mode = -16; mode <= 16; ++mode) {
    auto f = sample_density(
        DensitySpec::make_trig_poly({{mode, {1.0, 0.0}}}), g);
    auto bf = b0_apply(g, f);
    double sign = mode >= 0 ? 1.0 : -1.0;
    for (int j = 0; j < n; ++j)
      CHECK(std::abs(bf.values[j] - sign * f.values[j]) <= 1e-12);
  }
}

TEST_CASE("spectral and subtraction routes agree on band-limited densities") {
  std::mt19937 rng(555);
  CurveGrid g = make_curve(CurveParam::circle(), 64);
  auto f = sample_density(
      DensitySpec::make_trig_poly(oracle::random_trig(rng, 8)), g);
  auto spectral = b0_apply(g, f);
  auto subtraction = apply_B(g, f);
  for (int j = 0; j < g.size(); ++j)
    CHECK(std::abs(spectral.values[j] - subtraction.values[j]) <= 1e-8);
}

TEST_CASE("spectral route is circle-only") {
  CurveGrid e = make_curve(CurveParam::make_ellipse(2.0, 1.0), 32);
  auto f = sample_density(DensitySpec::make_power(1), e);
  CHECK_THROWS_AS(b0_apply(e, f), ConfigError);
}

TEST_CASE("sawtooth closed form checked against its own series") {
  // Partial sums of 2 cos(n tau)/n converge to -log(2 - 2 cos tau); the tail
  // after n terms is O(1/(n sin(tau/2))).
  for (double tau : {0.5, 2.0, pi, 4.0}) {
    double series = 0.0;
    const int terms = 200000;
    for (int n = terms; n >= 1; --n) series += 2.0 * std::cos(n * tau) / n;
    CHECK(std::abs(series - sawtooth_b0_closed_form(tau)) <= 2e-5);
  }
  CHECK(sawtooth_b0_closed_form(pi) ==
        doctest::Approx(-2.0 * std::log(2.0)).epsilon(1e-15));
}

TEST_CASE("sawtooth demo: bounded density, unbounded involution") {
  SawtoothReport rep = sawtooth_demo(256, 0.25);
  CHECK(rep.n == 256);
  CHECK(rep.sup_f <= pi);
  CHECK(rep.sup_f == doctest::Approx(pi - two_pi / 256).epsilon(1e-12));

  // Both routes track the closed form away from the jump.  Measured at this
  // N/exclusion: max 5.5e-3 / 1.4e-3, means 4.1e-4 / 1.3e-4, and pi-node
  // errors 5.0e-5 / 2.5e-5 (the pi/N^2 tail of the jump).
  CHECK(rep.max_err_spectral <= 1e-2);
  CHECK(rep.max_err_subtraction <= 3e-3);
  CHECK(rep.mean_err_spectral <= 8e-4);
  CHECK(rep.mean_err_subtraction <= 3e-4);
  CHECK(std::isfinite(rep.err_at_pi_spectral));
  CHECK(rep.err_at_pi_spectral <= 1e-4);
  CHECK(rep.err_at_pi_subtraction <= 1e-4);

  // The included supremum grows as the exclusion radius shrinks.
  for (std::size_t k = 1; k < rep.scan_radii.size(); ++k) {
    CHECK(rep.scan_max_spectral[k] > rep.scan_max_spectral[k - 1]);
    CHECK(rep.scan_max_subtraction[k] > rep.scan_max_subtraction[k - 1]);
  }
  // ... while the density itself stays bounded by pi.
  CHECK(rep.scan_max_spectral.back() > pi);

  // Row bookkeeping: the jump node is excluded and carries no finite errors.
  CHECK(rep.rows[0].excluded);
  CHECK(std::isnan(rep.rows[0].err_spectral));
  int excluded = 0;
  for (const auto& row : rep.rows) excluded += row.excluded ? 1 : 0;
  // Parameter radius 0.25 covers floor(0.25/h) nodes on each side plus the
  // jump node itself.
  int per_side = static_cast<int>(0.25 / rep.rows[1].tau);
  CHECK(excluded == 2 * per_side + 1);
}

TEST_CASE("subtraction route error shrinks with N at fixed exclusion") {
  double prev = 1e9;
  for (int n : {256, 512, 1024}) {
    SawtoothReport rep = sawtooth_demo(n, 0.25);
    CHECK(rep.max_err_subtraction < prev);
    prev = rep.max_err_subtraction;
  }
}

}  // TEST_SUITE
