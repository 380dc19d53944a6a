#include <cmath>

#include "doctest.h"

#include "cauchybv/density.hpp"
#include "cauchybv/geometry.hpp"

using namespace cauchybv;

TEST_SUITE("density") {

TEST_CASE("closed forms evaluate as written") {
  CurveGrid g = make_curve(CurveParam::circle(), 32);
  auto power = sample_density(DensitySpec::make_power(3), g);
  auto pole = sample_density(DensitySpec::make_pole({2.0, 0.0}), g);
  auto trig = sample_density(
      DensitySpec::make_trig_poly({{1, {1.0, 0.0}}, {-2, {0.0, 1.0}}}), g);
  for (int j : {0, 5, 17, 31}) {
    Complex s = g.pos(j);
    CHECK(std::abs(power.values[j] - s * s * s) <= 1e-14);
    CHECK(std::abs(pole.values[j] - 1.0 / (s - 2.0)) <= 1e-14);
    Complex e1{std::cos(g.tau(j)), std::sin(g.tau(j))};
    Complex want = e1 + Complex{0.0, 1.0} / (e1 * e1);
    CHECK(std::abs(trig.values[j] - want) <= 1e-13);
  }
}

TEST_CASE("negative powers and interior poles stay finite on the curve") {
  CurveGrid g = make_curve(CurveParam::make_kite(), 64);
  auto inv = sample_density(DensitySpec::make_power(-2), g);
  CHECK(inv.all_finite());
  auto p = sample_density(DensitySpec::make_pole({0.2, 0.1}), g);
  CHECK(p.all_finite());
}

TEST_CASE("sawtooth: jump node is singular, the rest is i(pi - tau)") {
  CurveGrid g = make_curve(CurveParam::circle(), 128);
  auto f = sample_density(DensitySpec::make_sawtooth(), g);
  REQUIRE(f.singular_nodes == std::vector<int>{0});
  CHECK(std::isnan(f.values[0].real()));
  for (int j = 1; j < g.size(); ++j) {
    CHECK(f.values[j].real() == 0.0);
    CHECK(f.values[j].imag() == doctest::Approx(pi - g.tau(j)).epsilon(1e-15));
  }
}

TEST_CASE("sawtooth L1 norm converges to pi^2 at rate 1/N") {
  // Skipping the singular node removes a strip of mass 2 pi^2 / N from the
  // exact trapezoid value pi^2.
  DensitySpec spec = DensitySpec::make_sawtooth();
  double prev_gap = 1e9;
  for (int n : {256, 512, 1024, 2048}) {
    CurveGrid g = make_curve(CurveParam::circle(), n);
    double norm = density_norm_l1(sample_density(spec, g), g);
    double gap = pi * pi - norm;
    CHECK(gap == doctest::Approx(2.0 * pi * pi / n).epsilon(1e-10));
    CHECK(gap < prev_gap);
    prev_gap = gap;
  }
}

TEST_CASE("sqrt singularity: only an exact node hit is singular") {
  CurveGrid g = make_curve(CurveParam::circle(), 64);
  auto off_node = sample_density(DensitySpec::make_sqrt_singular(1.0), g);
  CHECK(off_node.all_finite());
  auto on_node = sample_density(DensitySpec::make_sqrt_singular(g.tau(16)), g);
  REQUIRE(on_node.singular_nodes == std::vector<int>{16});
  // Periodic distance: value a quarter turn away is (pi/2)^(-1/2).
  CHECK(on_node.values[32].real() ==
        doctest::Approx(1.0 / std::sqrt(pi / 2)).epsilon(1e-13));
}

TEST_CASE("circle-only densities reject other curves") {
  CurveGrid g = make_curve(CurveParam::make_ellipse(2.0, 1.0), 32);
  CHECK_THROWS_AS(sample_density(DensitySpec::make_sawtooth(), g), ConfigError);
  CHECK_THROWS_AS(sample_density(DensitySpec::make_sqrt_singular(1.0), g),
                  ConfigError);
}

TEST_CASE("parameter derivatives match central differences") {
  CurveParam circle = CurveParam::circle();
  CurveParam kite = CurveParam::make_kite();
  const double d = 1e-6;
  auto check_dtau = [&](const DensitySpec& spec, const CurveParam& p, double tau) {
    Complex num = (spec.value(p, tau + d) - spec.value(p, tau - d)) / (2 * d);
    CHECK(std::abs(num - spec.dtau(p, tau)) <= 2e-6 * (1.0 + std::abs(num)));
  };
  for (double tau : {0.4, 1.9, 3.3, 5.8}) {
    check_dtau(DensitySpec::make_power(3), kite, tau);
    check_dtau(DensitySpec::make_power(-1), circle, tau);
    check_dtau(DensitySpec::make_pole({2.0, 0.5}), kite, tau);
    check_dtau(DensitySpec::make_sawtooth(), circle, tau);
    check_dtau(DensitySpec::make_sqrt_singular(0.1), circle, tau);
    check_dtau(DensitySpec::make_trig_poly({{3, {1.0, 0.0}}, {-1, {0.5, 0.5}}}),
               circle, tau);
  }
}

TEST_CASE("samples: exact size or integer decimation") {
  CurveGrid fine = make_curve(CurveParam::circle(), 128);
  CurveGrid coarse = make_curve(CurveParam::circle(), 32);
  DensitySpec closed = DensitySpec::make_power(2);
  auto fine_vals = sample_density(closed, fine).values;
  DensitySpec spec = DensitySpec::make_samples(fine_vals);

  auto exact = sample_density(spec, fine);
  CHECK(exact.values == fine_vals);

  // Grids nest bit-exactly, so decimation equals direct coarse sampling.
  auto decimated = sample_density(spec, coarse);
  auto direct = sample_density(closed, coarse);
  REQUIRE(decimated.size() == 32);
  for (int j = 0; j < 32; ++j) CHECK(decimated.values[j] == direct.values[j]);

  CurveGrid odd = make_curve(CurveParam::circle(), 48);
  CHECK_THROWS_AS(sample_density(spec, odd), ConfigError);  // 128 % 48 != 0
  CHECK_THROWS_AS(sample_density(spec, make_curve(CurveParam::circle(), 256)),
                  ConfigError);
}

TEST_CASE("norms skip singular nodes and weight by arc length") {
  CurveGrid g = make_curve(CurveParam::make_ellipse(2.0, 1.0), 512);
  auto one = sample_density(DensitySpec::make_constant({1.0, 0.0}), g);
  // Circumference of the 2x1 ellipse via complete elliptic integral value.
  CHECK(density_norm_l1(one, g) == doctest::Approx(9.688448220547675).epsilon(1e-10));
}

}  // TEST_SUITE
