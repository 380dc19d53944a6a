#include "cauchybv/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cauchybv {

namespace {

constexpr double nan_d = std::numeric_limits<double>::quiet_NaN();

bool finite(Complex v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

double wrap_to_period(double tau) {
  double t = std::fmod(tau, two_pi);
  if (t < 0.0) t += two_pi;
  return t;
}

// Signed periodic offset in (-pi, pi].
double wrap_centered(double u) {
  double t = std::fmod(u, two_pi);
  if (t <= -pi) t += two_pi;
  if (t > pi) t -= two_pi;
  return t;
}

}  // namespace

const char* density_kind_name(DensityKind k) {
  switch (k) {
    case DensityKind::constant: return "constant";
    case DensityKind::power: return "power";
    case DensityKind::pole: return "pole";
    case DensityKind::sawtooth: return "sawtooth";
    case DensityKind::sqrt_singular: return "sqrt_singular";
    case DensityKind::trig_poly: return "trig_poly";
    case DensityKind::samples: return "samples";
  }
  return "?";
}

DensitySpec DensitySpec::make_constant(Complex c) {
  DensitySpec s;
  s.kind = DensityKind::constant;
  s.c = c;
  return s;
}

DensitySpec DensitySpec::make_power(int n) {
  DensitySpec s;
  s.kind = DensityKind::power;
  s.n = n;
  return s;
}

DensitySpec DensitySpec::make_pole(Complex z0) {
  DensitySpec s;
  s.kind = DensityKind::pole;
  s.z0 = z0;
  return s;
}

DensitySpec DensitySpec::make_sawtooth() {
  DensitySpec s;
  s.kind = DensityKind::sawtooth;
  return s;
}

DensitySpec DensitySpec::make_sqrt_singular(double phi0) {
  DensitySpec s;
  s.kind = DensityKind::sqrt_singular;
  s.phi0 = wrap_to_period(phi0);
  return s;
}

DensitySpec DensitySpec::make_trig_poly(std::map<int, Complex> coeffs) {
  DensitySpec s;
  s.kind = DensityKind::trig_poly;
  s.coeffs = std::move(coeffs);
  return s;
}

DensitySpec DensitySpec::make_samples(std::vector<Complex> v) {
  DensitySpec s;
  s.kind = DensityKind::samples;
  s.samples = std::move(v);
  return s;
}

void DensitySpec::validate(const CurveParam& curve) const {
  if (circle_only() && curve.kind != CurveKind::unit_circle)
    throw ConfigError(std::string(density_kind_name(kind)) +
                      " density is defined on the unit circle only");
  if (kind == DensityKind::samples && samples.empty())
    throw ConfigError("samples density is empty");
}

Complex DensitySpec::value(const CurveParam& curve, double tau) const {
  switch (kind) {
    case DensityKind::constant:
      return c;
    case DensityKind::power:
      return ipow(curve.position(tau), n);
    case DensityKind::pole:
      return 1.0 / (curve.position(tau) - z0);
    case DensityKind::sawtooth: {
      double t = wrap_to_period(tau);
      if (t == 0.0) return {nan_d, nan_d};  // jump point, no pointwise value
      return {0.0, pi - t};
    }
    case DensityKind::sqrt_singular: {
      double u = wrap_centered(tau - phi0);
      if (u == 0.0) return {nan_d, nan_d};
      return {1.0 / std::sqrt(std::abs(u)), 0.0};
    }
    case DensityKind::trig_poly: {
      Complex acc = 0.0;
      for (const auto& [mode, cn] : coeffs)
        acc += cn * Complex{std::cos(mode * tau), std::sin(mode * tau)};
      return acc;
    }
    case DensityKind::samples:
      throw ConfigError("samples density has no closed form");
  }
  return {};
}

Complex DensitySpec::dtau(const CurveParam& curve, double tau) const {
  switch (kind) {
    case DensityKind::constant:
      return 0.0;
    case DensityKind::power:
      return static_cast<double>(n) * ipow(curve.position(tau), n - 1) *
             curve.derivative(tau);
    case DensityKind::pole: {
      Complex d = curve.position(tau) - z0;
      return -curve.derivative(tau) / (d * d);
    }
    case DensityKind::sawtooth:
      return {0.0, -1.0};
    case DensityKind::sqrt_singular: {
      double u = wrap_centered(tau - phi0);
      if (u == 0.0) return {nan_d, nan_d};
      double au = std::abs(u);
      return {-0.5 * std::copysign(1.0, u) / (au * std::sqrt(au)), 0.0};
    }
    case DensityKind::trig_poly: {
      Complex acc = 0.0;
      for (const auto& [mode, cn] : coeffs)
        acc += cn * Complex{0.0, static_cast<double>(mode)} *
               Complex{std::cos(mode * tau), std::sin(mode * tau)};
      return acc;
    }
    case DensityKind::samples:
      throw ConfigError("samples density has no closed form");
  }
  return {};
}

bool Density::is_singular(int j) const {
  return std::binary_search(singular_nodes.begin(), singular_nodes.end(), j);
}

Density Density::from_samples(std::vector<Complex> v) {
  Density d;
  d.spec = DensitySpec::make_samples(v);
  d.values = std::move(v);
  for (int j = 0; j < d.size(); ++j) {
    if (!finite(d.values[j])) {
      d.values[j] = {nan_d, nan_d};
      d.singular_nodes.push_back(j);
    }
  }
  return d;
}

Density sample_density(const DensitySpec& spec, const CurveGrid& grid) {
  spec.validate(grid.param());
  const int n = grid.size();
  Density d;
  d.spec = spec;
  d.values.resize(n);
  if (spec.kind == DensityKind::samples) {
    const auto& v = spec.samples;
    const int ns = static_cast<int>(v.size());
    if (ns != n && (ns < n || ns % n != 0))
      throw ConfigError("samples length " + std::to_string(ns) +
                        " does not match grid size " + std::to_string(n) +
                        " (and is not an integer multiple of it)");
    const int stride = ns / n;
    for (int j = 0; j < n; ++j) d.values[j] = v[j * stride];
  } else {
    for (int j = 0; j < n; ++j)
      d.values[j] = spec.value(grid.param(), grid.tau(j));
  }
  for (int j = 0; j < n; ++j) {
    if (!finite(d.values[j])) {
      d.values[j] = {nan_d, nan_d};
      d.singular_nodes.push_back(j);
    }
  }
  return d;
}

double density_norm_l1(const Density& f, const CurveGrid& grid) {
  if (f.size() != grid.size())
    throw ConfigError("density/grid size mismatch");
  double acc = 0.0;
  for (int j = 0; j < grid.size(); ++j) {
    if (f.is_singular(j)) continue;
    acc += std::abs(f.values[j]) * grid.speed(j);
  }
  return grid.step() * acc;
}

}  // namespace cauchybv
