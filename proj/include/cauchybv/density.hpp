#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cauchybv/geometry.hpp"

namespace cauchybv {

enum class DensityKind {
  constant,       // f = c
  power,          // f = s^n, n may be negative
  pole,           // f = 1/(s - z0)
  sawtooth,       // f(tau) = i*(pi - tau) on (0, 2pi); circle only
  sqrt_singular,  // f(tau) = |tau - phi0|^(-1/2) (periodic distance); circle only
  trig_poly,      // f(tau) = sum_n c_n e^{i n tau}
  samples,        // grid samples, no closed form
};

const char* density_kind_name(DensityKind k);

// Closed-form description of a boundary density.
struct DensitySpec {
  DensityKind kind = DensityKind::constant;
  Complex c = 1.0;                 // constant
  int n = 0;                       // power
  Complex z0;                      // pole
  double phi0 = 0.0;               // sqrt_singular
  std::map<int, Complex> coeffs;   // trig_poly, mode -> coefficient
  std::vector<Complex> samples;    // samples

  static DensitySpec make_constant(Complex c);
  static DensitySpec make_power(int n);
  static DensitySpec make_pole(Complex z0);
  static DensitySpec make_sawtooth();
  static DensitySpec make_sqrt_singular(double phi0);
  static DensitySpec make_trig_poly(std::map<int, Complex> coeffs);
  static DensitySpec make_samples(std::vector<Complex> v);

  bool has_closed_form() const { return kind != DensityKind::samples; }
  bool circle_only() const {
    return kind == DensityKind::sawtooth || kind == DensityKind::sqrt_singular;
  }
  void validate(const CurveParam& curve) const;  // throws ConfigError

  // f at parameter tau on the given curve; requires a closed form.
  Complex value(const CurveParam& curve, double tau) const;
  // d/dtau of f(s(tau)); requires a closed form.
  Complex dtau(const CurveParam& curve, double tau) const;
};

// A density realized on a grid.  Nodes where the closed form has no finite
// value are listed in singular_nodes and hold NaN; quadratures and norms
// skip them.
struct Density {
  std::vector<Complex> values;
  std::optional<DensitySpec> spec;
  std::vector<int> singular_nodes;  // sorted, ascending

  int size() const { return static_cast<int>(values.size()); }
  bool is_singular(int j) const;
  bool all_finite() const { return singular_nodes.empty(); }

  static Density from_samples(std::vector<Complex> v);
};

// Evaluates the spec at the grid nodes.  samples specs must either match the
// grid size exactly or be an integer decimation of it (stride n_samples/n).
Density sample_density(const DensitySpec& spec, const CurveGrid& grid);

// Arc-length L1 norm h * sum |f_j| |s'(tau_j)|, skipping singular nodes.
double density_norm_l1(const Density& f, const CurveGrid& grid);

}  // namespace cauchybv
