#pragma once

#include <span>
#include <vector>

#include "cauchybv/density.hpp"
#include "cauchybv/geometry.hpp"

namespace cauchybv {

// Geometric ladder of approach offsets for one-sided boundary limits.
// Offsets are measured in the curve parameter; the physical distance at node
// j is eps_k * |s'(tau_j)|, which keeps the quadrature error of the closest
// probe uniform along non-circular curves.
struct LimitSchedule {
  double eps0 = 0.0;        // largest offset; <= 0 means "derive from floor"
  double ratio = 0.9;       // geometric decay, in (0, 1)
  int count = 8;            // number of probes
  double min_eps_over_h = 5.0;  // closest probe stays >= this many grid steps
  int extrapolation_degree = 5;

  void validate(const CurveGrid& grid) const;  // throws ConfigError
  double resolved_eps0(const CurveGrid& grid) const;
  // Descending offsets eps0 * ratio^k, k = 0..count-1, after validation.
  std::vector<double> offsets(const CurveGrid& grid) const;
};

struct OffCurveValue {
  Complex phi;
  // Set when z sits closer to the grid than the quadrature can resolve
  // (node distance under min_eps_over_h grid steps); the value is returned
  // anyway but its accuracy degrades exponentially with proximity.
  bool near_boundary = false;
};

inline constexpr double default_near_boundary_steps = 5.0;

// Cauchy transform (1/(2 pi i)) * integral of f(s)/(s - z) ds over the
// curve, evaluated at an off-curve point by the periodic trapezoid rule.
// Throws ConfigError if z coincides with a grid node.
OffCurveValue eval_offcurve(const CurveGrid& grid, const Density& f, Complex z,
                            double near_steps = default_near_boundary_steps);

// Batch version; points are independent, so results do not depend on the
// thread count.
std::vector<OffCurveValue> eval_offcurve_many(const CurveGrid& grid,
                                              const Density& f,
                                              std::span<const Complex> zs,
                                              int threads = 1,
                                              double near_steps = default_near_boundary_steps);

// Transform of the unit density: 1 inside, 0 outside (1/2 on the curve in
// the principal-value sense).  Deviation from {0, 1} measures quadrature
// quality at z.
Complex winding_indicator(const CurveGrid& grid, Complex z);

enum class Side { interior, exterior };

// One-sided limit of the Cauchy transform at node j: evaluates along the
// inward (or outward) normal at the schedule offsets and extrapolates the
// polynomial fit to offset zero.
Complex nontangential_limit(const CurveGrid& grid, const Density& f, int j,
                            Side side, const LimitSchedule& sched);

}  // namespace cauchybv
