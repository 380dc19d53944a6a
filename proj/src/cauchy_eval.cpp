#include "cauchybv/cauchy_eval.hpp"

#include <cmath>

#include "cauchybv/kernels.hpp"
#include "cauchybv/parallel.hpp"
#include "cauchybv/polyfit.hpp"

namespace cauchybv {

namespace {

// Quadrature weights f_j * s'(tau_j) in split layout; singular nodes carry
// weight zero (their principal-value completion contributes nothing).
struct CauchyWeights {
  std::vector<double> re, im;

  CauchyWeights(const CurveGrid& grid, const Density& f) {
    if (f.size() != grid.size())
      throw ConfigError("density/grid size mismatch");
    const int n = grid.size();
    re.resize(n);
    im.resize(n);
    for (int j = 0; j < n; ++j) {
      if (f.is_singular(j)) {
        re[j] = 0.0;
        im[j] = 0.0;
        continue;
      }
      Complex w = f.values[j] * grid.deriv(j);
      re[j] = w.real();
      im[j] = w.imag();
    }
  }
};

Complex raw_transform(const CurveGrid& grid, const CauchyWeights& w, Complex z) {
  auto sum = kernels::cauchy_sum(grid.pos_re(), grid.pos_im(), w.re.data(),
                                 w.im.data(), static_cast<std::size_t>(grid.size()),
                                 z.real(), z.imag(), kernels::no_skip);
  // h/(2 pi i) * sum; h = 2 pi / n collapses to 1/(i n).
  return sum.value() / Complex{0.0, static_cast<double>(grid.size())};
}

}  // namespace

void LimitSchedule::validate(const CurveGrid& grid) const {
  if (!(ratio > 0.0) || !(ratio < 1.0))
    throw ConfigError("schedule ratio must lie in (0, 1)");
  if (count < 3) throw ConfigError("schedule needs at least 3 offsets");
  if (extrapolation_degree < 0)
    throw ConfigError("extrapolation degree must be >= 0");
  if (count < extrapolation_degree + 1)
    throw ConfigError("schedule count must be at least extrapolation_degree + 1");
  if (!(min_eps_over_h > 0.0))
    throw ConfigError("schedule floor must be positive");
  double floor = min_eps_over_h * grid.step();
  double eps0r = resolved_eps0(grid);
  if (!(eps0r > 0.0)) throw ConfigError("schedule eps0 must be positive");
  double smallest = eps0r * std::pow(ratio, count - 1);
  if (smallest < floor * (1.0 - 1e-12))
    throw ConfigError(
        "schedule violates the quadrature floor: smallest offset " +
        std::to_string(smallest) + " < " + std::to_string(floor));
}

double LimitSchedule::resolved_eps0(const CurveGrid& grid) const {
  if (eps0 > 0.0) return eps0;
  // Smallest probe lands exactly on the floor.
  return min_eps_over_h * grid.step() / std::pow(ratio, count - 1);
}

std::vector<double> LimitSchedule::offsets(const CurveGrid& grid) const {
  validate(grid);
  std::vector<double> eps(count);
  double e = resolved_eps0(grid);
  for (int k = 0; k < count; ++k) {
    eps[k] = e;
    e *= ratio;
  }
  return eps;
}

OffCurveValue eval_offcurve(const CurveGrid& grid, const Density& f, Complex z,
                            double near_steps) {
  CauchyWeights w(grid, f);
  double dist = grid.min_node_distance(z);
  if (dist <= 1e-14 * (1.0 + std::abs(z)))
    throw ConfigError("evaluation point coincides with a grid node");
  OffCurveValue out;
  out.phi = raw_transform(grid, w, z);
  out.near_boundary = dist < near_steps * grid.step();
  return out;
}

std::vector<OffCurveValue> eval_offcurve_many(const CurveGrid& grid,
                                              const Density& f,
                                              std::span<const Complex> zs,
                                              int threads, double near_steps) {
  CauchyWeights w(grid, f);
  std::vector<OffCurveValue> out(zs.size());
  // Validate up front so worker threads never throw.
  for (Complex z : zs)
    if (grid.min_node_distance(z) <= 1e-14 * (1.0 + std::abs(z)))
      throw ConfigError("evaluation point coincides with a grid node");
  parallel_for(zs.size(), threads, [&](std::size_t i) {
    out[i].phi = raw_transform(grid, w, zs[i]);
    out[i].near_boundary =
        grid.min_node_distance(zs[i]) < near_steps * grid.step();
  });
  return out;
}

Complex winding_indicator(const CurveGrid& grid, Complex z) {
  Density one;
  one.values.assign(grid.size(), Complex{1.0, 0.0});
  return eval_offcurve(grid, one, z).phi;
}

Complex nontangential_limit(const CurveGrid& grid, const Density& f, int j,
                            Side side, const LimitSchedule& sched) {
  if (j < 0 || j >= grid.size()) throw ConfigError("node index out of range");
  if (f.is_singular(j))
    throw ConfigError("no one-sided limit at a singular node");
  auto eps = sched.offsets(grid);
  CauchyWeights w(grid, f);
  const Complex base = grid.pos(j);
  const Complex step_dir = (side == Side::interior ? -1.0 : 1.0) *
                           outward_normal(grid, j) * grid.speed(j);
  std::vector<Complex> probes(eps.size());
  for (std::size_t k = 0; k < eps.size(); ++k)
    probes[k] = raw_transform(grid, w, base + eps[k] * step_dir);
  return extrapolate_to_zero(eps, probes, sched.extrapolation_degree);
}

}  // namespace cauchybv
