#include "cauchybv/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "cauchybv/kernels.hpp"
#include "cauchybv/parallel.hpp"
#include "cauchybv/polyfit.hpp"
#include "cauchybv/singular.hpp"

namespace cauchybv {

namespace {

// Periodic index distance between nodes a and b on an n-grid.
int index_distance(int a, int b, int n) {
  int d = std::abs(a - b);
  return std::min(d, n - d);
}

std::vector<bool> skip_mask(const CurveGrid& grid, const Density& f,
                            double exclusion_mult) {
  const int n = grid.size();
  std::vector<bool> skip(n, false);
  for (int js : f.singular_nodes)
    for (int j = 0; j < n; ++j)
      if (index_distance(j, js, n) <= exclusion_mult) skip[j] = true;
  return skip;
}

}  // namespace

JumpReport jump_report(const CurveGrid& grid, const Density& f,
                       const LimitSchedule& sched, double exclusion_mult,
                       int threads) {
  sched.validate(grid);
  const int n = grid.size();
  PVTrace trace = phi_on_curve(grid, f, threads);
  std::vector<bool> skip = skip_mask(grid, f, exclusion_mult);

  JumpReport rep;
  rep.grid_n = n;
  rep.nodes.resize(n);
  parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t ju) {
    int j = static_cast<int>(ju);
    JumpNode& node = rep.nodes[ju];
    node.j = j;
    node.tau = grid.tau(j);
    node.f = f.values[j];
    node.phi_t = trace.phi_t[ju];
    node.skipped = skip[j];
    if (node.skipped) {
      double nan_d = std::nan("");
      node.phi_plus = node.phi_minus = {nan_d, nan_d};
      node.r_jump = node.r_plus = node.r_minus = node.r_avg = nan_d;
      return;
    }
    node.phi_plus = nontangential_limit(grid, f, j, Side::interior, sched);
    node.phi_minus = nontangential_limit(grid, f, j, Side::exterior, sched);
    node.r_jump = std::abs(node.phi_plus - node.phi_minus - node.f);
    node.r_plus = std::abs(node.phi_plus - (node.phi_t + 0.5 * node.f));
    node.r_minus = std::abs(node.phi_minus - (node.phi_t - 0.5 * node.f));
    node.r_avg = std::abs(0.5 * (node.phi_plus + node.phi_minus) - node.phi_t);
  });

  JumpAggregates& agg = rep.agg;
  for (const JumpNode& node : rep.nodes) {
    if (node.skipped) {
      ++agg.skipped;
      continue;
    }
    ++agg.retained;
    agg.max_r_jump = std::max(agg.max_r_jump, node.r_jump);
    agg.max_r_plus = std::max(agg.max_r_plus, node.r_plus);
    agg.max_r_minus = std::max(agg.max_r_minus, node.r_minus);
    agg.max_r_avg = std::max(agg.max_r_avg, node.r_avg);
    agg.mean_r_jump += node.r_jump;
    agg.mean_r_plus += node.r_plus;
    agg.mean_r_minus += node.r_minus;
    agg.mean_r_avg += node.r_avg;
  }
  if (agg.retained > 0) {
    agg.mean_r_jump /= agg.retained;
    agg.mean_r_plus /= agg.retained;
    agg.mean_r_minus /= agg.retained;
    agg.mean_r_avg /= agg.retained;
  }
  return rep;
}

double pv_continuity_defect(const CurveGrid& grid, const Density& f, int j,
                            const LimitSchedule& sched) {
  if (j < 0 || j >= grid.size()) throw ConfigError("node index out of range");
  if (f.is_singular(j))
    throw ConfigError("principal value undefined at a singular node");
  auto eps = sched.offsets(grid);
  const int n = grid.size();

  // Weights of the subtracted integrand (f - f_j) s'; singular nodes carry
  // the density value 0, matching the on-curve evaluator.
  std::vector<double> wre(n), wim(n);
  const Complex fj = f.values[j];
  for (int k = 0; k < n; ++k) {
    Complex fk = f.is_singular(k) ? Complex{0.0, 0.0} : f.values[k];
    Complex w = (fk - fj) * grid.deriv(k);
    wre[k] = w.real();
    wim[k] = w.imag();
  }
  auto psi_off = [&](Complex z) {
    auto sum = kernels::cauchy_sum(grid.pos_re(), grid.pos_im(), wre.data(),
                                   wim.data(), static_cast<std::size_t>(n),
                                   z.real(), z.imag(), kernels::no_skip);
    return sum.value() / Complex{0.0, static_cast<double>(n)};
  };

  const Complex base = grid.pos(j);
  const Complex dir = outward_normal(grid, j) * grid.speed(j);
  std::vector<Complex> inside(eps.size()), outside(eps.size());
  for (std::size_t k = 0; k < eps.size(); ++k) {
    inside[k] = psi_off(base - eps[k] * dir);
    outside[k] = psi_off(base + eps[k] * dir);
  }
  Complex psi_in = extrapolate_to_zero(eps, inside, sched.extrapolation_degree);
  Complex psi_out = extrapolate_to_zero(eps, outside, sched.extrapolation_degree);
  Complex psi_on = psi_at(grid, f, j);
  return std::max(std::abs(psi_in - psi_on), std::abs(psi_out - psi_on));
}

double plemelj_minus_residual(const CurveGrid& grid, const Density& f, int j,
                              const LimitSchedule& sched) {
  if (j < 0 || j >= grid.size()) throw ConfigError("node index out of range");
  if (f.is_singular(j))
    throw ConfigError("residual undefined at a singular node");
  Complex phi_minus = nontangential_limit(grid, f, j, Side::exterior, sched);
  Complex phi_t = 0.5 * f.values[j] + psi_at(grid, f, j);
  Complex two_pi_i{0.0, two_pi};
  Complex i_pi{0.0, pi};
  return std::abs(two_pi_i * (phi_minus - phi_t) + i_pi * f.values[j]);
}

const char* membership_name(Membership m) {
  switch (m) {
    case Membership::interior: return "interior";
    case Membership::exterior: return "exterior";
    case Membership::neither: return "neither";
    case Membership::inconclusive: return "inconclusive";
  }
  return "?";
}

MembershipVerdict classify_boundary(const CurveParam& param,
                                    const DensitySpec& spec,
                                    const std::vector<int>& grids,
                                    double threshold, int threads) {
  if (grids.size() < 2)
    throw ConfigError("classification needs at least two grid sizes");
  for (std::size_t k = 1; k < grids.size(); ++k)
    if (grids[k] <= grids[k - 1])
      throw ConfigError("grid sizes must be strictly increasing");
  if (!(threshold > 0.0) || !(threshold < 0.5))
    throw ConfigError("classification threshold must lie in (0, 0.5)");

  MembershipVerdict verdict;
  verdict.grids = grids;
  verdict.threshold = threshold;
  for (int n : grids) {
    CurveGrid grid = make_curve(param, n);
    Density f = sample_density(spec, grid);
    double norm = density_norm_l1(f, grid);
    if (!(norm > 0.0))
      throw ConfigError("cannot classify a density with zero norm");
    Density bf = apply_B(grid, f, threads);
    Density diff_int, diff_ext;
    diff_int.values.resize(n);
    diff_ext.values.resize(n);
    diff_int.singular_nodes = f.singular_nodes;
    diff_ext.singular_nodes = f.singular_nodes;
    for (int j = 0; j < n; ++j) {
      diff_int.values[j] = f.values[j] - bf.values[j];
      diff_ext.values[j] = f.values[j] + bf.values[j];
    }
    verdict.residual_interior.push_back(density_norm_l1(diff_int, grid) / norm);
    verdict.residual_exterior.push_back(density_norm_l1(diff_ext, grid) / norm);
  }

  // Decreasing toward the threshold: each step either shrinks or is already
  // below it (round-off plateaus count as converged).
  auto settles = [&](const std::vector<double>& r) {
    for (std::size_t k = 0; k + 1 < r.size(); ++k)
      if (!(r[k + 1] <= r[k] || r[k + 1] <= threshold)) return false;
    return r.back() <= threshold;
  };
  // Stays up under refinement: well clear of the threshold and not decaying
  // materially (a residual that halves over the whole refinement run is
  // heading somewhere; quadrature drift of a genuinely stuck residual is a
  // few h^2 at most).
  auto saturates = [&](const std::vector<double>& r) {
    return r.back() >= 10.0 * threshold && r.back() >= 0.5 * r.front();
  };

  const auto& ri = verdict.residual_interior;
  const auto& re = verdict.residual_exterior;
  bool is_int = settles(ri);
  bool is_ext = settles(re);
  if (is_int && !is_ext)
    verdict.decision = Membership::interior;
  else if (is_ext && !is_int)
    verdict.decision = Membership::exterior;
  else if (!is_int && !is_ext && saturates(ri) && saturates(re))
    verdict.decision = Membership::neither;
  else
    verdict.decision = Membership::inconclusive;
  return verdict;
}

}  // namespace cauchybv
