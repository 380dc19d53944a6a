#pragma once

#include <vector>

#include "cauchybv/cauchy_eval.hpp"
#include "cauchybv/density.hpp"
#include "cauchybv/geometry.hpp"

namespace cauchybv {

// One grid node of a jump verification: both one-sided limits, the on-curve
// principal-value trace, and the residuals of the four boundary relations
//   phi_plus - phi_minus = f            (r_jump)
//   phi_plus  = phi_t + f/2             (r_plus)
//   phi_minus = phi_t - f/2             (r_minus)
//   (phi_plus + phi_minus)/2 = phi_t    (r_avg)
struct JumpNode {
  int j = 0;
  double tau = 0.0;
  Complex f;
  Complex phi_plus;
  Complex phi_minus;
  Complex phi_t;
  double r_jump = 0.0;
  double r_plus = 0.0;
  double r_minus = 0.0;
  double r_avg = 0.0;
  bool skipped = false;
};

struct JumpAggregates {
  double max_r_jump = 0.0, mean_r_jump = 0.0;
  double max_r_plus = 0.0, mean_r_plus = 0.0;
  double max_r_minus = 0.0, mean_r_minus = 0.0;
  double max_r_avg = 0.0, mean_r_avg = 0.0;
  int retained = 0;
  int skipped = 0;
};

struct JumpReport {
  int grid_n = 0;
  std::vector<JumpNode> nodes;
  JumpAggregates agg;
};

// Verifies the jump relations at every node.  Singular nodes, and nodes
// within exclusion_mult grid steps of one (parameter distance), are skipped
// from the statistics — the relations hold almost everywhere, not at the
// singular points themselves.
JumpReport jump_report(const CurveGrid& grid, const Density& f,
                       const LimitSchedule& sched, double exclusion_mult = 3.0,
                       int threads = 1);

// The subtracted transform psi_off(z) = integral of (f(s) - f(t_j))/(s - z)
// is continuous across the curve at t_j.  This returns the larger of
// |psi_off -> t_j (from inside) - psi(t_j)| and the same from outside, each
// limit taken with the given schedule.
double pv_continuity_defect(const CurveGrid& grid, const Density& f, int j,
                            const LimitSchedule& sched);

// Residual of the exterior-limit identity in its integral scaling:
// |2 pi i (phi_minus(t_j) - phi_t(t_j)) + i pi f_j|.
double plemelj_minus_residual(const CurveGrid& grid, const Density& f, int j,
                              const LimitSchedule& sched);

enum class Membership { interior, exterior, neither, inconclusive };

const char* membership_name(Membership m);

struct MembershipVerdict {
  Membership decision = Membership::inconclusive;
  std::vector<int> grids;
  std::vector<double> residual_interior;  // ||f - Bf||_1 / ||f||_1 per grid
  std::vector<double> residual_exterior;  // ||f + Bf||_1 / ||f||_1 per grid
  double threshold = 0.0;
};

// Classifies a density as the boundary trace of a function analytic inside
// (f = Bf), outside with decay at infinity (f = -Bf), or neither, by how the
// two fixed-point residuals behave under grid refinement:
//   interior / exterior: residuals decrease with N and the finest is within
//     the threshold;
//   neither: both residuals stay at least 10x the threshold without
//     decreasing;
//   anything else: inconclusive.
MembershipVerdict classify_boundary(const CurveParam& param,
                                    const DensitySpec& spec,
                                    const std::vector<int>& grids,
                                    double threshold, int threads = 1);

}  // namespace cauchybv
