#pragma once

#include <vector>

#include "cauchybv/density.hpp"
#include "cauchybv/geometry.hpp"

namespace cauchybv {

enum class TraceScheme { subtraction, circle_multiplier };

// On-curve trace of the Cauchy transform, phi_t = f/2 + psi, together with
// the principal-value part psi.  Entries at unset_nodes (singular points of
// the density) hold NaN.
struct PVTrace {
  std::vector<Complex> phi_t;
  std::vector<Complex> psi_t;
  TraceScheme scheme = TraceScheme::subtraction;
  int grid_n = 0;
  std::vector<int> unset_nodes;
};

// Principal value psi(t_j) = (1/2 pi i) * pv-integral of f(s)/(s - t_j) ds,
// computed by singularity subtraction: the integrand (f(s) - f(t_j))/(s - t_j)
// is smooth, its diagonal entry being the parameter derivative of f(s(tau)).
// The derivative comes from the closed form when the density has one, else
// from DFT differentiation of the samples.
// Requires a non-singular node j.
Complex psi_at(const CurveGrid& grid, const Density& f, int j);

// psi and phi_t = f/2 + psi at every node (phi_t is assembled from the same
// psi values, never recomputed).  Nodes are independent, so the thread count
// does not change the result.
PVTrace phi_on_curve(const CurveGrid& grid, const Density& f, int threads = 1);

// The singular involution (Bf)(t) = (1/ i pi) * pv-integral of f(s)/(s-t) ds
// = f(t) + 2 psi(t).  B*B = identity on traces of functions analytic on one
// side; the sign of the fixed point discriminates the side.
Density apply_B(const CurveGrid& grid, const Density& f, int threads = 1);

// Antisymmetry defect |<phi, Bf> + <B phi, f>| under the discrete bilinear
// pairing <u, v> = h * sum u_j v_j s'(tau_j).  phi must be smooth on the
// grid (constant or trig_poly spec); singular nodes of f are skipped and
// reported through skipped_nodes when non-null.
double duality_defect(const CurveGrid& grid, const Density& f,
                      const Density& phi, int* skipped_nodes = nullptr);

// Dense matrix of the discrete involution acting on grid samples, row-major
// n x n: column k is apply_B of the unit impulse at node k.  Reflects the
// grid-sampled action (DFT derivative on the diagonal).
std::vector<Complex> b_operator_matrix(const CurveGrid& grid, int threads = 1);

}  // namespace cauchybv
