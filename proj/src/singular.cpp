#include "cauchybv/singular.hpp"

#include <cmath>
#include <limits>

#include "cauchybv/dft.hpp"
#include "cauchybv/kernels.hpp"
#include "cauchybv/parallel.hpp"

namespace cauchybv {

namespace {

constexpr double nan_d = std::numeric_limits<double>::quiet_NaN();

// Parameter derivative of f(s(tau)) at every node: exact when the density
// has a closed form, DFT differentiation of the samples otherwise.
std::vector<Complex> node_derivatives(const CurveGrid& grid, const Density& f) {
  const int n = grid.size();
  std::vector<Complex> d(n);
  if (f.spec && f.spec->has_closed_form()) {
    for (int j = 0; j < n; ++j) d[j] = f.spec->dtau(grid.param(), grid.tau(j));
    return d;
  }
  if (n < 16)
    throw ConfigError(
        "derivative unavailable: sample-only density on a grid under 16 nodes");
  if (!f.all_finite())
    throw ConfigError(
        "derivative unavailable: sample-only density with singular nodes");
  return dft_derivative(f.values);
}

// Shared core: psi_j = (h / 2 pi i) * [ sum_{k != j} (f_k - f_j) s'_k/(s_k - s_j)
// + d/dtau f(s(tau))|_j ].  Singular nodes enter the quadrature with density
// value 0, the same substitution every other consumer makes (for the
// sawtooth that value is the symmetric midpoint of the jump, so the
// first-order puncture error cancels); their subtracted weight is therefore
// (0 - f_j) s'_k, not zero.
struct PsiEvaluator {
  const CurveGrid& grid;
  const Density& f;
  std::vector<Complex> deriv;

  PsiEvaluator(const CurveGrid& g, const Density& den)
      : grid(g), f(den), deriv(node_derivatives(g, den)) {
    if (f.size() != grid.size())
      throw ConfigError("density/grid size mismatch");
  }

  // Scratch buffers are per-call so one evaluator can be shared by threads.
  Complex eval(int j, std::vector<double>& wre, std::vector<double>& wim) const {
    const int n = grid.size();
    const Complex fj = f.values[j];
    wre.resize(n);
    wim.resize(n);
    for (int k = 0; k < n; ++k) {
      if (k == j) {
        wre[k] = 0.0;
        wim[k] = 0.0;
        continue;
      }
      Complex fk = f.is_singular(k) ? Complex{0.0, 0.0} : f.values[k];
      Complex w = (fk - fj) * grid.deriv(k);
      wre[k] = w.real();
      wim[k] = w.imag();
    }
    auto sum = kernels::cauchy_sum(grid.pos_re(), grid.pos_im(), wre.data(),
                                   wim.data(), static_cast<std::size_t>(n),
                                   grid.pos(j).real(), grid.pos(j).imag(), j);
    Complex total = sum.value() + deriv[j];
    // h/(2 pi i) = 1/(i n)
    return total / Complex{0.0, static_cast<double>(n)};
  }
};

}  // namespace

Complex psi_at(const CurveGrid& grid, const Density& f, int j) {
  if (j < 0 || j >= grid.size()) throw ConfigError("node index out of range");
  if (f.is_singular(j))
    throw ConfigError("principal value undefined at a singular node");
  PsiEvaluator ev(grid, f);
  std::vector<double> wre, wim;
  return ev.eval(j, wre, wim);
}

PVTrace phi_on_curve(const CurveGrid& grid, const Density& f, int threads) {
  PsiEvaluator ev(grid, f);
  const int n = grid.size();
  PVTrace tr;
  tr.grid_n = n;
  tr.scheme = TraceScheme::subtraction;
  tr.unset_nodes = f.singular_nodes;
  tr.psi_t.resize(n);
  tr.phi_t.resize(n);
  parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t j) {
    thread_local std::vector<double> wre, wim;
    int jj = static_cast<int>(j);
    if (f.is_singular(jj)) {
      tr.psi_t[j] = {nan_d, nan_d};
      tr.phi_t[j] = {nan_d, nan_d};
      return;
    }
    Complex psi = ev.eval(jj, wre, wim);
    tr.psi_t[j] = psi;
    tr.phi_t[j] = 0.5 * f.values[jj] + psi;
  });
  return tr;
}

Density apply_B(const CurveGrid& grid, const Density& f, int threads) {
  PsiEvaluator ev(grid, f);
  const int n = grid.size();
  Density out;
  out.values.resize(n);
  out.singular_nodes = f.singular_nodes;
  parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t j) {
    thread_local std::vector<double> wre, wim;
    int jj = static_cast<int>(j);
    if (f.is_singular(jj)) {
      out.values[j] = {nan_d, nan_d};
      return;
    }
    // Bf = f + 2 psi
    out.values[j] = f.values[jj] + 2.0 * ev.eval(jj, wre, wim);
  });
  return out;
}

double duality_defect(const CurveGrid& grid, const Density& f,
                      const Density& phi, int* skipped_nodes) {
  if (!phi.spec || (phi.spec->kind != DensityKind::constant &&
                    phi.spec->kind != DensityKind::trig_poly))
    throw ConfigError("duality pairing requires a smooth (constant or "
                      "trig_poly) test density");
  Density bf = apply_B(grid, f);
  Density bphi = apply_B(grid, phi);
  Complex acc = 0.0;
  int skipped = 0;
  for (int j = 0; j < grid.size(); ++j) {
    if (f.is_singular(j)) {
      ++skipped;
      continue;
    }
    Complex w = grid.deriv(j);
    acc += phi.values[j] * bf.values[j] * w + bphi.values[j] * f.values[j] * w;
  }
  if (skipped_nodes) *skipped_nodes = skipped;
  return std::abs(grid.step() * acc);
}

std::vector<Complex> b_operator_matrix(const CurveGrid& grid, int threads) {
  const int n = grid.size();
  std::vector<Complex> mat(static_cast<std::size_t>(n) * n);
  // Column k = image of the unit impulse at node k; columns are independent.
  parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t k) {
    Density e;
    e.values.assign(n, Complex{0.0, 0.0});
    e.values[k] = 1.0;
    Density col = apply_B(grid, e, 1);
    for (int r = 0; r < n; ++r) mat[static_cast<std::size_t>(r) * n + k] = col.values[r];
  });
  return mat;
}

}  // namespace cauchybv
