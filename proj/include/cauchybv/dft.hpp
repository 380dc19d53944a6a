#pragma once

#include <span>
#include <vector>

#include "cauchybv/common.hpp"

namespace cauchybv {

// Direct table-based DFT.  Sizes here stay in the low thousands, so the
// O(N^2) transform is fast enough and keeps results bit-reproducible (no
// plan-dependent reordering).
//
// Layout: slot k of the coefficient vector holds mode n = k for k < N/2 and
// n = k - N otherwise (standard wrap-around order).

// Signed mode for coefficient slot k of an N-point transform.
int dft_mode(int k, int n);

// c_k = (1/N) sum_j v_j e^{-i tau_j n_k}
std::vector<Complex> dft_forward(std::span<const Complex> v);

// v_j = sum_k c_k e^{+i tau_j n_k}
std::vector<Complex> dft_inverse(std::span<const Complex> c);

// Derivative of the trigonometric interpolant at the nodes: multiplies
// coefficients by i*n; for even N the unmatched mode -N/2 is dropped.
std::vector<Complex> dft_derivative(std::span<const Complex> v);

}  // namespace cauchybv
