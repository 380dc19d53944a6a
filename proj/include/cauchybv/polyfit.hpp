#pragma once

#include <span>
#include <vector>

#include "cauchybv/common.hpp"

namespace cauchybv {

// Least-squares polynomial fit p(x) of the given degree through (x_k, y_k),
// evaluated at x = 0.  Solved by Householder QR on a Vandermonde matrix with
// columns scaled to max|x|, which keeps the normal-equation blowup away.
// Throws ConfigError if the system is rank-deficient (near-duplicate
// abscissae) or if there are fewer points than coefficients.
Complex extrapolate_to_zero(std::span<const double> x,
                            std::span<const Complex> y, int degree);

}  // namespace cauchybv
