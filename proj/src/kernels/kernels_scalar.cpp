#include "kernels_impl.hpp"

namespace cauchybv::kernels {

Sum cauchy_sum_scalar(const double* s_re, const double* s_im,
                      const double* w_re, const double* w_im, std::size_t n,
                      double z_re, double z_im, std::ptrdiff_t skip) {
  double acc_re = 0.0;
  double acc_im = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (static_cast<std::ptrdiff_t>(j) == skip) continue;
    double dr = s_re[j] - z_re;
    double di = s_im[j] - z_im;
    double den = dr * dr + di * di;
    // (wr + i wi) / (dr + i di)
    acc_re += (w_re[j] * dr + w_im[j] * di) / den;
    acc_im += (w_im[j] * dr - w_re[j] * di) / den;
  }
  return {acc_re, acc_im};
}

}  // namespace cauchybv::kernels
