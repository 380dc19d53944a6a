#pragma once

#include "cauchybv/kernels.hpp"

namespace cauchybv::kernels {

#if defined(CAUCHYBV_HAVE_AVX2)
Sum cauchy_sum_avx2(const double* s_re, const double* s_im, const double* w_re,
                    const double* w_im, std::size_t n, double z_re, double z_im,
                    std::ptrdiff_t skip);
bool cpu_has_avx2();
#endif

}  // namespace cauchybv::kernels
