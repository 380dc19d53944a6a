#include "kernels_impl.hpp"

#if defined(CAUCHYBV_HAVE_AVX2)

#include <immintrin.h>

namespace cauchybv::kernels {

bool cpu_has_avx2() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

Sum cauchy_sum_avx2(const double* s_re, const double* s_im, const double* w_re,
                    const double* w_im, std::size_t n, double z_re, double z_im,
                    std::ptrdiff_t skip) {
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  const __m256d zr = _mm256_set1_pd(z_re);
  const __m256d zi = _mm256_set1_pd(z_im);
  const __m256d lane_ofs = _mm256_set_pd(3.0, 2.0, 1.0, 0.0);

  const std::size_t nvec = n - n % 4;
  for (std::size_t j = 0; j < nvec; j += 4) {
    __m256d dr = _mm256_sub_pd(_mm256_loadu_pd(s_re + j), zr);
    __m256d di = _mm256_sub_pd(_mm256_loadu_pd(s_im + j), zi);
    __m256d wr = _mm256_loadu_pd(w_re + j);
    __m256d wi = _mm256_loadu_pd(w_im + j);
    __m256d den = _mm256_fmadd_pd(dr, dr, _mm256_mul_pd(di, di));
    __m256d num_re = _mm256_fmadd_pd(wr, dr, _mm256_mul_pd(wi, di));
    __m256d num_im = _mm256_fmsub_pd(wi, dr, _mm256_mul_pd(wr, di));
    __m256d t_re = _mm256_div_pd(num_re, den);
    __m256d t_im = _mm256_div_pd(num_im, den);
    if (skip >= static_cast<std::ptrdiff_t>(j) &&
        skip < static_cast<std::ptrdiff_t>(j + 4)) {
      // Zero out the skipped lane; it may hold 0/0.
      __m256d lane =
          _mm256_add_pd(_mm256_set1_pd(static_cast<double>(j)), lane_ofs);
      __m256d hit = _mm256_cmp_pd(lane, _mm256_set1_pd(static_cast<double>(skip)),
                                  _CMP_EQ_OQ);
      t_re = _mm256_andnot_pd(hit, t_re);
      t_im = _mm256_andnot_pd(hit, t_im);
    }
    acc_re = _mm256_add_pd(acc_re, t_re);
    acc_im = _mm256_add_pd(acc_im, t_im);
  }

  // Fixed-order lane reduction keeps results reproducible run to run.
  alignas(32) double lanes_re[4];
  alignas(32) double lanes_im[4];
  _mm256_store_pd(lanes_re, acc_re);
  _mm256_store_pd(lanes_im, acc_im);
  double sum_re = ((lanes_re[0] + lanes_re[1]) + lanes_re[2]) + lanes_re[3];
  double sum_im = ((lanes_im[0] + lanes_im[1]) + lanes_im[2]) + lanes_im[3];

  for (std::size_t j = nvec; j < n; ++j) {
    if (static_cast<std::ptrdiff_t>(j) == skip) continue;
    double dr = s_re[j] - z_re;
    double di = s_im[j] - z_im;
    double den = dr * dr + di * di;
    sum_re += (w_re[j] * dr + w_im[j] * di) / den;
    sum_im += (w_im[j] * dr - w_re[j] * di) / den;
  }
  return {sum_re, sum_im};
}

}  // namespace cauchybv::kernels

#endif  // CAUCHYBV_HAVE_AVX2
