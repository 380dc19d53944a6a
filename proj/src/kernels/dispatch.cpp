#include <atomic>

#include "cauchybv/common.hpp"
#include "kernels_impl.hpp"

namespace cauchybv::kernels {

namespace {
std::atomic<Backend> g_backend{best_backend()};
}

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
  }
  return "?";
}

bool backend_supported(Backend b) {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if defined(CAUCHYBV_HAVE_AVX2)
      return cpu_has_avx2();
#else
      return false;
#endif
  }
  return false;
}

Backend best_backend() {
#if defined(CAUCHYBV_HAVE_AVX2)
  if (cpu_has_avx2()) return Backend::avx2;
#endif
  return Backend::scalar;
}

Backend active_backend() { return g_backend.load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (!backend_supported(b))
    throw ConfigError(std::string("kernel backend not supported on this host: ") +
                      backend_name(b));
  g_backend.store(b, std::memory_order_relaxed);
}

Backend parse_backend(const std::string& name) {
  if (name == "auto") return best_backend();
  if (name == "scalar") return Backend::scalar;
  if (name == "avx2") return Backend::avx2;
  throw ConfigError("unknown kernel backend: " + name);
}

Sum cauchy_sum(const double* s_re, const double* s_im, const double* w_re,
               const double* w_im, std::size_t n, double z_re, double z_im,
               std::ptrdiff_t skip) {
  switch (active_backend()) {
#if defined(CAUCHYBV_HAVE_AVX2)
    case Backend::avx2:
      return cauchy_sum_avx2(s_re, s_im, w_re, w_im, n, z_re, z_im, skip);
#endif
    default:
      return cauchy_sum_scalar(s_re, s_im, w_re, w_im, n, z_re, z_im, skip);
  }
}

}  // namespace cauchybv::kernels
