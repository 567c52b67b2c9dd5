#include "hypnap/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace hypnap::kernels {

// Scalar implementations (always compiled).
void certificate_batch_scalar(const double* d0, const double* d1,
                              const double* d2, std::size_t n, double* lhs,
                              double* rhs, double* rad);
void e_class_batch_scalar(int epsilon, const double* d0, const double* d1,
                          const double* d2, std::size_t n, double* e0,
                          double* e1, double* e2);

#if defined(HYPNAP_HAVE_AVX2_BUILD)
void certificate_batch_avx2(const double* d0, const double* d1,
                            const double* d2, std::size_t n, double* lhs,
                            double* rhs, double* rad);
void e_class_batch_avx2(int epsilon, const double* d0, const double* d1,
                        const double* d2, std::size_t n, double* e0,
                        double* e1, double* e2);
#endif

const char* to_string(Backend b) noexcept {
    return b == Backend::scalar ? "scalar" : "avx2";
}

bool available(Backend b) noexcept {
    if (b == Backend::scalar) return true;
#if defined(HYPNAP_HAVE_AVX2_BUILD)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend pick_backend() noexcept {
    if (const char* env = std::getenv("HYPNAP_BACKEND")) {
        if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
        if (std::strcmp(env, "avx2") == 0 && available(Backend::avx2)) {
            return Backend::avx2;
        }
        // "auto" or unrecognized: fall through to detection.
    }
    return available(Backend::avx2) ? Backend::avx2 : Backend::scalar;
}

void certificate_batch(Backend b, const double* d0, const double* d1,
                       const double* d2, std::size_t n, double* lhs,
                       double* rhs, double* rad) {
#if defined(HYPNAP_HAVE_AVX2_BUILD)
    if (b == Backend::avx2 && available(Backend::avx2)) {
        certificate_batch_avx2(d0, d1, d2, n, lhs, rhs, rad);
        return;
    }
#endif
    certificate_batch_scalar(d0, d1, d2, n, lhs, rhs, rad);
}

void e_class_batch(Backend b, int epsilon, const double* d0, const double* d1,
                   const double* d2, std::size_t n, double* e0, double* e1,
                   double* e2) {
#if defined(HYPNAP_HAVE_AVX2_BUILD)
    if (b == Backend::avx2 && available(Backend::avx2)) {
        e_class_batch_avx2(epsilon, d0, d1, d2, n, e0, e1, e2);
        return;
    }
#endif
    e_class_batch_scalar(epsilon, d0, d1, d2, n, e0, e1, e2);
}

}  // namespace hypnap::kernels
