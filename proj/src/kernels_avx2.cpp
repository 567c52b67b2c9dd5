// AVX2+FMA variants of the batch kernels, 4 classes per vector. The op
// sequence mirrors kernels_scalar.cpp so the two backends agree to within
// a few ulps (the equivalence tests pin this down).

#include "hypnap/kernels.hpp"

#if defined(HYPNAP_HAVE_AVX2_BUILD)

#include <immintrin.h>

#include <cstddef>

namespace hypnap::kernels {

namespace {

struct VDD {
    __m256d hi;
    __m256d lo;
};

inline VDD v_two_sum(__m256d a, __m256d b) {
    const __m256d s = _mm256_add_pd(a, b);
    const __m256d bb = _mm256_sub_pd(s, a);
    const __m256d err = _mm256_add_pd(_mm256_sub_pd(a, _mm256_sub_pd(s, bb)),
                                      _mm256_sub_pd(b, bb));
    return {s, err};
}

inline VDD v_fast_two_sum(__m256d a, __m256d b) {
    const __m256d s = _mm256_add_pd(a, b);
    return {s, _mm256_sub_pd(b, _mm256_sub_pd(s, a))};
}

inline VDD v_two_prod(__m256d a, __m256d b) {
    const __m256d p = _mm256_mul_pd(a, b);
    return {p, _mm256_fmsub_pd(a, b, p)};
}

inline VDD v_add(const VDD& a, const VDD& b) {
    VDD s = v_two_sum(a.hi, b.hi);
    const VDD t = v_two_sum(a.lo, b.lo);
    __m256d lo = _mm256_add_pd(s.lo, t.hi);
    s = v_fast_two_sum(s.hi, lo);
    lo = _mm256_add_pd(s.lo, t.lo);
    return v_fast_two_sum(s.hi, lo);
}

inline VDD v_neg(const VDD& a) {
    const __m256d sign = _mm256_set1_pd(-0.0);
    return {_mm256_xor_pd(a.hi, sign), _mm256_xor_pd(a.lo, sign)};
}

inline VDD v_sub(const VDD& a, const VDD& b) { return v_add(a, v_neg(b)); }

inline VDD v_mul(const VDD& a, const VDD& b) {
    VDD p = v_two_prod(a.hi, b.hi);
    p.lo = _mm256_add_pd(
        p.lo, _mm256_add_pd(_mm256_mul_pd(a.hi, b.lo), _mm256_mul_pd(a.lo, b.hi)));
    return v_fast_two_sum(p.hi, p.lo);
}

inline VDD v_mul_d(const VDD& a, __m256d b) {
    VDD p = v_two_prod(a.hi, b);
    p.lo = _mm256_add_pd(p.lo, _mm256_mul_pd(a.lo, b));
    return v_fast_two_sum(p.hi, p.lo);
}

inline VDD v_from(__m256d a) { return {a, _mm256_setzero_pd()}; }

inline __m256d v_to_double(const VDD& a) { return _mm256_add_pd(a.hi, a.lo); }

inline void certificate_quad(__m256d d0, __m256d d1, __m256d d2, double* lhs,
                             double* rhs, double* rad) {
    const __m256d one = _mm256_set1_pd(1.0);

    const VDD D0 = v_two_prod(d0, d0);
    const VDD D1 = v_two_prod(d1, d1);
    const VDD D2 = v_two_prod(d2, d2);
    const VDD SD = v_add(v_add(D0, D1), D2);

    const VDD two_alpha = v_sub(v_from(one), SD);

    const VDD p01 = v_two_prod(d0, d1);
    const VDD p12 = v_two_prod(d1, d2);
    const VDD p20 = v_two_prod(d2, d0);
    const VDD sum_d = v_add(v_two_sum(d0, d1), v_from(d2));
    const VDD prod_d = v_mul_d(p01, d2);
    const VDD A = v_sub(sum_d, prod_d);

    const VDD sum_dd = v_add(v_add(p01, p12), p20);
    const VDD B = v_sub(v_from(one), sum_dd);

    const VDD P01 = v_mul(D0, D1);
    const VDD P12 = v_mul(D1, D2);
    const VDD P20 = v_mul(D2, D0);
    const VDD sq = v_add(v_add(v_mul(D0, D0), v_mul(D1, D1)), v_mul(D2, D2));
    const VDD mixed = v_add(v_add(P01, P12), P20);
    const VDD radicand = v_add(
        v_sub(v_mul_d(SD, _mm256_set1_pd(3.0)), v_add(mixed, sq)),
        v_mul(P01, D2));

    const VDD aA = v_mul(two_alpha, A);
    const VDD t1 = v_mul(aA, aA);
    const VDD t2 = v_mul(radicand, v_mul(B, B));
    const __m256d lhs_v =
        _mm256_mul_pd(_mm256_set1_pd(0.25), v_to_double(v_sub(t1, t2)));
    _mm256_storeu_pd(lhs, lhs_v);
    if (rad != nullptr) _mm256_storeu_pd(rad, v_to_double(radicand));

    const __m256d g01 = _mm256_sub_pd(d0, d1);
    const __m256d g12 = _mm256_sub_pd(d1, d2);
    const __m256d g20 = _mm256_sub_pd(d2, d0);
    const __m256d gaps = _mm256_add_pd(
        _mm256_add_pd(_mm256_mul_pd(g01, g01), _mm256_mul_pd(g12, g12)),
        _mm256_mul_pd(g20, g20));
    const __m256d gamma = _mm256_mul_pd(
        _mm256_set1_pd(3.0),
        _mm256_mul_pd(_mm256_mul_pd(_mm256_add_pd(D0.hi, one),
                                    _mm256_add_pd(D1.hi, one)),
                      _mm256_add_pd(D2.hi, one)));
    const __m256d tail = _mm256_sub_pd(
        _mm256_add_pd(_mm256_add_pd(_mm256_add_pd(D0.hi, D1.hi),
                                    _mm256_add_pd(D2.hi, p01.hi)),
                      _mm256_add_pd(p12.hi, p20.hi)),
        _mm256_set1_pd(2.0));
    const __m256d rhs_v = _mm256_mul_pd(
        _mm256_mul_pd(_mm256_div_pd(gamma, _mm256_set1_pd(24.0)), gaps), tail);
    _mm256_storeu_pd(rhs, rhs_v);
}

inline void e_class_quad(int epsilon, __m256d d0, __m256d d1, __m256d d2,
                         double* e0, double* e1, double* e2) {
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d half = _mm256_set1_pd(0.5);
    const __m256d D0 = _mm256_mul_pd(d0, d0);
    const __m256d D1 = _mm256_mul_pd(d1, d1);
    const __m256d D2 = _mm256_mul_pd(d2, d2);
    const __m256d SD = _mm256_add_pd(_mm256_add_pd(D0, D1), D2);
    const __m256d alpha = _mm256_mul_pd(half, _mm256_sub_pd(one, SD));

    const __m256d mixed = _mm256_add_pd(
        _mm256_add_pd(_mm256_mul_pd(D0, D1), _mm256_mul_pd(D1, D2)),
        _mm256_mul_pd(D2, D0));
    const __m256d sq = _mm256_add_pd(
        _mm256_add_pd(_mm256_mul_pd(D0, D0), _mm256_mul_pd(D1, D1)),
        _mm256_mul_pd(D2, D2));
    const __m256d radicand = _mm256_add_pd(
        _mm256_sub_pd(_mm256_mul_pd(_mm256_set1_pd(3.0), SD),
                      _mm256_add_pd(mixed, sq)),
        _mm256_mul_pd(_mm256_mul_pd(D0, D1), D2));
    const __m256d chi = _mm256_mul_pd(
        half, _mm256_sqrt_pd(_mm256_max_pd(radicand, _mm256_setzero_pd())));
    const __m256d gamma = _mm256_mul_pd(
        _mm256_set1_pd(3.0),
        _mm256_mul_pd(_mm256_mul_pd(_mm256_add_pd(D0, one),
                                    _mm256_add_pd(D1, one)),
                      _mm256_add_pd(D2, one)));
    const __m256d eps = _mm256_set1_pd(static_cast<double>(epsilon));
    const __m256d two = _mm256_set1_pd(2.0);
    const __m256d four = _mm256_set1_pd(4.0);

    const auto entry = [&](__m256d Di, __m256d dj, __m256d dk, __m256d Dj,
                           __m256d Dk) {
        const __m256d bracket = _mm256_add_pd(
            _mm256_sub_pd(
                _mm256_mul_pd(
                    four,
                    _mm256_add_pd(_mm256_mul_pd(alpha, _mm256_mul_pd(dj, dk)),
                                  _mm256_mul_pd(_mm256_mul_pd(eps, chi),
                                                _mm256_add_pd(dj, dk)))),
                _mm256_mul_pd(_mm256_sub_pd(Dj, one), _mm256_sub_pd(Dk, one))),
            _mm256_mul_pd(two, _mm256_sub_pd(Di, one)));
        const __m256d inner = _mm256_div_pd(
            _mm256_mul_pd(_mm256_add_pd(Di, one), bracket), gamma);
        const __m256d esq = _mm256_sub_pd(one, _mm256_mul_pd(two, inner));
        return _mm256_sqrt_pd(_mm256_max_pd(esq, _mm256_setzero_pd()));
    };

    _mm256_storeu_pd(e0, entry(D0, d1, d2, D1, D2));
    _mm256_storeu_pd(e1, entry(D1, d2, d0, D2, D0));
    _mm256_storeu_pd(e2, entry(D2, d0, d1, D0, D1));
}

}  // namespace

void certificate_batch_avx2(const double* d0, const double* d1,
                            const double* d2, std::size_t n, double* lhs,
                            double* rhs, double* rad) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        certificate_quad(_mm256_loadu_pd(d0 + i), _mm256_loadu_pd(d1 + i),
                         _mm256_loadu_pd(d2 + i), lhs + i, rhs + i,
                         rad != nullptr ? rad + i : nullptr);
    }
    if (i < n) {
        // Tail: pad with the last element and store only the live lanes.
        double t0[4], t1[4], t2[4], tl[4], tr[4], trad[4];
        for (std::size_t k = 0; k < 4; ++k) {
            const std::size_t src = (i + k < n) ? i + k : n - 1;
            t0[k] = d0[src];
            t1[k] = d1[src];
            t2[k] = d2[src];
        }
        certificate_quad(_mm256_loadu_pd(t0), _mm256_loadu_pd(t1),
                         _mm256_loadu_pd(t2), tl, tr, trad);
        for (std::size_t k = 0; i + k < n; ++k) {
            lhs[i + k] = tl[k];
            rhs[i + k] = tr[k];
            if (rad != nullptr) rad[i + k] = trad[k];
        }
    }
}

void e_class_batch_avx2(int epsilon, const double* d0, const double* d1,
                        const double* d2, std::size_t n, double* e0,
                        double* e1, double* e2) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        e_class_quad(epsilon, _mm256_loadu_pd(d0 + i), _mm256_loadu_pd(d1 + i),
                     _mm256_loadu_pd(d2 + i), e0 + i, e1 + i, e2 + i);
    }
    if (i < n) {
        double t0[4], t1[4], t2[4], r0[4], r1[4], r2[4];
        for (std::size_t k = 0; k < 4; ++k) {
            const std::size_t src = (i + k < n) ? i + k : n - 1;
            t0[k] = d0[src];
            t1[k] = d1[src];
            t2[k] = d2[src];
        }
        e_class_quad(epsilon, _mm256_loadu_pd(t0), _mm256_loadu_pd(t1),
                     _mm256_loadu_pd(t2), r0, r1, r2);
        for (std::size_t k = 0; i + k < n; ++k) {
            e0[i + k] = r0[k];
            e1[i + k] = r1[k];
            e2[i + k] = r2[k];
        }
    }
}

}  // namespace hypnap::kernels

#endif  // HYPNAP_HAVE_AVX2_BUILD
