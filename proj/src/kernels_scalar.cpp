#include <algorithm>
#include <cmath>

#include "hypnap/detail/class_formulas.hpp"
#include "hypnap/detail/dd.hpp"
#include "hypnap/kernels.hpp"

namespace hypnap::kernels {

using detail::DD;

namespace {

// Single-class certificate in double-double. Works with the doubled
// quantities 2*alpha and 2*chi so that
//   4*lhs = (2 alpha)^2 A^2 - radicand * B^2,
// and only the final quarter is rounded back to double.
void certificate_one(double d0, double d1, double d2, double* lhs, double* rhs,
                     double* rad) {
    const DD D0 = detail::two_prod(d0, d0);
    const DD D1 = detail::two_prod(d1, d1);
    const DD D2 = detail::two_prod(d2, d2);
    const DD SD = detail::dd_add(detail::dd_add(D0, D1), D2);

    const DD two_alpha = detail::dd_sub(detail::dd_from(1.0), SD);

    const DD p01 = detail::two_prod(d0, d1);
    const DD p12 = detail::two_prod(d1, d2);
    const DD p20 = detail::two_prod(d2, d0);
    const DD sum_d = detail::dd_add(detail::two_sum(d0, d1), detail::dd_from(d2));
    const DD prod_d = detail::dd_mul_d(p01, d2);
    const DD A = detail::dd_sub(sum_d, prod_d);

    const DD sum_dd = detail::dd_add(detail::dd_add(p01, p12), p20);
    const DD B = detail::dd_sub(detail::dd_from(1.0), sum_dd);

    // radicand = 3*SD - (D0 D1 + D1 D2 + D2 D0 + D0^2 + D1^2 + D2^2) + D0 D1 D2
    const DD P01 = detail::dd_mul(D0, D1);
    const DD P12 = detail::dd_mul(D1, D2);
    const DD P20 = detail::dd_mul(D2, D0);
    const DD sq = detail::dd_add(
        detail::dd_add(detail::dd_mul(D0, D0), detail::dd_mul(D1, D1)),
        detail::dd_mul(D2, D2));
    const DD mixed = detail::dd_add(detail::dd_add(P01, P12), P20);
    const DD radicand = detail::dd_add(
        detail::dd_sub(detail::dd_mul_d(SD, 3.0), detail::dd_add(mixed, sq)),
        detail::dd_mul(P01, D2));

    const DD aA = detail::dd_mul(two_alpha, A);
    const DD t1 = detail::dd_mul(aA, aA);
    const DD t2 = detail::dd_mul(radicand, detail::dd_mul(B, B));
    *lhs = 0.25 * detail::dd_to_double(detail::dd_sub(t1, t2));
    if (rad != nullptr) *rad = detail::dd_to_double(radicand);

    // rhs has no cancellation (all factors nonnegative on realizable
    // classes), so plain double keeps ~1e-15 relative error.
    const double g01 = d0 - d1, g12 = d1 - d2, g20 = d2 - d0;
    const double gaps = g01 * g01 + g12 * g12 + g20 * g20;
    const double gamma = 3.0 * (D0.hi + 1.0) * (D1.hi + 1.0) * (D2.hi + 1.0);
    const double tail =
        D0.hi + D1.hi + D2.hi + p01.hi + p12.hi + p20.hi - 2.0;
    *rhs = gamma / 24.0 * gaps * tail;
}

}  // namespace

void certificate_batch_scalar(const double* d0, const double* d1,
                              const double* d2, std::size_t n, double* lhs,
                              double* rhs, double* rad) {
    for (std::size_t i = 0; i < n; ++i) {
        certificate_one(d0[i], d1[i], d2[i], lhs + i, rhs + i,
                        rad != nullptr ? rad + i : nullptr);
    }
}

void e_class_batch_scalar(int epsilon, const double* d0, const double* d1,
                          const double* d2, std::size_t n, double* e0,
                          double* e1, double* e2) {
    for (std::size_t i = 0; i < n; ++i) {
        const auto s = detail::class_scalars(d0[i], d1[i], d2[i]);
        const double chi = std::isnan(s.chi) ? 0.0 : s.chi;
        const auto e =
            detail::e_class(d0[i], d1[i], d2[i], s.alpha, chi, s.gamma, epsilon);
        e0[i] = e[0];
        e1[i] = e[1];
        e2[i] = e[2];
    }
}

}  // namespace hypnap::kernels
