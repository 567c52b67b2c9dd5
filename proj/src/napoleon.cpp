#include "hypnap/napoleon.hpp"

#include <algorithm>
#include <cmath>

#include "hypnap/detail/class_formulas.hpp"
#include "hypnap/kernels.hpp"

namespace hypnap {

void validate_params(const NapoleonParams& p) {
    if (p.epsilon != 1 && p.epsilon != -1) {
        throw Error(ErrorCode::invalid_input, "epsilon must be +1 or -1");
    }
}

namespace {

double inner_or_throw(const HPoint& p0, const HPoint& p1, double tol_distinct) {
    const double c = minkowski_inner(p0.v, p1.v);
    if (c >= -1.0 - tol_distinct) {
        throw Error(ErrorCode::degenerate_pair, "vertices coincide");
    }
    return c;
}

}  // namespace

HPoint apex(const HPoint& p0, const HPoint& p1, int eps, double tol_distinct) {
    const double c = inner_or_throw(p0, p1, tol_distinct);
    const double root = std::sqrt(1.0 - 2.0 * c);
    const MVec cross = hyperbolic_cross(p0.v, p1.v);
    const MVec num = (-c) * (p0.v + p1.v) + (eps * root) * cross;
    return project_to_hyperboloid((1.0 / (1.0 - c)) * num);
}

HPoint centroid_equilateral(const HPoint& p0, const HPoint& p1, int eps,
                            double tol_distinct) {
    const double c = inner_or_throw(p0, p1, tol_distinct);
    const double root = std::sqrt(1.0 - 2.0 * c);
    const MVec cross = hyperbolic_cross(p0.v, p1.v);
    const MVec num = root * (p0.v + p1.v) + static_cast<double>(eps) * cross;
    return project_to_hyperboloid((1.0 / (detail::sqrt3 * (1.0 - c))) * num);
}

NapoleonResult napoleonize(const Triangle& t, const NapoleonParams& p) {
    validate_params(p);
    const Triangle s = canonicalize(t);

    NapoleonResult out{
        centroid_equilateral(s.p1, s.p2, p.epsilon),
        centroid_equilateral(s.p2, s.p0, p.epsilon),
        centroid_equilateral(s.p0, s.p1, p.epsilon),
        {0, 0, 0},
        0.0,
    };

    // The centroids may coincide (equilateral input, eps = +1), so the
    // e-class is read off the inner products rather than via congruence_of.
    const double i12 = minkowski_inner(out.r1.v, out.r2.v);
    const double i20 = minkowski_inner(out.r2.v, out.r0.v);
    const double i01 = minkowski_inner(out.r0.v, out.r1.v);
    out.e_class = {std::sqrt(1.0 - 2.0 * i12), std::sqrt(1.0 - 2.0 * i20),
                   std::sqrt(1.0 - 2.0 * i01)};

    const CongruenceClass cls = congruence_of(s);
    const CongruenceClass closed = napoleonize_class(cls, p);
    const double mismatch = std::max({std::abs(out.e_class.d0 - closed.d0),
                                      std::abs(out.e_class.d1 - closed.d1),
                                      std::abs(out.e_class.d2 - closed.d2)});
    if (mismatch > p.tol_consistency) {
        throw Error(ErrorCode::consistency_failure,
                    "point-space and closed-form e-classes disagree");
    }
    out.residual_value = napoleonic_residual(cls, p);
    return out;
}

CongruenceClass napoleonize_class(const CongruenceClass& c,
                                  const NapoleonParams& p) {
    validate_params(p);
    require_realizable(c);
    const auto s = detail::class_scalars(c.d0, c.d1, c.d2);
    const double chi = std::isnan(s.chi) ? 0.0 : s.chi;
    const auto e =
        detail::e_class(c.d0, c.d1, c.d2, s.alpha, chi, s.gamma, p.epsilon);
    return {e[0], e[1], e[2]};
}

double napoleonic_residual(const CongruenceClass& c, const NapoleonParams& p) {
    validate_params(p);
    require_realizable(c);
    const CongruenceClass k = canonicalize_class(c);
    const auto s = detail::class_scalars(k.d0, k.d1, k.d2);
    const double chi = std::isnan(s.chi) ? 0.0 : s.chi;
    return detail::residual_value(k.d0, k.d1, k.d2, s.alpha, chi, p.epsilon);
}

Theorem1Certificate theorem1_certificate(const CongruenceClass& c) {
    require_realizable(c);
    Theorem1Certificate out{};
    kernels::certificate_batch(kernels::Backend::scalar, &c.d0, &c.d1, &c.d2,
                               1, &out.lhs, &out.rhs, nullptr);
    return out;
}

}  // namespace hypnap
