#include "hypnap/minkowski.hpp"

#include <cmath>

namespace hypnap {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::not_timelike: return "not_timelike";
        case ErrorCode::wrong_sheet: return "wrong_sheet";
        case ErrorCode::invalid_isometry: return "invalid_isometry";
        case ErrorCode::degenerate_triangle: return "degenerate_triangle";
        case ErrorCode::degenerate_pair: return "degenerate_pair";
        case ErrorCode::degenerate_class: return "degenerate_class";
        case ErrorCode::unrealizable: return "unrealizable";
        case ErrorCode::consistency_failure: return "consistency_failure";
        case ErrorCode::insufficient_data: return "insufficient_data";
        case ErrorCode::invalid_input: return "invalid_input";
    }
    return "unknown";
}

bool finite(const MVec& v) noexcept {
    return std::isfinite(v.x0) && std::isfinite(v.x1) && std::isfinite(v.x2);
}

double minkowski_inner(const MVec& v, const MVec& w) noexcept {
    return -v.x0 * w.x0 + v.x1 * w.x1 + v.x2 * w.x2;
}

MVec hyperbolic_cross(const MVec& v, const MVec& w) noexcept {
    const double c0 = v.x1 * w.x2 - v.x2 * w.x1;
    const double c1 = v.x2 * w.x0 - v.x0 * w.x2;
    const double c2 = v.x0 * w.x1 - v.x1 * w.x0;
    return {-c0, c1, c2};  // J applied to the Euclidean cross product
}

double triple_product(const MVec& u, const MVec& v, const MVec& w) noexcept {
    // Euclidean scalar triple product u . (v x w).
    return u.x0 * (v.x1 * w.x2 - v.x2 * w.x1) +
           u.x1 * (v.x2 * w.x0 - v.x0 * w.x2) +
           u.x2 * (v.x0 * w.x1 - v.x1 * w.x0);
}

void validate_hpoint(const HPoint& p, double tolerance) {
    if (!finite(p.v)) {
        throw Error(ErrorCode::invalid_input, "HPoint has non-finite coordinates");
    }
    const double q = minkowski_inner(p.v, p.v);
    if (std::abs(q + 1.0) > tolerance) {
        throw Error(ErrorCode::invalid_input, "point is off the unit hyperboloid");
    }
    if (p.v.x0 < 1.0 - tolerance) {
        throw Error(ErrorCode::wrong_sheet, "point is not on the upper sheet");
    }
}

HPoint project_to_hyperboloid(const MVec& v, double tol_proj) {
    if (!finite(v)) {
        throw Error(ErrorCode::invalid_input, "non-finite vector");
    }
    const double q = minkowski_inner(v, v);
    if (q >= -tol_proj) {
        throw Error(ErrorCode::not_timelike, "vector is not timelike");
    }
    if (v.x0 <= 0.0) {
        throw Error(ErrorCode::wrong_sheet, "vector is not future-pointing");
    }
    const double inv = 1.0 / std::sqrt(-q);
    HPoint p{inv * v};
    validate_hpoint(p);
    return p;
}

MVec LorentzMap::apply(const MVec& v) const noexcept {
    return {m[0][0] * v.x0 + m[0][1] * v.x1 + m[0][2] * v.x2,
            m[1][0] * v.x0 + m[1][1] * v.x1 + m[1][2] * v.x2,
            m[2][0] * v.x0 + m[2][1] * v.x1 + m[2][2] * v.x2};
}

LorentzMap operator*(const LorentzMap& a, const LorentzMap& b) noexcept {
    LorentzMap r;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j] +
                        a.m[i][2] * b.m[2][j];
        }
    }
    return r;
}

LorentzMap identity_map() noexcept {
    LorentzMap l;
    l.m = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    return l;
}

LorentzMap rotation(double theta) noexcept {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    LorentzMap l;
    l.m = {{{1, 0, 0}, {0, c, -s}, {0, s, c}}};
    return l;
}

LorentzMap boost_x1(double rapidity) noexcept {
    const double c = std::cosh(rapidity);
    const double s = std::sinh(rapidity);
    LorentzMap l;
    l.m = {{{c, s, 0}, {s, c, 0}, {0, 0, 1}}};
    return l;
}

bool is_lorentz(const LorentzMap& l, double tolerance) noexcept {
    // m^T J m = J, entrywise.
    const auto& m = l.m;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const double g =
                -m[0][i] * m[0][j] + m[1][i] * m[1][j] + m[2][i] * m[2][j];
            const double want = (i == j) ? (i == 0 ? -1.0 : 1.0) : 0.0;
            if (std::abs(g - want) > tolerance) return false;
        }
    }
    return m[0][0] >= 1.0;
}

HPoint apply_isometry(const LorentzMap& l, const HPoint& p, double tolerance) {
    if (!is_lorentz(l, tolerance)) {
        throw Error(ErrorCode::invalid_isometry, "map does not preserve the form");
    }
    validate_hpoint(p);
    // Re-project: large boosts otherwise accumulate quadratic-form drift.
    return project_to_hyperboloid(l.apply(p.v));
}

double uniform(Rng& rng, double lo, double hi) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
}

HPoint random_point(Rng& rng, double radius_bound) {
    const double theta = uniform(rng, 0.0, 6.283185307179586476925286766559);
    const double r = uniform(rng, 0.0, radius_bound);
    const MVec v{std::cosh(r), std::sinh(r) * std::cos(theta),
                 std::sinh(r) * std::sin(theta)};
    return project_to_hyperboloid(v);
}

LorentzMap random_isometry(Rng& rng, double rapidity_bound) {
    const double a = uniform(rng, 0.0, 6.283185307179586476925286766559);
    const double t = uniform(rng, 0.0, rapidity_bound);
    const double b = uniform(rng, 0.0, 6.283185307179586476925286766559);
    return rotation(a) * boost_x1(t) * rotation(b);
}

}  // namespace hypnap
