#include "hypnap/triangle.hpp"

#include <algorithm>
#include <cmath>

#include "hypnap/detail/class_formulas.hpp"

namespace hypnap {

using detail::sqrt3;

const char* to_string(TriangleKind kind) noexcept {
    switch (kind) {
        case TriangleKind::Equilateral: return "equilateral";
        case TriangleKind::Isosceles: return "isosceles";
        case TriangleKind::Cogeodesic: return "cogeodesic";
        case TriangleKind::Generic: return "generic";
    }
    return "unknown";
}

void validate_triangle(const Triangle& t, double tol_distinct) {
    validate_hpoint(t.p0);
    validate_hpoint(t.p1);
    validate_hpoint(t.p2);
    const double c01 = minkowski_inner(t.p0.v, t.p1.v);
    const double c12 = minkowski_inner(t.p1.v, t.p2.v);
    const double c20 = minkowski_inner(t.p2.v, t.p0.v);
    if (c01 >= -1.0 - tol_distinct || c12 >= -1.0 - tol_distinct ||
        c20 >= -1.0 - tol_distinct) {
        throw Error(ErrorCode::degenerate_triangle,
                    "triangle has coincident vertices");
    }
}

CongruenceClass congruence_of(const Triangle& t, double tol_distinct) {
    validate_triangle(t, tol_distinct);
    const double c12 = minkowski_inner(t.p1.v, t.p2.v);
    const double c20 = minkowski_inner(t.p2.v, t.p0.v);
    const double c01 = minkowski_inner(t.p0.v, t.p1.v);
    return {std::sqrt(1.0 - 2.0 * c12), std::sqrt(1.0 - 2.0 * c20),
            std::sqrt(1.0 - 2.0 * c01)};
}

double alpha_of(const CongruenceClass& c) noexcept {
    return 0.5 * (1.0 - c.d0 * c.d0 - c.d1 * c.d1 - c.d2 * c.d2);
}

double chi_radicand_of(const CongruenceClass& c) noexcept {
    return detail::chi_radicand(c.d0 * c.d0, c.d1 * c.d1, c.d2 * c.d2);
}

double chi_of(const CongruenceClass& c, double tol_real) {
    const double rad = chi_radicand_of(c);
    if (rad < -tol_real) {
        throw Error(ErrorCode::unrealizable, "chi radicand is negative");
    }
    return 0.5 * std::sqrt(std::max(rad, 0.0));
}

DerivedScalars derived_scalars(const CongruenceClass& c, double tol_real) {
    const auto s = detail::class_scalars(c.d0, c.d1, c.d2, tol_real);
    if (s.radicand < -tol_real) {
        throw Error(ErrorCode::unrealizable, "chi radicand is negative");
    }
    return {s.alpha, s.chi, s.gamma};
}

double chi_point(const Triangle& t) noexcept {
    return triple_product(t.p0.v, t.p1.v, t.p2.v);
}

namespace {

int max_rotation_index(double d0, double d1, double d2) noexcept {
    // Smallest index among the maxima.
    if (d0 >= d1 && d0 >= d2) return 0;
    if (d1 >= d2) return 1;
    return 2;
}

}  // namespace

Triangle canonicalize(const Triangle& t) {
    Triangle s = t;
    if (chi_point(s) < 0.0) std::swap(s.p1, s.p2);
    const CongruenceClass c = congruence_of(s);
    switch (max_rotation_index(c.d0, c.d1, c.d2)) {
        case 0: return s;
        case 1: return {s.p1, s.p2, s.p0};
        default: return {s.p2, s.p0, s.p1};
    }
}

CongruenceClass canonicalize_class(const CongruenceClass& c) noexcept {
    switch (max_rotation_index(c.d0, c.d1, c.d2)) {
        case 0: return c;
        case 1: return {c.d1, c.d2, c.d0};
        default: return {c.d2, c.d0, c.d1};
    }
}

bool is_realizable(const CongruenceClass& c, double tol_real) noexcept {
    if (!(c.d0 > sqrt3 && c.d1 > sqrt3 && c.d2 > sqrt3)) return false;
    return chi_radicand_of(c) >= -tol_real;
}

void require_realizable(const CongruenceClass& c, double tol_real) {
    if (!(c.d0 > sqrt3 && c.d1 > sqrt3 && c.d2 > sqrt3)) {
        throw Error(ErrorCode::unrealizable, "some d_i is not above sqrt(3)");
    }
    if (chi_radicand_of(c) < -tol_real) {
        throw Error(ErrorCode::unrealizable, "chi radicand is negative");
    }
}

Triangle realize(const CongruenceClass& c, double tol_strict) {
    for (double d : c.d()) {
        if (d <= sqrt3) {
            throw Error(ErrorCode::unrealizable, "some d_i is not above sqrt(3)");
        }
        if (d <= sqrt3 + tol_strict) {
            throw Error(ErrorCode::degenerate_class,
                        "class is within tol_strict of the point limit");
        }
    }
    const double rad = chi_radicand_of(c);
    if (rad < -tol::real_band) {
        throw Error(ErrorCode::unrealizable, "chi radicand is negative");
    }

    // Gauge: P0 at the base point, P1 on the x1-axis geodesic.
    const double c01 = 0.5 * (1.0 - c.d2 * c.d2);  // <P0,P1>
    const double c20 = 0.5 * (1.0 - c.d1 * c.d1);  // <P2,P0>
    const double c12 = 0.5 * (1.0 - c.d0 * c.d0);  // <P1,P2>
    const double ch = -c01;                        // cosh t > 1
    const double sh = std::sqrt((ch - 1.0) * (ch + 1.0));
    const HPoint p0{{1.0, 0.0, 0.0}};
    const HPoint p1{{ch, sh, 0.0}};

    const double disc = 1.0 - c01 * c01;  // negative for distinct points
    const double a0 = -(c20 + c01 * c12) / disc;
    const double a1 = -(c12 + c01 * c20) / disc;
    // b^2 from <P2,P2> = -1; clamp the near-cogeodesic band to zero.
    const double bsq = (1.0 - a0 * a0 - a1 * a1 + 2.0 * a0 * a1 * c01) / disc;
    const double b = std::sqrt(std::max(bsq, 0.0));  // b >= 0 gives chi >= 0

    const MVec cross = hyperbolic_cross(p0.v, p1.v);
    const HPoint p2 = project_to_hyperboloid(a0 * p0.v + a1 * p1.v + b * cross);
    return {p0, p1, p2};
}

Classification classify(const CongruenceClass& c, double tol_class) {
    const double g01 = std::abs(c.d0 - c.d1);
    const double g12 = std::abs(c.d1 - c.d2);
    const double g20 = std::abs(c.d2 - c.d0);
    const double gap_max = std::max({g01, g12, g20});
    const bool equi = gap_max <= tol_class;
    const bool cogeo = chi_of(c) <= tol_class;

    if (equi && cogeo) {
        const bool point_degenerate = c.d0 <= sqrt3 + tol_class &&
                                      c.d1 <= sqrt3 + tol_class &&
                                      c.d2 <= sqrt3 + tol_class;
        return {point_degenerate ? TriangleKind::Equilateral
                                 : TriangleKind::Cogeodesic,
                tol_class};
    }
    if (equi) return {TriangleKind::Equilateral, tol_class};
    if (cogeo) return {TriangleKind::Cogeodesic, tol_class};
    const int close_pairs =
        (g01 <= tol_class) + (g12 <= tol_class) + (g20 <= tol_class);
    if (close_pairs == 1) return {TriangleKind::Isosceles, tol_class};
    return {TriangleKind::Generic, tol_class};
}

CongruenceClass random_realizable_class(Rng& rng, double margin, double d_max) {
    for (;;) {
        const CongruenceClass c{uniform(rng, sqrt3 + margin, d_max),
                                uniform(rng, sqrt3 + margin, d_max),
                                uniform(rng, sqrt3 + margin, d_max)};
        if (chi_radicand_of(c) >= 0.0) return canonicalize_class(c);
    }
}

}  // namespace hypnap
