#pragma once

#include <array>

#include "hypnap/minkowski.hpp"

namespace hypnap {

// Ordered triple of pairwise-distinct hyperboloid points.
struct Triangle {
    HPoint p0, p1, p2;
};

// Congruence coordinates d_i = sqrt(1 - 2<P_{i+1},P_{i+2}>). The triple
// determines the triangle up to isometry; d_i >= sqrt(3) always, with
// equality iff the opposite pair of vertices coincides.
struct CongruenceClass {
    double d0, d1, d2;

    std::array<double, 3> d() const noexcept { return {d0, d1, d2}; }
};

struct DerivedScalars {
    double alpha;  // 2*alpha = 1 - d0^2 - d1^2 - d2^2, alpha <= -4
    double chi;    // nonnegative after canonical ordering
    double gamma;  // 3*(d0^2+1)(d1^2+1)(d2^2+1) > 0
};

enum class TriangleKind { Equilateral, Isosceles, Cogeodesic, Generic };

struct Classification {
    TriangleKind kind;
    double tolerance;
};

const char* to_string(TriangleKind kind) noexcept;

/// Throws DegenerateTriangle unless all pairwise inner products are
/// < -1 - tol_distinct.
void validate_triangle(const Triangle& t, double tol_distinct = tol::distinct);

/// Congruence coordinates of a valid triangle.
CongruenceClass congruence_of(const Triangle& t,
                              double tol_distinct = tol::distinct);

double alpha_of(const CongruenceClass& c) noexcept;

/// Radicand of the chi closed form; negative means the class is not
/// realizable by points on the hyperboloid.
double chi_radicand_of(const CongruenceClass& c) noexcept;

/// Nonnegative chi from the closed form; tiny negative radicands (within
/// tol_real) clamp to 0. Throws Unrealizable below the band.
double chi_of(const CongruenceClass& c, double tol_real = tol::real_band);

DerivedScalars derived_scalars(const CongruenceClass& c,
                               double tol_real = tol::real_band);

/// Signed chi = <P0 x~ P1, P2>; cyclic-invariant, flips sign under swaps.
double chi_point(const Triangle& t) noexcept;

/// Relabels the same vertex set so that chi_point >= 0 (swapping P1,P2 if
/// needed) and then rotates cyclically so d0 is maximal (ties broken by the
/// smallest rotation index). Deterministic and idempotent.
Triangle canonicalize(const Triangle& t);

/// Cyclic rotation of the class so d0 is maximal, same tie-break.
CongruenceClass canonicalize_class(const CongruenceClass& c) noexcept;

/// True iff all d_i > sqrt(3) and the chi radicand clears -tol_real.
bool is_realizable(const CongruenceClass& c,
                   double tol_real = tol::real_band) noexcept;

/// Throws Unrealizable if not.
void require_realizable(const CongruenceClass& c,
                        double tol_real = tol::real_band);

/// Canonical realization: P0 = (1,0,0), P1 on the x1-axis geodesic,
/// P2 with chi_point >= 0. Throws Unrealizable (negative radicand or some
/// d_i <= sqrt(3)) or DegenerateClass (some d_i within tol_strict of
/// sqrt(3)).
Triangle realize(const CongruenceClass& c, double tol_strict = tol::strict);

Classification classify(const CongruenceClass& c,
                        double tol_class = tol::classify);

/// Rejection sampler over [sqrt(3)+margin, d_max]^3 restricted to
/// realizable classes; returns the canonicalized class.
CongruenceClass random_realizable_class(Rng& rng, double margin, double d_max);

}  // namespace hypnap
