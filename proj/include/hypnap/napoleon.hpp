#pragma once

#include "hypnap/triangle.hpp"

namespace hypnap {

// Orientation of the three equilateral flanks. The same epsilon is used on
// every side; epsilon = +1 is the orientation that collapses an equilateral
// input to a single point.
struct NapoleonParams {
    int epsilon = +1;  // must be +1 or -1
    double tol_consistency = 1e-9;  // point-space vs closed-form agreement
};

struct NapoleonResult {
    HPoint r0, r1, r2;        // centroids of the flanks on sides P1P2, P2P0, P0P1
    CongruenceClass e_class;  // e_i = sqrt(1 - 2<R_{i+1},R_{i+2}>)
    double residual_value;    // napoleonic_residual of the input class
};

struct Theorem1Certificate {
    double lhs;  // alpha^2 (sum - prod)^2 - chi^2 (1 - pairsum)^2
    double rhs;  // gamma/24 * sum of squared gaps * (quadratic tail)
};

void validate_params(const NapoleonParams& p);

/// Apex of the equilateral triangle erected on P0P1 with orientation eps:
///   Q2 = [-c(P0+P1) + eps sqrt(1-2c) P0 x~ P1] / (1-c),  c = <P0,P1>.
/// Equidistant: <Q2,P0> = <Q2,P1> = c. Throws DegeneratePair if the
/// vertices coincide.
HPoint apex(const HPoint& p0, const HPoint& p1, int eps,
            double tol_distinct = tol::distinct);

/// Centroid of that flank triangle:
///   R2 = [sqrt(1-2c)(P0+P1) + eps P0 x~ P1] / (sqrt(3)(1-c)).
/// Agrees with projecting P0 + P1 + apex onto the hyperboloid.
HPoint centroid_equilateral(const HPoint& p0, const HPoint& p1, int eps,
                            double tol_distinct = tol::distinct);

/// Napoleonization of T: canonicalizes first (chi_point >= 0, d0 maximal),
/// erects the three flanks with the common eps and returns their centroids
/// plus the e-class. The point-space e-class is cross-checked against the
/// closed form; disagreement beyond tol_consistency throws
/// ConsistencyFailure (a numerics bug, never expected).
NapoleonResult napoleonize(const Triangle& t, const NapoleonParams& p);

/// Class-space Napoleonization from the closed form; no points are
/// constructed. Throws Unrealizable.
CongruenceClass napoleonize_class(const CongruenceClass& c,
                                  const NapoleonParams& p);

/// alpha (d0+d1+d2 - d0 d1 d2) + eps chi (1 - d0 d1 - d1 d2 - d2 d0).
/// Zero exactly when the Napoleonization is equilateral (for non-equilateral
/// input). Computed on the canonicalized class.
double napoleonic_residual(const CongruenceClass& c, const NapoleonParams& p);

/// Both closed forms of the Theorem 1 identity; rhs > 0 away from the
/// equilateral diagonal. lhs is evaluated in compensated arithmetic.
Theorem1Certificate theorem1_certificate(const CongruenceClass& c);

}  // namespace hypnap
