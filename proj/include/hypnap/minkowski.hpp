#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "hypnap/errors.hpp"

namespace hypnap {

// Default numeric tolerances. Every operation that uses one takes it as a
// defaulted parameter, so callers can tighten or relax per call.
namespace tol {
inline constexpr double point = 1e-12;      // |<P,P>+1| for hyperboloid membership
inline constexpr double proj = 1e-14;       // timelike margin for projection
inline constexpr double isometry = 1e-10;   // |m^T J m - J| entrywise
inline constexpr double distinct = 1e-12;   // <P,Q> < -1 - distinct
inline constexpr double strict = 1e-9;      // d_i > sqrt(3) + strict for realization
inline constexpr double real_band = 1e-9;   // clamp band for the chi radicand
inline constexpr double classify = 1e-9;    // default classification tolerance
}  // namespace tol

// Vector in Minkowski R^3 with signature (-,+,+) on (x0,x1,x2); x0 is the
// time coordinate.
struct MVec {
    double x0 = 0.0;
    double x1 = 0.0;
    double x2 = 0.0;

    friend MVec operator+(const MVec& a, const MVec& b) {
        return {a.x0 + b.x0, a.x1 + b.x1, a.x2 + b.x2};
    }
    friend MVec operator-(const MVec& a, const MVec& b) {
        return {a.x0 - b.x0, a.x1 - b.x1, a.x2 - b.x2};
    }
    friend MVec operator*(double s, const MVec& v) {
        return {s * v.x0, s * v.x1, s * v.x2};
    }
    friend MVec operator-(const MVec& v) { return {-v.x0, -v.x1, -v.x2}; }
};

bool finite(const MVec& v) noexcept;

/// Minkowski inner product <v,w> = -v0*w0 + v1*w1 + v2*w2.
double minkowski_inner(const MVec& v, const MVec& w) noexcept;

/// Hyperbolic cross product v x~ w = J(v x w), J = diag(-1,1,1).
/// Minkowski-orthogonal to both arguments.
MVec hyperbolic_cross(const MVec& v, const MVec& w) noexcept;

/// Scalar triple product <u, v x~ w>; equals the Euclidean u . (v x w),
/// so it is alternating and cyclic-invariant.
double triple_product(const MVec& u, const MVec& v, const MVec& w) noexcept;

// Point on the upper unit hyperboloid: <v,v> = -1, x0 >= 1.
struct HPoint {
    MVec v;
};

/// Throws if P violates the hyperboloid invariants at tolerance `tolerance`.
void validate_hpoint(const HPoint& p, double tolerance = tol::point);

/// Normalizes a future-pointing timelike vector onto the hyperboloid:
/// v / sqrt(-<v,v>). Throws NotTimelike if <v,v> >= -tol_proj, WrongSheet
/// if v.x0 <= 0.
HPoint project_to_hyperboloid(const MVec& v, double tol_proj = tol::proj);

// Linear isometry of the model: preserves the form (m^T J m = J) and the
// upper sheet (m00 >= 1).
struct LorentzMap {
    std::array<std::array<double, 3>, 3> m{};

    MVec apply(const MVec& v) const noexcept;
    friend LorentzMap operator*(const LorentzMap& a, const LorentzMap& b) noexcept;
};

LorentzMap identity_map() noexcept;
LorentzMap rotation(double theta) noexcept;   // rotation in the (x1,x2) plane
LorentzMap boost_x1(double rapidity) noexcept;  // boost in the (x0,x1) block

/// True iff L satisfies the LorentzMap invariants at tolerance `tolerance`.
bool is_lorentz(const LorentzMap& l, double tolerance = tol::isometry) noexcept;

/// Applies L to P and re-projects onto the hyperboloid. Throws
/// InvalidIsometry if L fails its invariants at call time.
HPoint apply_isometry(const LorentzMap& l, const HPoint& p,
                      double tolerance = tol::isometry);

using Rng = std::mt19937_64;

/// Uniform double in [lo, hi) from the top 53 bits of the generator.
double uniform(Rng& rng, double lo, double hi);

/// Random point: boost of (1,0,0) by a uniform direction and a uniform
/// hyperbolic radius in [0, radius_bound]. Deterministic given the
/// generator state.
HPoint random_point(Rng& rng, double radius_bound);

/// Random proper orthochronous isometry composed as
/// rotation * boost * rotation, rapidity uniform in [0, rapidity_bound].
LorentzMap random_isometry(Rng& rng, double rapidity_bound = 2.0);

}  // namespace hypnap
