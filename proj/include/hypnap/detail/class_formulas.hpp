#pragma once

// Shared per-class closed forms in the congruence coordinates (d0,d1,d2).
// These inline kernels are the single source of truth for the class-space
// Napoleonization map; the napoleon module, the batch kernels and the
// iteration stepper all call into them.

#include <algorithm>
#include <array>
#include <cmath>

namespace hypnap::detail {

inline constexpr double sqrt3 = 1.7320508075688772935274463415059;

struct ClassScalars {
    double alpha;     // 2*alpha = 1 - d0^2 - d1^2 - d2^2
    double chi;       // nonnegative root, 2*chi = sqrt(radicand)
    double gamma;     // 3*(d0^2+1)(d1^2+1)(d2^2+1)
    double radicand;  // argument of the chi square root
};

// Radicand of the chi closed form, as a polynomial in the squares D_i.
inline double chi_radicand(double D0, double D1, double D2) {
    return 3.0 * (D0 + D1 + D2) -
           (D0 * D1 + D1 * D2 + D2 * D0 + D0 * D0 + D1 * D1 + D2 * D2) +
           D0 * D1 * D2;
}

// Same radicand in the shifted variables s_i = D_i - 3. Exact rearrangement:
//   2(s0 s1 + s1 s2 + s2 s0) - (s0^2 + s1^2 + s2^2) + s0 s1 s2.
// All terms are O(s^2), so relative precision survives near the point limit
// where the direct form cancels 27-sized terms down to ~s^2.
inline double chi_radicand_shifted(double s0, double s1, double s2) {
    return 2.0 * (s0 * s1 + s1 * s2 + s2 * s0) -
           (s0 * s0 + s1 * s1 + s2 * s2) + s0 * s1 * s2;
}

inline ClassScalars class_scalars(double d0, double d1, double d2,
                                  double clamp_band = 1e-9) {
    const double D0 = d0 * d0, D1 = d1 * d1, D2 = d2 * d2;
    ClassScalars s;
    s.alpha = 0.5 * (1.0 - D0 - D1 - D2);
    s.radicand = chi_radicand(D0, D1, D2);
    const double r = (s.radicand < 0.0 && s.radicand >= -clamp_band)
                         ? 0.0
                         : s.radicand;
    s.chi = r >= 0.0 ? 0.5 * std::sqrt(r) : std::nan("");
    s.gamma = 3.0 * (D0 + 1.0) * (D1 + 1.0) * (D2 + 1.0);
    return s;
}

// Napoleonic residual:  alpha*(d0+d1+d2 - d0 d1 d2) + eps*chi*(1 - d0 d1 - d1 d2 - d2 d0).
inline double residual_value(double d0, double d1, double d2, double alpha,
                             double chi, int eps) {
    const double a = d0 + d1 + d2 - d0 * d1 * d2;
    const double b = 1.0 - d0 * d1 - d1 * d2 - d2 * d0;
    return alpha * a + static_cast<double>(eps) * chi * b;
}

// r_d = (4/gamma) * ( -2 alpha (d0 d1 d2 - d0 - d1 - d2) - 2 eps chi (d0 d1 + d1 d2 + d2 d0 - 1) )
//     = (8/gamma) * residual.
inline double r_d_value(double d0, double d1, double d2, double alpha,
                        double chi, double gamma, int eps) {
    return 8.0 / gamma * residual_value(d0, d1, d2, alpha, chi, eps);
}

// One entry of the class-space Napoleonization: e_i from the closed form
//   gamma <R_j,R_k> = (D_i+1)(4(alpha d_j d_k + eps chi (d_j+d_k)) - (D_j-1)(D_k-1) + 2(D_i-1)),
//   e_i = sqrt(1 - 2 <R_j,R_k>),
// written symmetrically in (d_j, d_k) so equal flanks give bitwise-equal entries.
inline double e_entry(double di, double dj, double dk, double alpha,
                      double chi, double gamma, int eps) {
    const double Di = di * di, Dj = dj * dj, Dk = dk * dk;
    const double bracket = 4.0 * (alpha * (dj * dk) +
                                  static_cast<double>(eps) * chi * (dj + dk)) -
                           (Dj - 1.0) * (Dk - 1.0) + 2.0 * (Di - 1.0);
    const double inner = (Di + 1.0) * bracket / gamma;
    const double esq = 1.0 - 2.0 * inner;
    return std::sqrt(std::max(esq, 0.0));
}

inline std::array<double, 3> e_class(double d0, double d1, double d2,
                                     double alpha, double chi, double gamma,
                                     int eps) {
    return {e_entry(d0, d1, d2, alpha, chi, gamma, eps),
            e_entry(d1, d2, d0, alpha, chi, gamma, eps),
            e_entry(d2, d0, d1, alpha, chi, gamma, eps)};
}

// Shifted-variable Napoleonization step: maps s_i = d_i^2 - 3 to the next
// s_i without forming e^2 near 3. Uses the exact rearrangement
//   e_i^2 - 3 = 2/(3 (D_j+1)(D_k+1)) * ( -4 eps chi (d_j+d_k)
//               + 2[ (d_j d_k - 1) s_i + (s_j + s_k - A) + (3 + s_j + s_k - A) A ] ),
// where A = d_j d_k - 3 = (3(s_j+s_k) + s_j s_k)/(d_j d_k + 3).
// For eps = -1 every term is nonnegative, so the slow contraction toward the
// point limit keeps full relative precision.
struct ShiftedState {
    double s0, s1, s2;
};

inline double shifted_entry(double si, double sj, double sk, double chi,
                            int eps) {
    const double dj = std::sqrt(3.0 + sj);
    const double dk = std::sqrt(3.0 + sk);
    const double djk = dj * dk;
    const double A = (3.0 * (sj + sk) + sj * sk) / (djk + 3.0);
    const double B = (djk - 1.0) * si + (sj + sk - A) + (3.0 + sj + sk - A) * A;
    const double bracket = 2.0 * B - 4.0 * static_cast<double>(eps) * chi * (dj + dk);
    const double denom = 3.0 * (4.0 + sj) * (4.0 + sk);
    return std::max(2.0 * bracket / denom, 0.0);
}

inline ShiftedState shifted_step(const ShiftedState& s, int eps) {
    const double rad = chi_radicand_shifted(s.s0, s.s1, s.s2);
    const double chi = 0.5 * std::sqrt(std::max(rad, 0.0));
    return {shifted_entry(s.s0, s.s1, s.s2, chi, eps),
            shifted_entry(s.s1, s.s2, s.s0, chi, eps),
            shifted_entry(s.s2, s.s0, s.s1, chi, eps)};
}

}  // namespace hypnap::detail
