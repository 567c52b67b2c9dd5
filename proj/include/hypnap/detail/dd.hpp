#pragma once

// Minimal double-double (compensated) arithmetic. The certificate identity
// check cancels ~1e8-sized products down to zero on the equilateral
// diagonal; plain doubles leave ~1e-8 of noise there, an order of magnitude
// over the 1e-9 contract. Double-double keeps the evaluation error near
// 1e-24 absolute at that scale.
//
// two_prod relies on a correctly rounded fma (hardware FMA when compiled
// with -mfma, otherwise the libm soft implementation).

#include <cmath>

namespace hypnap::detail {

struct DD {
    double hi = 0.0;
    double lo = 0.0;
};

// Knuth TwoSum, branch-free and valid for any magnitudes.
inline DD two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    const double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

// Requires |a| >= |b| or a == 0.
inline DD fast_two_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline DD dd_add(const DD& a, const DD& b) {
    DD s = two_sum(a.hi, b.hi);
    const DD t = two_sum(a.lo, b.lo);
    double lo = s.lo + t.hi;
    s = fast_two_sum(s.hi, lo);
    lo = s.lo + t.lo;
    return fast_two_sum(s.hi, lo);
}

inline DD dd_neg(const DD& a) { return {-a.hi, -a.lo}; }

inline DD dd_sub(const DD& a, const DD& b) { return dd_add(a, dd_neg(b)); }

inline DD dd_mul(const DD& a, const DD& b) {
    DD p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return fast_two_sum(p.hi, p.lo);
}

inline DD dd_mul_d(const DD& a, double b) {
    DD p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return fast_two_sum(p.hi, p.lo);
}

inline DD dd_from(double a) { return {a, 0.0}; }

inline double dd_to_double(const DD& a) { return a.hi + a.lo; }

}  // namespace hypnap::detail
