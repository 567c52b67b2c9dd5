#include "hypnap/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>
#include <vector>

#include "hypnap/detail/class_formulas.hpp"
#include "hypnap/errors.hpp"

namespace hypnap {

namespace {

struct SliceStats {
    long wedge = 0;
    long realizable = 0;
    long checked_pos = 0;
    double max_rel_err = 0.0;
    double min_rhs_noneq = std::numeric_limits<double>::infinity();
    long violations_identity = 0;
    long violations_positivity = 0;
};

constexpr double identity_tol = 1e-9;
constexpr double realizable_band = 1e-9;
constexpr double equilateral_gap = 0.01;

// One d0-slice: all (d1, d2) with d0 >= d1 >= d2.
SliceStats run_slice(const std::vector<double>& axis, std::size_t i0,
                     kernels::Backend backend) {
    SliceStats st;
    const double d0 = axis[i0];
    std::vector<double> a0, a1, a2, lhs, rhs, rad;
    for (std::size_t i1 = 0; i1 <= i0; ++i1) {
        const std::size_t n = i1 + 1;
        a0.assign(n, d0);
        a1.assign(n, axis[i1]);
        a2.assign(axis.begin(), axis.begin() + static_cast<long>(n));
        lhs.resize(n);
        rhs.resize(n);
        rad.resize(n);
        kernels::certificate_batch(backend, a0.data(), a1.data(), a2.data(), n,
                                   lhs.data(), rhs.data(), rad.data());
        for (std::size_t j = 0; j < n; ++j) {
            ++st.wedge;
            if (rad[j] < -realizable_band) continue;
            ++st.realizable;
            const double denom = std::max(1.0, std::abs(rhs[j]));
            const double rel = std::abs(lhs[j] - rhs[j]) / denom;
            st.max_rel_err = std::max(st.max_rel_err, rel);
            if (rel > identity_tol) ++st.violations_identity;
            const double gap = d0 - a2[j];  // largest pairwise gap in the wedge
            if (gap >= equilateral_gap) {
                ++st.checked_pos;
                st.min_rhs_noneq = std::min(st.min_rhs_noneq, rhs[j]);
                if (!(rhs[j] > 0.0)) ++st.violations_positivity;
            }
        }
    }
    return st;
}

}  // namespace

CertifyReport certify_sweep(const GridSpec& grid, int threads,
                            kernels::Backend backend) {
    if (!(grid.min >= detail::sqrt3)) {
        throw Error(ErrorCode::invalid_input, "grid min must be >= sqrt(3)");
    }
    if (!(grid.step > 0.0) || !(grid.max >= grid.min)) {
        throw Error(ErrorCode::invalid_input, "invalid grid bounds");
    }

    std::vector<double> axis;
    for (long k = 0;; ++k) {
        const double v = grid.min + static_cast<double>(k) * grid.step;
        if (v > grid.max + 1e-12) break;
        axis.push_back(v);
    }

    const int nthreads =
        std::max(1, std::min<int>(threads, static_cast<int>(axis.size())));
    std::vector<SliceStats> slices(axis.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= axis.size()) return;
            slices[i] = run_slice(axis, i, backend);
        }
    };
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nthreads));
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }

    // Merge in slice order; all statistics are order-insensitive, so the
    // report matches the single-thread run exactly.
    CertifyReport rep;
    rep.backend = backend;
    rep.threads = nthreads;
    rep.min_rhs_noneq = std::numeric_limits<double>::infinity();
    for (const SliceStats& st : slices) {
        rep.cells_wedge += st.wedge;
        rep.cells_realizable += st.realizable;
        rep.cells_checked_pos += st.checked_pos;
        rep.max_rel_err = std::max(rep.max_rel_err, st.max_rel_err);
        rep.min_rhs_noneq = std::min(rep.min_rhs_noneq, st.min_rhs_noneq);
        rep.violations_identity += st.violations_identity;
        rep.violations_positivity += st.violations_positivity;
    }
    if (rep.cells_checked_pos == 0) rep.min_rhs_noneq = 0.0;
    return rep;
}

}  // namespace hypnap
