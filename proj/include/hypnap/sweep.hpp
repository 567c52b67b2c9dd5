#pragma once

#include "hypnap/kernels.hpp"

namespace hypnap {

// Wedge sweep certifying the Theorem 1 identity on a grid. Only the wedge
// d0 >= d1 >= d2 is enumerated (the certificate is symmetric in the class),
// restricted to realizable cells.
struct GridSpec {
    double min = 1.7420508075688772;  // sqrt(3) + 0.01
    double max = 6.0;
    double step = 0.05;
};

struct CertifyReport {
    long cells_wedge = 0;        // wedge cells enumerated
    long cells_realizable = 0;   // chi radicand >= -1e-9
    long cells_checked_pos = 0;  // realizable with max gap >= 0.01
    double max_rel_err = 0.0;    // max |lhs-rhs| / max(1,|rhs|)
    double min_rhs_noneq = 0.0;  // min rhs over the positivity cells
    long violations_identity = 0;
    long violations_positivity = 0;
    kernels::Backend backend = kernels::Backend::scalar;
    int threads = 1;
};

/// Runs the sweep with `threads` workers; the report is identical for any
/// thread count (slices are merged in slice order). Throws on an invalid
/// grid (min < sqrt(3), step <= 0, max < min).
CertifyReport certify_sweep(const GridSpec& grid, int threads,
                            kernels::Backend backend);

}  // namespace hypnap
