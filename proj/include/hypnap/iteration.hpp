#pragma once

#include <array>
#include <vector>

#include "hypnap/triangle.hpp"

namespace hypnap {

// One step of an iterated-Napoleonization run. `cls` is canonicalized
// (d0 maximal). The shifted coordinates s_i = d_i^2 - 3 are carried
// alongside: near the point limit they hold more relative precision than
// the d values can.
struct TrajectoryRecord {
    long k = 0;
    CongruenceClass cls{0, 0, 0};
    std::array<double, 3> s{0, 0, 0};
    double alpha = 0, chi = 0, gamma = 0;
    double r_d = 0;
    double r_i_max = 0;
    double mu = 0;        // max_i d_i^2 - 3
    double gap_max = 0;   // max pairwise |d_i - d_j|
    double ratio_mu = 0;  // mu_k / mu_{k-1}; NaN when vacuous or k = 0
    double ratio_gap = 0; // D-gap_max ratio; NaN when vacuous or k = 0
};

struct StopCriterion {
    long max_steps = 10000;
    double tol_point_limit = 1e-6;  // on max_i |d_i - sqrt(3)|
};

enum class RunStatus { PointLimitReached, MaxSteps };

const char* to_string(RunStatus s) noexcept;

struct Trajectory {
    int epsilon = +1;
    RunStatus status = RunStatus::MaxSteps;
    std::vector<TrajectoryRecord> records;
};

struct ContractionReport {
    int epsilon = +1;
    long steps = 0;
    double max_ratio_mu = 0;   // NaN if every step was vacuous
    double max_ratio_gap = 0;  // NaN likewise
    long violations_mu = 0;      // ratio_mu > 7/12 + 1e-9       (eps = +1 path)
    long violations_gap = 0;     // ratio_gap > rho + 1e-9       (eps = -1 path)
    long violations_ratest = 0;  // per-step bound (ratest)      (eps = -1 path)
    bool pass = false;
};

// Contraction constants from the two convergence arguments.
inline constexpr double mu_contraction = 7.0 / 12.0;
double rho_bound() noexcept;  // 2/3 + 2/27 + 1/(3 sqrt(3)) ~ 0.93319

/// r_d = (4/gamma)(-2 alpha (d0 d1 d2 - d0-d1-d2) - 2 eps chi (d0 d1 + d1 d2 + d2 d0 - 1)).
/// Strictly positive for eps = -1 away from the point limit.
double r_d_of(const CongruenceClass& c, int epsilon);

/// r_i = |r_d| / (d_{i+1} + d_{i+2}); each bounded by rho.
std::array<double, 3> r_i_of(const CongruenceClass& c, int epsilon);

/// One Napoleonization step in class space, re-canonicalized; the returned
/// record describes the new class (k = 0, ratio fields NaN). Throws
/// Unrealizable on invalid input.
TrajectoryRecord step(const CongruenceClass& c, int epsilon);

/// Iterates until the point limit or max_steps, recording every iterate
/// (k = 0 is the start). cross_check_every > 0 replays one step through the
/// point-space pipeline every that-many steps while the class is far enough
/// from degenerate; disagreement throws ConsistencyFailure.
Trajectory run(const CongruenceClass& c0, int epsilon,
               const StopCriterion& stop, int cross_check_every = 10);

/// Per-step contraction ratios versus the paper bounds. Requires at least
/// two records, else InsufficientData. Steps whose denominator is below
/// 1e-12 are vacuous and skipped.
ContractionReport contraction_report(const Trajectory& t);

}  // namespace hypnap
