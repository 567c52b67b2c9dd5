#include "hypnap/iteration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hypnap/detail/class_formulas.hpp"
#include "hypnap/napoleon.hpp"

namespace hypnap {

using detail::ShiftedState;
using detail::sqrt3;

namespace {

constexpr double nan_v = std::numeric_limits<double>::quiet_NaN();
constexpr double vacuous_denominator = 1e-12;

// Direct-form stepping is fine while mu is large; below this the shifted
// rearrangement preserves relative precision of the slow decay.
constexpr double shifted_threshold = 1e-4;

// Margin (in s = d^2 - 3) under which the point-space replay is skipped:
// realize() refuses nearly point-degenerate classes.
constexpr double cross_check_margin = 1e-3;

double mu_of(const ShiftedState& s) {
    return std::max({s.s0, s.s1, s.s2});
}

ShiftedState canonical(const ShiftedState& s) {
    if (s.s0 >= s.s1 && s.s0 >= s.s2) return s;
    if (s.s1 >= s.s2) return {s.s1, s.s2, s.s0};
    return {s.s2, s.s0, s.s1};
}

ShiftedState from_class(const CongruenceClass& c) {
    const auto f = [](double d) { return (d - sqrt3) * (d + sqrt3); };
    return {f(c.d0), f(c.d1), f(c.d2)};
}

// All class scalars from the shifted state, arranged so that nothing
// cancels near the point limit (t_i = d_i - sqrt(3) stays positive).
struct ShiftedScalars {
    double d[3];
    double alpha, chi, gamma, radicand;
    double r_d, residual;
    double r_i[3];
};

ShiftedScalars scalars_of(const ShiftedState& st, int eps) {
    ShiftedScalars out{};
    const double s[3] = {st.s0, st.s1, st.s2};
    double t[3];
    for (int i = 0; i < 3; ++i) {
        out.d[i] = std::sqrt(3.0 + s[i]);
        t[i] = s[i] / (out.d[i] + sqrt3);
    }
    const double sum_s = s[0] + s[1] + s[2];
    out.alpha = -0.5 * (8.0 + sum_s);
    out.radicand = detail::chi_radicand_shifted(s[0], s[1], s[2]);
    out.chi = 0.5 * std::sqrt(std::max(out.radicand, 0.0));
    out.gamma = 3.0 * (4.0 + s[0]) * (4.0 + s[1]) * (4.0 + s[2]);

    const double sum_t = t[0] + t[1] + t[2];
    const double sum_tt = t[0] * t[1] + t[1] * t[2] + t[2] * t[0];
    const double prod_t = t[0] * t[1] * t[2];
    // sum(d) - prod(d) = -(2 sum_t + sqrt3 sum_tt + prod_t)
    // 1 - sum(d_i d_j)  = -(8 + 2 sqrt3 sum_t + sum_tt)
    const double sum_minus_prod = -(2.0 * sum_t + sqrt3 * sum_tt + prod_t);
    const double one_minus_pairs = -(8.0 + 2.0 * sqrt3 * sum_t + sum_tt);
    out.residual = out.alpha * sum_minus_prod +
                   static_cast<double>(eps) * out.chi * one_minus_pairs;
    out.r_d = 8.0 / out.gamma * out.residual;
    for (int i = 0; i < 3; ++i) {
        out.r_i[i] = std::abs(out.r_d) / (out.d[(i + 1) % 3] + out.d[(i + 2) % 3]);
    }
    return out;
}

ShiftedState advance(const ShiftedState& s, int eps) {
    if (mu_of(s) >= shifted_threshold) {
        const double d0 = std::sqrt(3.0 + s.s0);
        const double d1 = std::sqrt(3.0 + s.s1);
        const double d2 = std::sqrt(3.0 + s.s2);
        const auto sc = detail::class_scalars(d0, d1, d2);
        const double chi = std::isnan(sc.chi) ? 0.0 : sc.chi;
        const auto e = detail::e_class(d0, d1, d2, sc.alpha, chi, sc.gamma, eps);
        const auto to_s = [](double d) { return (d - sqrt3) * (d + sqrt3); };
        return {to_s(e[0]), to_s(e[1]), to_s(e[2])};
    }
    return detail::shifted_step(s, eps);
}

TrajectoryRecord record_of(const ShiftedState& st, int eps) {
    const ShiftedScalars sc = scalars_of(st, eps);
    TrajectoryRecord r;
    r.cls = {sc.d[0], sc.d[1], sc.d[2]};
    r.s = {st.s0, st.s1, st.s2};
    r.alpha = sc.alpha;
    r.chi = sc.chi;
    r.gamma = sc.gamma;
    r.r_d = sc.r_d;
    r.r_i_max = std::max({sc.r_i[0], sc.r_i[1], sc.r_i[2]});
    r.mu = mu_of(st);
    const double s[3] = {st.s0, st.s1, st.s2};
    double gap = 0.0;
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3;
        gap = std::max(gap, std::abs(s[i] - s[j]) / (sc.d[i] + sc.d[j]));
    }
    r.gap_max = gap;
    r.ratio_mu = nan_v;
    r.ratio_gap = nan_v;
    return r;
}

double d_gap_max(const ShiftedState& st) {
    return std::max({std::abs(st.s0 - st.s1), std::abs(st.s1 - st.s2),
                     std::abs(st.s2 - st.s0)});
}

bool at_point_limit(const ShiftedState& st, double tol) {
    const double worst = mu_of(st);
    return worst / (std::sqrt(3.0 + worst) + sqrt3) < tol;
}

void check_iterate_realizable(const ShiftedState& st) {
    if (std::min({st.s0, st.s1, st.s2}) < -1e-12 ||
        detail::chi_radicand_shifted(st.s0, st.s1, st.s2) < -tol::real_band) {
        throw Error(ErrorCode::unrealizable,
                    "iterate left the realizable set");
    }
}

}  // namespace

const char* to_string(RunStatus s) noexcept {
    return s == RunStatus::PointLimitReached ? "PointLimitReached" : "MaxSteps";
}

double rho_bound() noexcept {
    return 2.0 / 3.0 + 2.0 / 27.0 + 1.0 / (3.0 * sqrt3);
}

double r_d_of(const CongruenceClass& c, int epsilon) {
    validate_params(NapoleonParams{epsilon});
    require_realizable(c);
    return scalars_of(from_class(canonicalize_class(c)), epsilon).r_d;
}

std::array<double, 3> r_i_of(const CongruenceClass& c, int epsilon) {
    validate_params(NapoleonParams{epsilon});
    require_realizable(c);
    const ShiftedScalars sc = scalars_of(from_class(c), epsilon);
    return {sc.r_i[0], sc.r_i[1], sc.r_i[2]};
}

TrajectoryRecord step(const CongruenceClass& c, int epsilon) {
    validate_params(NapoleonParams{epsilon});
    require_realizable(c);
    const ShiftedState next =
        canonical(advance(from_class(canonicalize_class(c)), epsilon));
    check_iterate_realizable(next);
    return record_of(next, epsilon);
}

Trajectory run(const CongruenceClass& c0, int epsilon,
               const StopCriterion& stop, int cross_check_every) {
    validate_params(NapoleonParams{epsilon});
    if (stop.max_steps < 1) {
        throw Error(ErrorCode::invalid_input, "max_steps must be >= 1");
    }
    require_realizable(c0);

    Trajectory out;
    out.epsilon = epsilon;
    ShiftedState state = canonical(from_class(canonicalize_class(c0)));
    TrajectoryRecord rec = record_of(state, epsilon);
    rec.k = 0;
    out.records.push_back(rec);

    for (long k = 1; k <= stop.max_steps; ++k) {
        if (at_point_limit(state, stop.tol_point_limit)) {
            out.status = RunStatus::PointLimitReached;
            return out;
        }
        const double prev_mu = mu_of(state);
        const double prev_gap = d_gap_max(state);
        const ShiftedState next = canonical(advance(state, epsilon));
        check_iterate_realizable(next);

        if (cross_check_every > 0 && k % cross_check_every == 0 &&
            std::min({state.s0, state.s1, state.s2}) > cross_check_margin) {
            // Replay this step through points: realize -> napoleonize
            // cross-checks the closed form internally as well.
            const ShiftedScalars sc = scalars_of(state, epsilon);
            const Triangle t = realize({sc.d[0], sc.d[1], sc.d[2]});
            const NapoleonResult nr = napoleonize(t, NapoleonParams{epsilon});
            const CongruenceClass got = canonicalize_class(nr.e_class);
            const ShiftedScalars nx = scalars_of(next, epsilon);
            const double mismatch = std::max({std::abs(got.d0 - nx.d[0]),
                                              std::abs(got.d1 - nx.d[1]),
                                              std::abs(got.d2 - nx.d[2])});
            if (mismatch > 1e-8) {
                throw Error(ErrorCode::consistency_failure,
                            "class-space iterate disagrees with point replay");
            }
        }

        state = next;
        rec = record_of(state, epsilon);
        rec.k = k;
        rec.ratio_mu =
            prev_mu >= vacuous_denominator ? rec.mu / prev_mu : nan_v;
        const double gap = d_gap_max(state);
        rec.ratio_gap =
            prev_gap >= vacuous_denominator ? gap / prev_gap : nan_v;
        out.records.push_back(rec);
    }
    out.status = at_point_limit(state, stop.tol_point_limit)
                     ? RunStatus::PointLimitReached
                     : RunStatus::MaxSteps;
    return out;
}

ContractionReport contraction_report(const Trajectory& t) {
    if (t.records.size() < 2) {
        throw Error(ErrorCode::insufficient_data,
                    "contraction report needs at least two records");
    }
    ContractionReport rep;
    rep.epsilon = t.epsilon;
    rep.steps = static_cast<long>(t.records.size()) - 1;
    rep.max_ratio_mu = nan_v;
    rep.max_ratio_gap = nan_v;

    const double mu_bound = mu_contraction + 1e-9;
    const double gap_bound = rho_bound() + 1e-9;
    for (std::size_t i = 1; i < t.records.size(); ++i) {
        const TrajectoryRecord& prev = t.records[i - 1];
        const TrajectoryRecord& cur = t.records[i];
        if (!std::isnan(cur.ratio_mu)) {
            if (std::isnan(rep.max_ratio_mu) || cur.ratio_mu > rep.max_ratio_mu) {
                rep.max_ratio_mu = cur.ratio_mu;
            }
            if (cur.ratio_mu > mu_bound) ++rep.violations_mu;
        }
        if (!std::isnan(cur.ratio_gap)) {
            if (std::isnan(rep.max_ratio_gap) ||
                cur.ratio_gap > rep.max_ratio_gap) {
                rep.max_ratio_gap = cur.ratio_gap;
            }
            if (cur.ratio_gap > gap_bound) ++rep.violations_gap;
        }
        if (t.epsilon == -1) {
            // (ratest): s0' <= 16 D0 s0 / (3 (D1+1)(D2+1)) + 1e-9, with
            // D_i = s_i + 3 taken from the previous record.
            const double bound = 16.0 * (prev.s[0] + 3.0) * prev.s[0] /
                                 (3.0 * (prev.s[1] + 4.0) * (prev.s[2] + 4.0));
            if (cur.s[0] > bound + 1e-9) ++rep.violations_ratest;
        }
    }
    if (t.epsilon == +1) {
        rep.pass = rep.violations_mu == 0;
    } else {
        rep.pass = rep.violations_gap == 0 && rep.violations_ratest == 0;
    }
    return rep;
}

}  // namespace hypnap
