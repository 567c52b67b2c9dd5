// hypnap: command-line front end for hyperbolic Napoleonization.
//
// Subcommands: napoleonize, iterate, certify, project.
// Exit codes: 0 success, 1 internal consistency failure, 2 input
// validation failure, 3 certification violation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "hypnap/io.hpp"
#include "hypnap/iteration.hpp"
#include "hypnap/kernels.hpp"
#include "hypnap/napoleon.hpp"
#include "hypnap/sweep.hpp"

namespace {

using namespace hypnap;

struct CommonOpts {
    std::string cls;       // --class d0,d1,d2
    std::string triangle;  // --triangle file.json
    std::string epsilon = "+1";
    std::string format = "json";
    std::string out;
    long steps = 10000;
    double tolerance = -1.0;  // per-command default when < 0
    long seed = 0;            // reserved; no command samples at present
    int threads = 0;          // 0: HYPNAP_THREADS or hardware
};

int parse_epsilon(const std::string& s) {
    if (s == "+1" || s == "1") return +1;
    if (s == "-1") return -1;
    throw Error(ErrorCode::invalid_input, "epsilon must be +1 or -1");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::invalid_input, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const CommonOpts& opt, const std::string& data) {
    if (opt.out.empty()) {
        std::cout << data;
        return;
    }
    std::ofstream out(opt.out, std::ios::binary);
    if (!out) throw Error(ErrorCode::invalid_input, "cannot open " + opt.out);
    out << data;
}

int thread_count(const CommonOpts& opt) {
    if (opt.threads > 0) return opt.threads;
    if (const char* env = std::getenv("HYPNAP_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void add_io_opts(CLI::App* cmd, CommonOpts& opt) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", opt.out, "output path (default stdout)");
    cmd->add_option("--seed", opt.seed, "rng seed (reserved)");
}

int cmd_napoleonize(const CommonOpts& opt) {
    const int eps = parse_epsilon(opt.epsilon);
    const double tol_class = opt.tolerance > 0 ? opt.tolerance : tol::classify;
    const NapoleonParams params{eps};

    CongruenceClass cls{0, 0, 0};
    std::optional<NapoleonResult> result;
    std::string input_json;
    if (!opt.triangle.empty()) {
        const Triangle t = io::parse_triangle_json(read_file(opt.triangle));
        result = napoleonize(t, params);
        cls = congruence_of(canonicalize(t));
        input_json = "\"triangle\":" + io::triangle_to_json(t);
    } else if (!opt.cls.empty()) {
        cls = canonicalize_class(io::parse_class_csv(opt.cls));
        input_json = "\"class\":" + io::class_to_json(cls);
    } else {
        throw Error(ErrorCode::invalid_input, "need --class or --triangle");
    }

    const CongruenceClass e_class =
        result ? result->e_class : napoleonize_class(cls, params);
    const double res_plus = napoleonic_residual(cls, NapoleonParams{+1});
    const double res_minus = napoleonic_residual(cls, NapoleonParams{-1});
    const Classification kind = classify(cls, tol_class);

    if (opt.format == "csv") {
        std::string out = "e0,e1,e2,residual_plus,residual_minus,kind\n";
        out += io::format_double(e_class.d0) + "," +
               io::format_double(e_class.d1) + "," +
               io::format_double(e_class.d2) + "," +
               io::format_double(res_plus) + "," +
               io::format_double(res_minus) + "," + to_string(kind.kind) + "\n";
        write_output(opt, out);
        return 0;
    }

    std::string out = "{" + input_json;
    out += ",\"epsilon\":" + std::to_string(eps);
    out += ",\"kind\":\"" + std::string(to_string(kind.kind)) + "\"";
    out += ",\"e_class\":" + io::class_to_json(e_class);
    out += ",\"residual\":{\"plus\":" + io::format_double(res_plus) +
           ",\"minus\":" + io::format_double(res_minus) + "}";
    if (result) {
        out += ",\"centroids\":[";
        const HPoint* rs[3] = {&result->r0, &result->r1, &result->r2};
        for (int i = 0; i < 3; ++i) {
            if (i) out += ',';
            out += "[" + io::format_double(rs[i]->v.x0) + "," +
                   io::format_double(rs[i]->v.x1) + "," +
                   io::format_double(rs[i]->v.x2) + "]";
        }
        out += "]";
    }
    out += "}\n";
    write_output(opt, out);
    return 0;
}

int cmd_iterate(const CommonOpts& opt) {
    if (opt.cls.empty()) {
        throw Error(ErrorCode::invalid_input, "need --class");
    }
    if (opt.steps < 1) {
        throw Error(ErrorCode::invalid_input, "steps must be >= 1");
    }
    const int eps = parse_epsilon(opt.epsilon);
    StopCriterion stop;
    stop.max_steps = opt.steps;
    if (opt.tolerance > 0) stop.tol_point_limit = opt.tolerance;

    const CongruenceClass c0 = io::parse_class_csv(opt.cls);
    const Trajectory traj = run(c0, eps, stop);
    const ContractionReport rep = contraction_report(traj);

    write_output(opt, opt.format == "csv" ? io::trajectory_csv(traj)
                                          : io::trajectory_json(traj, rep));
    std::cerr << "status: " << to_string(traj.status) << " after "
              << traj.records.back().k << " steps\n"
              << io::contraction_summary(rep) << "\n";
    return 0;
}

int cmd_certify(const CommonOpts& opt, const GridSpec& grid) {
    const kernels::Backend backend = kernels::pick_backend();
    const int threads = thread_count(opt);
    const CertifyReport rep = certify_sweep(grid, threads, backend);
    const bool pass =
        rep.violations_identity == 0 && rep.violations_positivity == 0;

    // The emitted report excludes thread count and backend so runs with
    // different parallelism produce identical bytes; those go to stderr.
    if (opt.format == "csv") {
        std::string out =
            "cells_wedge,cells_realizable,cells_positivity_checked,"
            "max_rel_err,min_rhs_nonequilateral,violations_identity,"
            "violations_positivity,pass\n";
        out += std::to_string(rep.cells_wedge) + "," +
               std::to_string(rep.cells_realizable) + "," +
               std::to_string(rep.cells_checked_pos) + "," +
               io::format_double(rep.max_rel_err) + "," +
               io::format_double(rep.min_rhs_noneq) + "," +
               std::to_string(rep.violations_identity) + "," +
               std::to_string(rep.violations_positivity) + "," +
               (pass ? "true" : "false") + "\n";
        write_output(opt, out);
    } else {
        std::string out = "{\"grid\":{\"min\":" + io::format_double(grid.min) +
                          ",\"max\":" + io::format_double(grid.max) +
                          ",\"step\":" + io::format_double(grid.step) + "}";
        out += ",\"cells_wedge\":" + std::to_string(rep.cells_wedge);
        out += ",\"cells_realizable\":" + std::to_string(rep.cells_realizable);
        out += ",\"cells_positivity_checked\":" +
               std::to_string(rep.cells_checked_pos);
        out += ",\"max_rel_err\":" + io::format_double(rep.max_rel_err);
        out += ",\"min_rhs_nonequilateral\":" +
               io::format_double(rep.min_rhs_noneq);
        out += ",\"violations\":{\"identity\":" +
               std::to_string(rep.violations_identity) +
               ",\"positivity\":" + std::to_string(rep.violations_positivity) +
               "}";
        out += std::string(",\"pass\":") + (pass ? "true" : "false") + "}\n";
        write_output(opt, out);
    }
    std::cerr << "certify: backend=" << kernels::to_string(rep.backend)
              << " threads=" << rep.threads << " "
              << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? 0 : 3;
}

void append_disk_point(std::string& csv, std::string& json, const char* label,
                       const HPoint& p, bool first) {
    const double u = p.v.x1 / (1.0 + p.v.x0);
    const double v = p.v.x2 / (1.0 + p.v.x0);
    csv += std::string(label) + "," + io::format_double(u) + "," +
           io::format_double(v) + "\n";
    if (!first) json += ',';
    json += "{\"label\":\"" + std::string(label) +
            "\",\"u\":" + io::format_double(u) +
            ",\"v\":" + io::format_double(v) + "}";
}

int cmd_project(const CommonOpts& opt) {
    const int eps = parse_epsilon(opt.epsilon);
    Triangle t{};
    if (!opt.triangle.empty()) {
        t = io::parse_triangle_json(read_file(opt.triangle));
    } else if (!opt.cls.empty()) {
        t = realize(io::parse_class_csv(opt.cls));
    } else {
        throw Error(ErrorCode::invalid_input, "need --class or --triangle");
    }
    const Triangle s = canonicalize(t);
    const NapoleonResult nr = napoleonize(s, NapoleonParams{eps});
    const HPoint q0 = apex(s.p1, s.p2, eps);
    const HPoint q1 = apex(s.p2, s.p0, eps);
    const HPoint q2 = apex(s.p0, s.p1, eps);

    std::string csv = "label,u,v\n";
    std::string json = "{\"epsilon\":" + std::to_string(eps) + ",\"points\":[";
    append_disk_point(csv, json, "P0", s.p0, true);
    append_disk_point(csv, json, "P1", s.p1, false);
    append_disk_point(csv, json, "P2", s.p2, false);
    append_disk_point(csv, json, "Q0", q0, false);
    append_disk_point(csv, json, "Q1", q1, false);
    append_disk_point(csv, json, "Q2", q2, false);
    append_disk_point(csv, json, "R0", nr.r0, false);
    append_disk_point(csv, json, "R1", nr.r1, false);
    append_disk_point(csv, json, "R2", nr.r2, false);
    json += "]}\n";

    write_output(opt, opt.format == "csv" ? csv : json);
    return 0;
}

void print_error(ErrorCode code, const std::string& message) {
    std::cerr << "{\"error\":\"" << to_string(code) << "\",\"message\":\""
              << message << "\"}\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"triangle geometry and Napoleonization on the hyperboloid"};
    app.require_subcommand(1);

    CommonOpts opt;
    GridSpec grid;

    CLI::App* nap = app.add_subcommand(
        "napoleonize", "Napoleonization of a class or triangle");
    nap->add_option("--class", opt.cls, "congruence class d0,d1,d2");
    nap->add_option("--triangle", opt.triangle, "triangle JSON file");
    nap->add_option("--epsilon", opt.epsilon, "flank orientation (+1|-1)");
    nap->add_option("--tol", opt.tolerance, "classification tolerance");
    add_io_opts(nap, opt);

    CLI::App* it = app.add_subcommand("iterate", "repeated Napoleonization");
    it->add_option("--class", opt.cls, "start class d0,d1,d2");
    it->add_option("--epsilon", opt.epsilon, "flank orientation (+1|-1)");
    it->add_option("--steps", opt.steps, "maximum number of steps");
    it->add_option("--tol", opt.tolerance, "point-limit stop tolerance");
    add_io_opts(it, opt);

    CLI::App* cert = app.add_subcommand(
        "certify", "grid certification of the non-existence identity");
    cert->add_option("--grid-min", grid.min, "smallest d value");
    cert->add_option("--grid-max", grid.max, "largest d value");
    cert->add_option("--grid-step", grid.step, "grid step");
    cert->add_option("--threads", opt.threads, "worker threads");
    add_io_opts(cert, opt);

    CLI::App* proj = app.add_subcommand(
        "project", "Poincare-disk coordinates of the construction");
    proj->add_option("--class", opt.cls, "congruence class d0,d1,d2");
    proj->add_option("--triangle", opt.triangle, "triangle JSON file");
    proj->add_option("--epsilon", opt.epsilon, "flank orientation (+1|-1)");
    add_io_opts(proj, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        print_error(hypnap::ErrorCode::invalid_input, e.what());
        return 2;
    }

    try {
        if (nap->parsed()) return cmd_napoleonize(opt);
        if (it->parsed()) return cmd_iterate(opt);
        if (cert->parsed()) return cmd_certify(opt, grid);
        if (proj->parsed()) return cmd_project(opt);
    } catch (const hypnap::Error& e) {
        print_error(e.code(), e.what());
        return e.code() == hypnap::ErrorCode::consistency_failure ? 1 : 2;
    } catch (const std::exception& e) {
        print_error(hypnap::ErrorCode::invalid_input, e.what());
        return 1;
    }
    return 0;
}
