// End-to-end checks of the hypnap binary. The path to the executable comes
// from the HYPNAP_CLI environment variable (set by ctest).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hypnap/io.hpp"

namespace {

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* cli_path() { return std::getenv("HYPNAP_CLI"); }

CliResult run_cli(const std::string& args) {
    static int counter = 0;
    const std::string out_path = "cli_stdout_" + std::to_string(counter) + ".txt";
    const std::string err_path = "cli_stderr_" + std::to_string(counter) + ".txt";
    ++counter;
    const std::string cmd = std::string("\"") + cli_path() + "\" " + args +
                            " >" + out_path + " 2>" + err_path;
    const int raw = std::system(cmd.c_str());
    CliResult r;
    r.exit_code = WEXITSTATUS(raw);
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

}  // namespace

TEST_CASE("napoleonize by class") {
    REQUIRE(cli_path() != nullptr);

    SUBCASE("(2,2,2) eps=+1 collapses; kind equilateral") {
        const CliResult r = run_cli("napoleonize --class 2,2,2 --epsilon +1");
        REQUIRE(r.exit_code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["kind"] == "equilateral");
        for (int i = 0; i < 3; ++i) {
            CHECK(std::abs(j["e_class"]["d"][i].get<double>() -
                           1.7320508075688772) <= 1e-10);
        }
        CHECK(std::abs(j["residual"]["plus"].get<double>()) <= 1e-12);
    }

    SUBCASE("(2,2,2) eps=-1 gives e^2 = 289/75") {
        const CliResult r = run_cli("napoleonize --class 2,2,2 --epsilon -1");
        REQUIRE(r.exit_code == 0);
        const auto j = nlohmann::json::parse(r.out);
        for (int i = 0; i < 3; ++i) {
            const double e = j["e_class"]["d"][i].get<double>();
            CHECK(std::abs(e * e - 289.0 / 75.0) <= 1e-10);
        }
    }

    SUBCASE("unrealizable class exits 2 with a machine-readable error") {
        const CliResult r = run_cli("napoleonize --class 3,1.8,1.8");
        CHECK(r.exit_code == 2);
        const auto j = nlohmann::json::parse(r.err);
        CHECK(j["error"] == "unrealizable");
    }

    SUBCASE("csv format") {
        const CliResult r =
            run_cli("napoleonize --class 2,2,2 --epsilon -1 --format csv");
        REQUIRE(r.exit_code == 0);
        CHECK(r.out.rfind("e0,e1,e2,residual_plus,residual_minus,kind\n", 0) ==
              0);
        CHECK(r.out.find("equilateral") != std::string::npos);
    }
}

TEST_CASE("napoleonize by triangle file") {
    REQUIRE(cli_path() != nullptr);
    const hypnap::Triangle t = hypnap::realize({2.4, 2.1, 1.9});
    const std::string path = "cli_triangle_in.json";
    {
        std::ofstream f(path, std::ios::binary);
        f << hypnap::io::triangle_to_json(t);
    }
    const CliResult r =
        run_cli("napoleonize --triangle " + path + " --epsilon +1");
    std::remove(path.c_str());
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.contains("centroids"));
    CHECK(j["centroids"].size() == 3);
    // Centroids are on the hyperboloid.
    for (const auto& v : j["centroids"]) {
        const double x0 = v[0].get<double>(), x1 = v[1].get<double>(),
                     x2 = v[2].get<double>();
        CHECK(std::abs(-x0 * x0 + x1 * x1 + x2 * x2 + 1.0) <= 1e-11);
    }
}

TEST_CASE("iterate") {
    REQUIRE(cli_path() != nullptr);

    SUBCASE("csv trajectory, terminal status, determinism") {
        const std::string args =
            "iterate --class 2.5,2.1,1.9 --epsilon +1 --steps 100 "
            "--format csv --out cli_traj_a.csv";
        const CliResult r1 = run_cli(args);
        REQUIRE(r1.exit_code == 0);
        CHECK(r1.err.find("PointLimitReached") != std::string::npos);
        CHECK(r1.err.find("PASS") != std::string::npos);

        const CliResult r2 = run_cli(
            "iterate --class 2.5,2.1,1.9 --epsilon +1 --steps 100 "
            "--format csv --out cli_traj_b.csv");
        REQUIRE(r2.exit_code == 0);
        const std::string a = slurp("cli_traj_a.csv");
        const std::string b = slurp("cli_traj_b.csv");
        std::remove("cli_traj_a.csv");
        std::remove("cli_traj_b.csv");
        CHECK(a == b);  // byte-identical reruns
        CHECK(a.rfind("k,d0,d1,d2,alpha,chi,r_d,mu,gap_max,ratio_mu,ratio_gap\n",
                      0) == 0);
    }

    SUBCASE("(2,2,2) eps=+1 is one-step terminal") {
        const CliResult r =
            run_cli("iterate --class 2,2,2 --epsilon +1 --format csv");
        REQUIRE(r.exit_code == 0);
        std::size_t lines = 0;
        for (char ch : r.out) lines += ch == '\n';
        CHECK(lines == 3);  // header + k=0 + k=1
        CHECK(r.err.find("PointLimitReached") != std::string::npos);
    }

    SUBCASE("invalid input exits 2") {
        CHECK(run_cli("iterate --class 3,1.8,1.8").exit_code == 2);
        CHECK(run_cli("iterate --class 2,2").exit_code == 2);
    }
}

TEST_CASE("certify") {
    REQUIRE(cli_path() != nullptr);

    SUBCASE("small grid passes; thread count does not change the bytes") {
        const std::string grid =
            "--grid-min 1.75 --grid-max 3.0 --grid-step 0.05";
        const CliResult one =
            run_cli("certify " + grid + " --threads 1 --out cli_cert_1.json");
        const CliResult two =
            run_cli("certify " + grid + " --threads 2 --out cli_cert_2.json");
        REQUIRE(one.exit_code == 0);
        REQUIRE(two.exit_code == 0);
        const std::string a = slurp("cli_cert_1.json");
        const std::string b = slurp("cli_cert_2.json");
        std::remove("cli_cert_1.json");
        std::remove("cli_cert_2.json");
        CHECK(a == b);
        const auto j = nlohmann::json::parse(a);
        CHECK(j["pass"] == true);
        CHECK(j["violations"]["identity"] == 0);
        CHECK(j["violations"]["positivity"] == 0);
        CHECK(j["cells_realizable"].get<long>() > 0);
        CHECK(j["min_rhs_nonequilateral"].get<double>() > 0.0);
    }

    SUBCASE("grid below sqrt(3) exits 2") {
        CHECK(run_cli("certify --grid-min 1.0").exit_code == 2);
    }

    SUBCASE("degenerate one-cell grid at (2,2,2) is not a violation") {
        const CliResult r = run_cli(
            "certify --grid-min 2 --grid-max 2 --grid-step 0.05");
        REQUIRE(r.exit_code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["cells_wedge"] == 1);
        CHECK(j["cells_realizable"] == 1);
        CHECK(j["cells_positivity_checked"] == 0);
        CHECK(j["violations"]["identity"] == 0);
        CHECK(j["max_rel_err"].get<double>() <= 1e-12);
    }
}

TEST_CASE("project") {
    REQUIRE(cli_path() != nullptr);
    const CliResult r =
        run_cli("project --class 2,2,2 --epsilon +1 --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("label,u,v\n", 0) == 0);

    // The realization anchors one vertex at (1,0,0), mapping to the disk
    // center, and one at (cosh t, sinh t, 0), mapping to (tanh(t/2), 0);
    // canonicalization may rotate the labels.
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);  // header
    int rows = 0;
    bool saw_center = false, saw_axis = false;
    const double th = std::acosh(1.5);  // side length of the realization
    while (std::getline(lines, line)) {
        ++rows;
        const auto c1 = line.find(','), c2 = line.rfind(',');
        const std::string label = line.substr(0, c1);
        const double u = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
        const double v = std::stod(line.substr(c2 + 1));
        CHECK(u * u + v * v < 1.0);
        if (label[0] == 'P' && std::abs(u) <= 1e-14 && std::abs(v) <= 1e-14) {
            saw_center = true;
        }
        if (label[0] == 'P' && std::abs(v) <= 1e-14 &&
            std::abs(u - std::tanh(th / 2)) <= 1e-12) {
            saw_axis = true;
        }
    }
    CHECK(rows == 9);
    CHECK(saw_center);
    CHECK(saw_axis);
}

TEST_CASE("round-trip: project input class through realize and congruence") {
    // Pipeline integrity behind cmd_project: realize then congruence_of
    // reproduces the class, and the disk map is consistent with the
    // hyperboloid coordinates.
    hypnap::Rng rng(71);
    for (int i = 0; i < 200; ++i) {
        const hypnap::CongruenceClass c =
            hypnap::random_realizable_class(rng, 0.05, 5.0);
        const hypnap::Triangle t = hypnap::realize(c);
        const hypnap::CongruenceClass back = hypnap::congruence_of(t);
        CHECK(std::abs(back.d0 - c.d0) <= 1e-9);
        CHECK(std::abs(back.d1 - c.d1) <= 1e-9);
        CHECK(std::abs(back.d2 - c.d2) <= 1e-9);
        for (const hypnap::HPoint* p : {&t.p0, &t.p1, &t.p2}) {
            const double u = p->v.x1 / (1.0 + p->v.x0);
            const double v = p->v.x2 / (1.0 + p->v.x0);
            CHECK(u * u + v * v < 1.0);
        }
    }
}
