#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hypnap/io.hpp"

using namespace hypnap;

TEST_CASE("double formatting round-trips") {
    Rng rng(61);
    for (int i = 0; i < 5000; ++i) {
        const double x = uniform(rng, -1.0, 1.0) *
                         std::pow(10.0, uniform(rng, -12.0, 12.0));
        const std::string s = io::format_double(x);
        CHECK(std::stod(s) == x);
    }
    CHECK(io::format_double(2.0) == "2");
    CHECK(io::format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("class json round-trip") {
    const CongruenceClass c{2.0, 1.9000000000000001, std::sqrt(3.0) + 0.25};
    const CongruenceClass back = io::parse_class_json(io::class_to_json(c));
    CHECK(back.d0 == c.d0);
    CHECK(back.d1 == c.d1);
    CHECK(back.d2 == c.d2);

    CHECK_THROWS_AS(io::parse_class_json("{\"d\":[1,2]}"), Error);
    CHECK_THROWS_AS(io::parse_class_json("not json"), Error);
}

TEST_CASE("triangle json round-trip") {
    const Triangle t = realize({2.3, 2.1, 1.95});
    const Triangle back = io::parse_triangle_json(io::triangle_to_json(t));
    CHECK(back.p0.v.x0 == t.p0.v.x0);
    CHECK(back.p1.v.x1 == t.p1.v.x1);
    CHECK(back.p2.v.x2 == t.p2.v.x2);

    // Off-hyperboloid vertices are rejected on parse.
    CHECK_THROWS_AS(
        io::parse_triangle_json(
            "{\"vertices\":[[1,0,0],[2,0,0],[1.5,1.1180339887498949,0]]}"),
        Error);
}

TEST_CASE("class csv parsing") {
    const CongruenceClass c = io::parse_class_csv("2,1.9,1.8");
    CHECK(c.d0 == 2.0);
    CHECK(c.d1 == 1.9);
    CHECK(c.d2 == 1.8);
    CHECK_THROWS_AS(io::parse_class_csv("2,1.9"), Error);
    CHECK_THROWS_AS(io::parse_class_csv("2,1.9,1.8,junk"), Error);
}

TEST_CASE("trajectory csv shape") {
    const Trajectory t = run({2.5, 2.1, 1.9}, +1, StopCriterion{50, 1e-6});
    const std::string csv = io::trajectory_csv(t);
    CHECK(csv.rfind("k,d0,d1,d2,alpha,chi,r_d,mu,gap_max,ratio_mu,ratio_gap\n",
                    0) == 0);
    // Row 0 has empty ratio fields (trailing ",," then newline).
    const std::size_t eol0 = csv.find('\n', csv.find('\n') + 1);
    const std::string row0 =
        csv.substr(csv.find('\n') + 1, eol0 - csv.find('\n') - 1);
    CHECK(row0.substr(row0.size() - 2) == ",,");
    CHECK(row0.rfind("0,", 0) == 0);
    // One line per record plus the header; LF endings only.
    std::size_t lines = 0;
    for (char ch : csv) lines += ch == '\n';
    CHECK(lines == t.records.size() + 1);
    CHECK(csv.find('\r') == std::string::npos);
}
