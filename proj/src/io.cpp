#include "hypnap/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace hypnap::io {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string class_to_json(const CongruenceClass& c) {
    return "{\"d\":[" + format_double(c.d0) + "," + format_double(c.d1) + "," +
           format_double(c.d2) + "]}";
}

namespace {

std::string vertex_json(const MVec& v) {
    return "[" + format_double(v.x0) + "," + format_double(v.x1) + "," +
           format_double(v.x2) + "]";
}

}  // namespace

std::string triangle_to_json(const Triangle& t) {
    return "{\"vertices\":[" + vertex_json(t.p0.v) + "," + vertex_json(t.p1.v) +
           "," + vertex_json(t.p2.v) + "]}";
}

CongruenceClass parse_class_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::invalid_input, e.what());
    }
    if (!j.contains("d") || !j["d"].is_array() || j["d"].size() != 3) {
        throw Error(ErrorCode::invalid_input, "expected {\"d\":[d0,d1,d2]}");
    }
    return {j["d"][0].get<double>(), j["d"][1].get<double>(),
            j["d"][2].get<double>()};
}

Triangle parse_triangle_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::invalid_input, e.what());
    }
    if (!j.contains("vertices") || !j["vertices"].is_array() ||
        j["vertices"].size() != 3) {
        throw Error(ErrorCode::invalid_input,
                    "expected {\"vertices\":[[x0,x1,x2],[..],[..]]}");
    }
    Triangle t;
    HPoint* pts[3] = {&t.p0, &t.p1, &t.p2};
    for (int i = 0; i < 3; ++i) {
        const auto& v = j["vertices"][i];
        if (!v.is_array() || v.size() != 3) {
            throw Error(ErrorCode::invalid_input, "vertex is not a 3-vector");
        }
        pts[i]->v = {v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
        validate_hpoint(*pts[i]);
    }
    validate_triangle(t);
    return t;
}

CongruenceClass parse_class_csv(const std::string& text) {
    double d[3];
    int consumed = 0;
    if (std::sscanf(text.c_str(), "%lf,%lf,%lf%n", &d[0], &d[1], &d[2],
                    &consumed) != 3 ||
        consumed != static_cast<int>(text.size())) {
        throw Error(ErrorCode::invalid_input, "expected d0,d1,d2");
    }
    return {d[0], d[1], d[2]};
}

namespace {

void append_field(std::string& out, double x, bool skip_nan) {
    if (skip_nan && std::isnan(x)) return;  // vacuous ratio: empty field
    out += format_double(x);
}

}  // namespace

std::string trajectory_csv(const Trajectory& t) {
    std::string out = "k,d0,d1,d2,alpha,chi,r_d,mu,gap_max,ratio_mu,ratio_gap\n";
    for (const TrajectoryRecord& r : t.records) {
        out += std::to_string(r.k);
        for (double v : {r.cls.d0, r.cls.d1, r.cls.d2, r.alpha, r.chi, r.r_d,
                         r.mu, r.gap_max}) {
            out += ',';
            append_field(out, v, false);
        }
        out += ',';
        append_field(out, r.ratio_mu, true);
        out += ',';
        append_field(out, r.ratio_gap, true);
        out += '\n';
    }
    return out;
}

std::string trajectory_json(const Trajectory& t, const ContractionReport& rep) {
    std::string out = "{\"epsilon\":" + std::to_string(t.epsilon) +
                      ",\"status\":\"" + to_string(t.status) + "\"";
    out += ",\"contraction\":{\"max_ratio_mu\":";
    out += std::isnan(rep.max_ratio_mu) ? "null" : format_double(rep.max_ratio_mu);
    out += ",\"max_ratio_gap\":";
    out += std::isnan(rep.max_ratio_gap) ? "null"
                                         : format_double(rep.max_ratio_gap);
    out += ",\"violations_mu\":" + std::to_string(rep.violations_mu);
    out += ",\"violations_gap\":" + std::to_string(rep.violations_gap);
    out += ",\"violations_ratest\":" + std::to_string(rep.violations_ratest);
    out += std::string(",\"pass\":") + (rep.pass ? "true" : "false") + "}";
    out += ",\"records\":[";
    for (std::size_t i = 0; i < t.records.size(); ++i) {
        const TrajectoryRecord& r = t.records[i];
        if (i) out += ',';
        out += "{\"k\":" + std::to_string(r.k);
        out += ",\"d\":[" + format_double(r.cls.d0) + "," +
               format_double(r.cls.d1) + "," + format_double(r.cls.d2) + "]";
        out += ",\"alpha\":" + format_double(r.alpha);
        out += ",\"chi\":" + format_double(r.chi);
        out += ",\"r_d\":" + format_double(r.r_d);
        out += ",\"mu\":" + format_double(r.mu);
        out += ",\"gap_max\":" + format_double(r.gap_max);
        out += ",\"ratio_mu\":";
        out += std::isnan(r.ratio_mu) ? "null" : format_double(r.ratio_mu);
        out += ",\"ratio_gap\":";
        out += std::isnan(r.ratio_gap) ? "null" : format_double(r.ratio_gap);
        out += '}';
    }
    out += "]}";
    return out;
}

std::string contraction_summary(const ContractionReport& rep) {
    std::ostringstream os;
    os << "contraction: epsilon=" << (rep.epsilon > 0 ? "+1" : "-1")
       << " steps=" << rep.steps;
    os << " max_ratio_mu=";
    if (std::isnan(rep.max_ratio_mu)) {
        os << "n/a";
    } else {
        os << format_double(rep.max_ratio_mu);
    }
    os << " max_ratio_gap=";
    if (std::isnan(rep.max_ratio_gap)) {
        os << "n/a";
    } else {
        os << format_double(rep.max_ratio_gap);
    }
    os << " violations=" << rep.violations_mu << "/" << rep.violations_gap
       << "/" << rep.violations_ratest << " "
       << (rep.pass ? "PASS" : "FAIL");
    return os.str();
}

}  // namespace hypnap::io
