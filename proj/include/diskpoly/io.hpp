#pragma once

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "diskpoly/body.hpp"
#include "diskpoly/common.hpp"
#include "diskpoly/core.hpp"
#include "diskpoly/lens.hpp"
#include "diskpoly/metrics.hpp"

namespace diskpoly {

// 17 significant digits: enough to round-trip any double through text.
inline std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct BodySpec {
    double lambda = 1.0;
    std::vector<Vec2> centers;
};

// Body file format: {"lambda": <number>, "centers": [[x, y], ...]}.
inline BodySpec body_from_json(const nlohmann::json& j) {
    BodySpec spec;
    if (!j.is_object() || !j.contains("lambda") || !j.contains("centers"))
        fail(errc::io_error, "body json needs 'lambda' and 'centers'");
    if (!j["lambda"].is_number()) fail(errc::io_error, "'lambda' must be a number");
    spec.lambda = j["lambda"].get<double>();
    for (const auto& c : j["centers"]) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_number() || !c[1].is_number())
            fail(errc::io_error, "each center must be [x, y]");
        spec.centers.push_back({c[0].get<double>(), c[1].get<double>()});
    }
    return spec;
}

inline nlohmann::json body_to_json(const BodySpec& spec) {
    nlohmann::json j;
    j["lambda"] = spec.lambda;
    auto& arr = j["centers"] = nlohmann::json::array();
    for (const Vec2& c : spec.centers) arr.push_back({c.x, c.y});
    return j;
}

inline BodySpec read_body_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::io_error, "cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        fail(errc::io_error, std::string("bad json: ") + e.what());
    }
    return body_from_json(j);
}

inline void write_body_file(const std::string& path, const BodySpec& spec) {
    std::ofstream out(path);
    if (!out) fail(errc::io_error, "cannot open " + path + " for writing");
    out << body_to_json(spec).dump(2) << "\n";
}

// Analysis report. Field names are part of the output contract.
inline nlohmann::json report_to_json(const VerifyReport& rep, double d_h_best_lens) {
    nlohmann::json j;
    j["perimeter"] = rep.q.perimeter;
    j["area"] = rep.q.area;
    j["inradius"] = rep.q.inradius;
    j["cheeger"] = rep.q.cheeger_h;
    j["I"] = rep.q.quotient_I;
    j["in"] = rep.q.quotient_in;
    j["Ch"] = rep.q.quotient_Ch;
    j["d_H_best_lens"] = d_h_best_lens;
    auto& checks = j["checks"] = nlohmann::json::array();
    for (const Check& c : rep.checks) {
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"observed", c.observed},
                          {"bound", c.bound}});
    }
    return j;
}

inline nlohmann::json lens_to_json(const Lens& lens) {
    return {{"center", {lens.center.x, lens.center.y}},
            {"orientation", lens.orientation},
            {"r_lens", lens.r_lens},
            {"lambda", lens.lambda}};
}

// Minimal CSV writer: fixed column order, header row, %.17g floats.
class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header) : cols_(std::move(header)) {
        for (std::size_t i = 0; i < cols_.size(); ++i) {
            if (i) out_ += ',';
            out_ += cols_[i];
        }
        out_ += '\n';
    }

    void row(const std::vector<std::string>& cells) {
        if (cells.size() != cols_.size()) fail(errc::io_error, "csv row width mismatch");
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out_ += ',';
            out_ += cells[i];
        }
        out_ += '\n';
    }

    const std::string& str() const { return out_; }

private:
    std::vector<std::string> cols_;
    std::string out_;
};

}  // namespace diskpoly
