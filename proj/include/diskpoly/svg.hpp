#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "diskpoly/common.hpp"

namespace diskpoly {

// Self-contained log-log scatter plot with a fitted line, for sweep
// outputs. No plotting dependency; the emitted markup is deterministic.
inline std::string loglog_scatter_svg(const std::vector<double>& xs, const std::vector<double>& ys,
                                      double slope, double intercept, const std::string& title,
                                      const std::string& xlabel, const std::string& ylabel) {
    const int width = 800, height = 600;
    const int ml = 80, mr = 30, mt = 50, mb = 60;
    const auto fmt = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.6g", v);
        return std::string(buf);
    };

    double lx_min = 0.0, lx_max = 1.0, ly_min = 0.0, ly_max = 1.0;
    bool first = true;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!(xs[i] > 0.0) || !(ys[i] > 0.0)) continue;
        const double lx = std::log10(xs[i]), ly = std::log10(ys[i]);
        if (first) {
            lx_min = lx_max = lx;
            ly_min = ly_max = ly;
            first = false;
        } else {
            lx_min = std::min(lx_min, lx);
            lx_max = std::max(lx_max, lx);
            ly_min = std::min(ly_min, ly);
            ly_max = std::max(ly_max, ly);
        }
    }
    if (lx_max - lx_min < 1e-9) lx_max = lx_min + 1.0;
    if (ly_max - ly_min < 1e-9) ly_max = ly_min + 1.0;
    lx_min -= 0.2;
    lx_max += 0.2;
    ly_min -= 0.2;
    ly_max += 0.2;

    const auto px = [&](double lx) {
        return ml + (lx - lx_min) / (lx_max - lx_min) * (width - ml - mr);
    };
    const auto py = [&](double ly) {
        return height - mb - (ly - ly_min) / (ly_max - ly_min) * (height - mt - mb);
    };

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s += "<rect x=\"" + std::to_string(ml) + "\" y=\"" + std::to_string(mt) + "\" width=\"" +
         std::to_string(width - ml - mr) + "\" height=\"" + std::to_string(height - mt - mb) +
         "\" fill=\"none\" stroke=\"black\"/>\n";
    s += "<text x=\"" + std::to_string(width / 2) + "\" y=\"30\" font-size=\"16\" text-anchor=\"middle\">" +
         title + "</text>\n";
    s += "<text x=\"" + std::to_string(width / 2) + "\" y=\"" + std::to_string(height - 15) +
         "\" font-size=\"13\" text-anchor=\"middle\">" + xlabel + "</text>\n";
    s += "<text x=\"20\" y=\"" + std::to_string(height / 2) +
         "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 20 " +
         std::to_string(height / 2) + ")\">" + ylabel + "</text>\n";

    // Decade grid lines and tick labels.
    for (int d = static_cast<int>(std::ceil(lx_min)); d <= static_cast<int>(std::floor(lx_max)); ++d) {
        const double x = px(d);
        s += "<line x1=\"" + fmt(x) + "\" y1=\"" + std::to_string(mt) + "\" x2=\"" + fmt(x) +
             "\" y2=\"" + std::to_string(height - mb) + "\" stroke=\"#ddd\"/>\n";
        s += "<text x=\"" + fmt(x) + "\" y=\"" + std::to_string(height - mb + 18) +
             "\" font-size=\"11\" text-anchor=\"middle\">1e" + std::to_string(d) + "</text>\n";
    }
    for (int d = static_cast<int>(std::ceil(ly_min)); d <= static_cast<int>(std::floor(ly_max)); ++d) {
        const double y = py(d);
        s += "<line x1=\"" + std::to_string(ml) + "\" y1=\"" + fmt(y) + "\" x2=\"" +
             std::to_string(width - mr) + "\" y2=\"" + fmt(y) + "\" stroke=\"#ddd\"/>\n";
        s += "<text x=\"" + std::to_string(ml - 8) + "\" y=\"" + fmt(y + 4) +
             "\" font-size=\"11\" text-anchor=\"end\">1e" + std::to_string(d) + "</text>\n";
    }

    // Fitted line in log space: log10(y) = slope * log10(x) + intercept.
    {
        const double y0 = slope * lx_min + intercept, y1 = slope * lx_max + intercept;
        s += "<line x1=\"" + fmt(px(lx_min)) + "\" y1=\"" + fmt(py(y0)) + "\" x2=\"" +
             fmt(px(lx_max)) + "\" y2=\"" + fmt(py(y1)) +
             "\" stroke=\"#c44\" stroke-width=\"1.5\"/>\n";
        s += "<text x=\"" + std::to_string(width - mr - 10) + "\" y=\"" + std::to_string(mt + 20) +
             "\" font-size=\"13\" text-anchor=\"end\" fill=\"#c44\">fitted slope " + fmt(slope) +
             "</text>\n";
    }

    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!(xs[i] > 0.0) || !(ys[i] > 0.0)) continue;
        s += "<circle cx=\"" + fmt(px(std::log10(xs[i]))) + "\" cy=\"" +
             fmt(py(std::log10(ys[i]))) + "\" r=\"3\" fill=\"#248\" fill-opacity=\"0.7\"/>\n";
    }
    s += "</svg>\n";
    return s;
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::io_error, "cannot open " + path + " for writing");
    out << content;
}

}  // namespace diskpoly
