// svg.cpp — Minimal SVG line rendering with axes, ticks, and a legend.

#include "qbsim/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace qb::svg {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f",
                          "#bcbd22", "#e377c2"};

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        default: out += c;
        }
    }
    return out;
}

// Tick spacing of the form {1, 2, 5} * 10^k giving roughly `target` steps.
double nice_step(double span, int target) {
    if (!(span > 0.0)) return 1.0;
    double raw = span / target;
    double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double frac = raw / mag;
    double step = frac <= 1.0 ? 1.0 : frac <= 2.0 ? 2.0 : frac <= 5.0 ? 5.0 : 10.0;
    return step * mag;
}

struct Range {
    double lo = 0.0;
    double hi = 1.0;
};

Range data_range(const std::vector<Series>& series, bool use_x) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const Series& s : series) {
        const std::vector<double>& v = use_x ? s.x : s.y;
        for (double value : v)
            if (std::isfinite(value)) {
                lo = std::min(lo, value);
                hi = std::max(hi, value);
            }
    }
    if (!(lo <= hi)) return {0.0, 1.0};
    if (lo == hi) return {lo - 0.5, hi + 0.5};
    return {lo, hi};
}

} // namespace

std::string line_chart(const std::string& title, const std::string& x_label,
                       const std::string& y_label, const std::vector<Series>& series,
                       int width, int height) {
    const double ml = 72, mr = 24, mt = 42, mb = 54;
    const double pw = width - ml - mr;
    const double ph = height - mt - mb;

    Range xr = data_range(series, true);
    Range yr = data_range(series, false);
    double ypad = 0.05 * (yr.hi - yr.lo);
    yr.lo -= ypad;
    yr.hi += ypad;

    auto px = [&](double x) { return ml + pw * (x - xr.lo) / (xr.hi - xr.lo); };
    auto py = [&](double y) { return mt + ph * (1.0 - (y - yr.lo) / (yr.hi - yr.lo)); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
        << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"15\">"
        << escape(title) << "</text>\n";

    out << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
    double xstep = nice_step(xr.hi - xr.lo, 8);
    for (double x = std::ceil(xr.lo / xstep) * xstep; x <= xr.hi + 1e-9 * xstep;
         x += xstep) {
        double gx = px(x);
        out << "<line x1=\"" << gx << "\" y1=\"" << mt << "\" x2=\"" << gx
            << "\" y2=\"" << mt + ph << "\" stroke=\"#e5e5e5\"/>\n"
            << "<text x=\"" << gx << "\" y=\"" << mt + ph + 16
            << "\" text-anchor=\"middle\">" << fmt(x) << "</text>\n";
    }
    double ystep = nice_step(yr.hi - yr.lo, 6);
    for (double y = std::ceil(yr.lo / ystep) * ystep; y <= yr.hi + 1e-9 * ystep;
         y += ystep) {
        double gy = py(y);
        out << "<line x1=\"" << ml << "\" y1=\"" << gy << "\" x2=\"" << ml + pw
            << "\" y2=\"" << gy << "\" stroke=\"#e5e5e5\"/>\n"
            << "<text x=\"" << ml - 6 << "\" y=\"" << gy + 4
            << "\" text-anchor=\"end\">" << fmt(y) << "</text>\n";
    }
    out << "</g>\n";

    out << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << pw
        << "\" height=\"" << ph << "\" fill=\"none\" stroke=\"#444\"/>\n";
    out << "<text x=\"" << ml + pw / 2 << "\" y=\"" << height - 12
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
        << escape(x_label) << "</text>\n";
    out << "<text x=\"18\" y=\"" << mt + ph / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
           "transform=\"rotate(-90 18 "
        << mt + ph / 2 << ")\">" << escape(y_label) << "</text>\n";

    for (std::size_t i = 0; i < series.size(); ++i) {
        const Series& s = series[i];
        if (s.x.size() != s.y.size())
            throw std::invalid_argument("line_chart: series size mismatch");
        const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
        std::ostringstream points;
        bool open = false;
        for (std::size_t k = 0; k < s.x.size(); ++k) {
            if (!std::isfinite(s.x[k]) || !std::isfinite(s.y[k])) {
                if (open) {
                    out << "<polyline fill=\"none\" stroke=\"" << color
                        << "\" stroke-width=\"1.6\" points=\"" << points.str()
                        << "\"/>\n";
                    points.str("");
                    open = false;
                }
                continue;
            }
            points << px(s.x[k]) << "," << py(s.y[k]) << " ";
            open = true;
        }
        if (open)
            out << "<polyline fill=\"none\" stroke=\"" << color
                << "\" stroke-width=\"1.6\" points=\"" << points.str() << "\"/>\n";

        double ly = mt + 16 + 18 * static_cast<double>(i);
        out << "<line x1=\"" << ml + pw - 150 << "\" y1=\"" << ly - 4 << "\" x2=\""
            << ml + pw - 126 << "\" y2=\"" << ly - 4 << "\" stroke=\"" << color
            << "\" stroke-width=\"2\"/>\n"
            << "<text x=\"" << ml + pw - 120 << "\" y=\"" << ly
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << escape(s.name)
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

void write_line_chart(const std::string& path, const std::string& title,
                      const std::string& x_label, const std::string& y_label,
                      const std::vector<Series>& series, int width, int height) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << line_chart(title, x_label, y_label, series, width, height);
}

} // namespace qb::svg
