// svg.hpp — Dependency-free static line charts for the run outputs.

#pragma once

#include <string>
#include <vector>

namespace qb::svg {

struct Series {
    std::string name;
    std::vector<double> x;
    std::vector<double> y;  // NaN entries break the polyline
};

std::string line_chart(const std::string& title, const std::string& x_label,
                       const std::string& y_label, const std::vector<Series>& series,
                       int width = 860, int height = 520);

void write_line_chart(const std::string& path, const std::string& title,
                      const std::string& x_label, const std::string& y_label,
                      const std::vector<Series>& series, int width = 860,
                      int height = 520);

} // namespace qb::svg
