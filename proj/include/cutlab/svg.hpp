#pragma once

#include <string>
#include <vector>

namespace cutlab {

/// Minimal log-log scatter/line plot writer (self-contained SVG).
struct PlotSeries {
    std::string name;
    std::vector<double> xs;
    std::vector<double> ys;
    bool draw_line = true;
};

std::string svg_loglog(const std::string& title, const std::string& xlabel,
                       const std::string& ylabel, const std::vector<PlotSeries>& series);

}  // namespace cutlab
