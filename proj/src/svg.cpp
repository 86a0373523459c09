#include "cutlab/svg.hpp"

#include "cutlab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace cutlab {
namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return std::string(buf);
}

}  // namespace

std::string svg_loglog(const std::string& title, const std::string& xlabel,
                       const std::string& ylabel, const std::vector<PlotSeries>& series) {
    const double W = 640.0;
    const double H = 480.0;
    const double ml = 70.0;
    const double mr = 20.0;
    const double mt = 40.0;
    const double mb = 55.0;

    double lx0 = 1e300;
    double lx1 = -1e300;
    double ly0 = 1e300;
    double ly1 = -1e300;
    for (const auto& s : series) {
        for (std::size_t i = 0; i < s.xs.size(); ++i) {
            if (!(s.xs[i] > 0.0) || !(s.ys[i] > 0.0))
                throw ConfigError("log-log plot needs positive data");
            lx0 = std::min(lx0, std::log10(s.xs[i]));
            lx1 = std::max(lx1, std::log10(s.xs[i]));
            ly0 = std::min(ly0, std::log10(s.ys[i]));
            ly1 = std::max(ly1, std::log10(s.ys[i]));
        }
    }
    if (lx0 > lx1) throw ConfigError("log-log plot needs at least one point");
    if (lx1 - lx0 < 0.5) {
        lx0 -= 0.25;
        lx1 += 0.25;
    }
    if (ly1 - ly0 < 0.5) {
        ly0 -= 0.25;
        ly1 += 0.25;
    }
    const double padx = 0.05 * (lx1 - lx0);
    const double pady = 0.05 * (ly1 - ly0);
    lx0 -= padx;
    lx1 += padx;
    ly0 -= pady;
    ly1 += pady;

    auto px = [&](double logx) { return ml + (logx - lx0) / (lx1 - lx0) * (W - ml - mr); };
    auto py = [&](double logy) { return H - mb - (logy - ly0) / (ly1 - ly0) * (H - mt - mb); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
        << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    svg << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
    svg << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\" "
        << "font-family=\"sans-serif\">" << title << "</text>\n";

    // axes
    svg << "<line x1=\"" << ml << "\" y1=\"" << H - mb << "\" x2=\"" << W - mr << "\" y2=\""
        << H - mb << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << H - mb
        << "\" stroke=\"black\"/>\n";

    // decade ticks
    for (int d = static_cast<int>(std::ceil(lx0)); d <= static_cast<int>(std::floor(lx1)); ++d) {
        const double x = px(d);
        svg << "<line x1=\"" << num(x) << "\" y1=\"" << H - mb << "\" x2=\"" << num(x)
            << "\" y2=\"" << H - mb + 5 << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << num(x) << "\" y=\"" << H - mb + 20
            << "\" text-anchor=\"middle\" font-size=\"12\" font-family=\"sans-serif\">1e" << d
            << "</text>\n";
    }
    for (int d = static_cast<int>(std::ceil(ly0)); d <= static_cast<int>(std::floor(ly1)); ++d) {
        const double y = py(d);
        svg << "<line x1=\"" << ml - 5 << "\" y1=\"" << num(y) << "\" x2=\"" << ml << "\" y2=\""
            << num(y) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << ml - 8 << "\" y=\"" << num(y + 4)
            << "\" text-anchor=\"end\" font-size=\"12\" font-family=\"sans-serif\">1e" << d
            << "</text>\n";
    }
    svg << "<text x=\"" << (ml + W - mr) / 2 << "\" y=\"" << H - 12
        << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\">" << xlabel
        << "</text>\n";
    svg << "<text x=\"18\" y=\"" << (mt + H - mb) / 2
        << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\" "
        << "transform=\"rotate(-90 18 " << (mt + H - mb) / 2 << ")\">" << ylabel << "</text>\n";

    for (std::size_t si = 0; si < series.size(); ++si) {
        const auto& s = series[si];
        const char* color = kPalette[si % 6];
        if (s.draw_line && s.xs.size() > 1) {
            svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
            for (std::size_t i = 0; i < s.xs.size(); ++i)
                svg << num(px(std::log10(s.xs[i]))) << "," << num(py(std::log10(s.ys[i]))) << " ";
            svg << "\"/>\n";
        }
        for (std::size_t i = 0; i < s.xs.size(); ++i)
            svg << "<circle cx=\"" << num(px(std::log10(s.xs[i]))) << "\" cy=\""
                << num(py(std::log10(s.ys[i]))) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
        svg << "<text x=\"" << W - mr - 10 << "\" y=\"" << mt + 18.0 * (si + 1)
            << "\" text-anchor=\"end\" font-size=\"12\" font-family=\"sans-serif\" fill=\"" << color
            << "\">" << s.name << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace cutlab
