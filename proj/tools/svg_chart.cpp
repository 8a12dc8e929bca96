#include "svg_chart.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace sbcn::tools {

namespace {

const char* kPalette[] = {"#e6b422", "#c0392b", "#2980b9", "#27ae60", "#8e44ad", "#7f8c8d"};

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

double nice_ceiling(double max_value) {
    if (max_value <= 0.0) return 1.0;
    const double magnitude = std::pow(10.0, std::floor(std::log10(max_value)));
    for (double step : {1.0, 2.0, 2.5, 5.0, 10.0})
        if (max_value <= step * magnitude) return step * magnitude;
    return 10.0 * magnitude;
}

} // namespace

std::string bar_chart_svg(const std::string& title, const std::string& y_label,
                          const std::vector<std::string>& categories,
                          const std::vector<BarSeries>& series) {
    const double width = 760, height = 460;
    const double left = 70, right = 30, top = 50, bottom = 60;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    double max_value = 0.0;
    for (const auto& s : series)
        for (double v : s.values) max_value = std::max(max_value, v);
    const double y_max = nice_ceiling(max_value * 1.05);

    const size_t cats = categories.size();
    const size_t bars = std::max<size_t>(1, series.size());
    const double slot = plot_w / std::max<size_t>(1, cats);
    const double bar_w = slot * 0.8 / bars;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\" "
        << "font-family=\"sans-serif\">" << title << "</text>\n";

    // y axis with 5 gridlines
    for (int tick = 0; tick <= 5; ++tick) {
        const double frac = tick / 5.0;
        const double y = top + plot_h * (1.0 - frac);
        svg << "<line x1=\"" << left << "\" y1=\"" << y << "\" x2=\"" << left + plot_w
            << "\" y2=\"" << y << "\" stroke=\"#dddddd\"/>\n";
        svg << "<text x=\"" << left - 8 << "\" y=\"" << y + 4
            << "\" text-anchor=\"end\" font-size=\"11\" font-family=\"sans-serif\">"
            << num(y_max * frac) << "</text>\n";
    }
    svg << "<text x=\"18\" y=\"" << top + plot_h / 2
        << "\" text-anchor=\"middle\" font-size=\"12\" font-family=\"sans-serif\" "
        << "transform=\"rotate(-90 18 " << top + plot_h / 2 << ")\">" << y_label << "</text>\n";

    // bars
    for (size_t c = 0; c < cats; ++c) {
        const double group_left = left + slot * c + slot * 0.1;
        for (size_t s = 0; s < series.size(); ++s) {
            if (c >= series[s].values.size()) continue;
            const double v = series[s].values[c];
            const double h = plot_h * std::clamp(v / y_max, 0.0, 1.0);
            svg << "<rect x=\"" << group_left + bar_w * s << "\" y=\"" << top + plot_h - h
                << "\" width=\"" << bar_w * 0.92 << "\" height=\"" << h << "\" fill=\""
                << kPalette[s % 6] << "\"/>\n";
        }
        svg << "<text x=\"" << left + slot * c + slot / 2 << "\" y=\"" << top + plot_h + 20
            << "\" text-anchor=\"middle\" font-size=\"12\" font-family=\"sans-serif\">"
            << categories[c] << "</text>\n";
    }

    // axes and legend
    svg << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\""
        << top + plot_h << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << left << "\" y1=\"" << top + plot_h << "\" x2=\"" << left + plot_w
        << "\" y2=\"" << top + plot_h << "\" stroke=\"black\"/>\n";
    for (size_t s = 0; s < series.size(); ++s) {
        const double lx = left + plot_w - 150;
        const double ly = top + 10 + 18 * static_cast<double>(s);
        svg << "<rect x=\"" << lx << "\" y=\"" << ly - 10 << "\" width=\"12\" height=\"12\" fill=\""
            << kPalette[s % 6] << "\"/>\n";
        svg << "<text x=\"" << lx + 18 << "\" y=\"" << ly
            << "\" font-size=\"12\" font-family=\"sans-serif\">" << series[s].name << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace sbcn::tools
