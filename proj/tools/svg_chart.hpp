#ifndef SBCN_TOOLS_SVG_CHART_HPP
#define SBCN_TOOLS_SVG_CHART_HPP

#include <string>
#include <vector>

namespace sbcn::tools {

struct BarSeries {
    std::string name;
    std::vector<double> values; // one per category
};

/// Static grouped bar chart. Y axis starts at 0 and is scaled to the data.
std::string bar_chart_svg(const std::string& title, const std::string& y_label,
                          const std::vector<std::string>& categories,
                          const std::vector<BarSeries>& series);

} // namespace sbcn::tools

#endif
