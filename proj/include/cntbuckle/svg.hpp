#pragma once

#include <array>
#include <ostream>
#include <string>
#include <vector>

namespace cntbuckle {

struct SvgSeries {
  std::string name;
  std::vector<std::array<double, 2>> points;  // (x, y), drawn in order
};

// Minimal line chart: axes, tick labels, one polyline per series, legend.
void write_line_chart(std::ostream& os, const std::string& title, const std::string& x_label,
                      const std::string& y_label, const std::vector<SvgSeries>& series);

void write_line_chart_file(const std::string& path, const std::string& title,
                           const std::string& x_label, const std::string& y_label,
                           const std::vector<SvgSeries>& series);

}  // namespace cntbuckle
