#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace radharm::cli {

struct SvgFigure {
  std::string title;
  std::string metadata;  // the resolved config line
  double x_min, x_max, y_min, y_max;
  std::vector<std::pair<double, double>> boundary;  // cut-locus samples
  double cell;                                      // size of a sample square
  std::pair<double, double> basepoint;
  bool unit_disk = false;  // outline the chart disk of a slice
};

/// Writes a self-contained SVG; y grows upwards in data coordinates.
void write_svg(std::ostream& out, const SvgFigure& figure);

}  // namespace radharm::cli
