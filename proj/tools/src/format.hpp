#pragma once

#include <string>
#include <vector>

namespace radharm::cli {

/// printf %.{digits}g.
std::string format_real(double x, int digits);

/// Shortest text that reads back as the same double.
std::string format_exact(double x);

/// printf %.3e, for residual reports.
std::string format_residual(double x);

double parse_real(const std::string& text, const std::string& what);
long parse_integer(const std::string& text, const std::string& what);
/// Comma-separated reals, e.g. "0,0.25".
std::vector<double> parse_point(const std::string& text);

}  // namespace radharm::cli
