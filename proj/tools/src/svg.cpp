#include "svg.hpp"

#include "format.hpp"

namespace radharm::cli {

namespace {

constexpr double kCanvas = 600.0;

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

void write_svg(std::ostream& out, const SvgFigure& f) {
  const double sx = kCanvas / (f.x_max - f.x_min);
  const double sy = kCanvas / (f.y_max - f.y_min);
  const auto px = [&](double x) { return format_real((x - f.x_min) * sx, 6); };
  const auto py = [&](double y) { return format_real((f.y_max - y) * sy, 6); };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas << "\" height=\""
      << kCanvas + 30 << "\" viewBox=\"0 -30 " << kCanvas << ' ' << kCanvas + 30 << "\">\n";
  out << "<metadata>" << escape(f.metadata) << "</metadata>\n";
  out << "<title>" << escape(f.title) << "</title>\n";
  out << "<text x=\"4\" y=\"-10\" font-family=\"monospace\" font-size=\"13\">"
      << escape(f.title) << "</text>\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << kCanvas << "\" height=\"" << kCanvas
      << "\" fill=\"white\" stroke=\"black\"/>\n";
  if (f.unit_disk) {
    out << "<ellipse cx=\"" << px(0) << "\" cy=\"" << py(0) << "\" rx=\"" << format_real(sx, 6)
        << "\" ry=\"" << format_real(sy, 6) << "\" fill=\"none\" stroke=\"gray\"/>\n";
  }
  out << "<g fill=\"#c0392b\">\n";
  const std::string w = format_real(f.cell * sx, 6);
  const std::string h = format_real(f.cell * sy, 6);
  for (const auto& [x, y] : f.boundary)
    out << "<rect x=\"" << px(x - 0.5 * f.cell) << "\" y=\"" << py(y + 0.5 * f.cell)
        << "\" width=\"" << w << "\" height=\"" << h << "\"/>\n";
  out << "</g>\n";
  out << "<circle cx=\"" << px(f.basepoint.first) << "\" cy=\"" << py(f.basepoint.second)
      << "\" r=\"4\" fill=\"#2c3e50\"/>\n";
  out << "</svg>\n";
}

}  // namespace radharm::cli
