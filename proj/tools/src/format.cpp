#include "format.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

#include "commands.hpp"

namespace radharm::cli {

std::string format_real(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

std::string format_exact(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return {buf, res.ptr};
}

std::string format_residual(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

double parse_real(const std::string& text, const std::string& what) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, value);
  if (text.empty() || res.ec != std::errc() || res.ptr != end)
    throw UsageError("invalid " + what + ": '" + text + "'");
  return value;
}

long parse_integer(const std::string& text, const std::string& what) {
  long value = 0;
  const char* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, value);
  if (text.empty() || res.ec != std::errc() || res.ptr != end)
    throw UsageError("invalid " + what + ": '" + text + "'");
  return value;
}

std::vector<double> parse_point(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string field;
  while (std::getline(in, field, ',')) out.push_back(parse_real(field, "basepoint coordinate"));
  if (out.empty() || (!text.empty() && text.back() == ','))
    throw UsageError("invalid basepoint: '" + text + "'");
  return out;
}

}  // namespace radharm::cli
