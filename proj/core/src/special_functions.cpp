#include "radharm/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace radharm {

double gamma_half_integer(int twice_argument) {
  if (twice_argument < 1)
    throw std::invalid_argument("gamma_half_integer: argument must be positive");
  // Gamma(x + 1) = x Gamma(x), walking up from 1/2 or 1.
  double value = (twice_argument % 2 == 1) ? std::sqrt(std::numbers::pi) : 1.0;
  for (int k = (twice_argument % 2 == 1) ? 1 : 2; k < twice_argument; k += 2)
    value *= 0.5 * k;
  return value;
}

double unit_sphere_volume(int n) {
  if (n < 0) throw std::invalid_argument("unit_sphere_volume: n must be >= 0");
  return 2.0 * std::pow(std::numbers::pi, 0.5 * (n + 1)) /
         gamma_half_integer(n + 1);
}

}  // namespace radharm
