#pragma once

namespace radharm {

/// Gamma(n/2) for a positive integer n, by exact recursion from Gamma(1) = 1
/// and Gamma(1/2) = sqrt(pi). Only integer and half-integer arguments occur
/// in sphere volumes.
double gamma_half_integer(int twice_argument);

/// Volume of the unit round sphere S^n in R^(n+1):
/// 2 pi^((n+1)/2) / Gamma((n+1)/2). vol(S^0) = 2.
double unit_sphere_volume(int n);

}  // namespace radharm
