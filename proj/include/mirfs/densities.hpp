#pragma once

#include <cmath>

namespace mirfs {

inline constexpr double kLog2Pi = 1.8378770664093454836;
inline constexpr double kEulerGamma = 0.57721566490153286061;

inline double normal_pdf(double x, double mean, double var) {
  double z = x - mean;
  return std::exp(-0.5 * (kLog2Pi + std::log(var)) - 0.5 * z * z / var);
}

inline double normal_logpdf(double x, double mean, double var) {
  double z = x - mean;
  return -0.5 * (kLog2Pi + std::log(var)) - 0.5 * z * z / var;
}

/// Laplace density with scale b: exp(-|x-mean|/b) / (2b).
inline double laplace_pdf(double x, double mean, double b) {
  return std::exp(-std::fabs(x - mean) / b) / (2.0 * b);
}

/// Density of log(eps^2) for standard normal eps:
/// f(z) = exp(z/2 - e^z/2) / sqrt(2 pi).
inline double log_chisq1_pdf(double z) {
  return std::exp(0.5 * z - 0.5 * std::exp(z) - 0.5 * kLog2Pi);
}

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

}  // namespace mirfs
