#pragma once

#include <span>

namespace zbound {

struct ValueSlope {
  double value;
  double slope;
};

// Coefficients are highest power first.
inline double horner(std::span<const double> coeffs, double x) noexcept {
  double acc = 0.0;
  for (double c : coeffs) acc = acc * x + c;
  return acc;
}

inline ValueSlope horner_with_slope(std::span<const double> coeffs, double x) noexcept {
  double value = 0.0;
  double slope = 0.0;
  for (double c : coeffs) {
    slope = slope * x + value;
    value = value * x + c;
  }
  return {value, slope};
}

// sum |c_k| |x|^k, the usual a-priori error scale for Horner evaluation.
inline double horner_majorant(std::span<const double> coeffs, double x) noexcept {
  double acc = 0.0;
  const double ax = x < 0.0 ? -x : x;
  for (double c : coeffs) acc = acc * ax + (c < 0.0 ? -c : c);
  return acc;
}

}  // namespace zbound
