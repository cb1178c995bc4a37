#include "zbound/aux_polys.hpp"

#include <cmath>
#include <string>

#include "zbound/error.hpp"

namespace zbound {

std::vector<double> f_coeffs(const CoeffProfile& prof, int ell) {
  std::vector<double> c;
  c.reserve(static_cast<std::size_t>(ell));
  c.push_back(1.0);
  for (int j = 1; j < ell; ++j) c.push_back(-prof.modulus(j));
  return c;
}

double eval_F(const CoeffProfile& prof, int ell, double x) {
  return eval_F_with_slope(prof, ell, x).value;
}

ValueSlope eval_F_with_slope(const CoeffProfile& prof, int ell, double x) {
  double value = 1.0;
  double slope = 0.0;
  for (int j = 1; j < ell; ++j) {
    slope = slope * x + value;
    value = value * x - prof.modulus(j);
  }
  return {value, slope};
}

double eval_P(const CoeffProfile& prof, int ell, double x) {
  return eval_P_with_slope(prof, ell, x).value;
}

ValueSlope eval_P_with_slope(const CoeffProfile& prof, int ell, double x) {
  const auto f = eval_F_with_slope(prof, ell, x);
  const double shifted = x - 1.0;
  return {shifted * f.value - prof.tail_max(ell), f.value + shifted * f.slope};
}

std::vector<double> p_coeffs(const CoeffProfile& prof, int ell) {
  const auto f = f_coeffs(prof, ell);
  std::vector<double> p(f.size() + 1, 0.0);
  for (std::size_t k = 0; k < f.size(); ++k) {
    p[k] += f[k];
    p[k + 1] -= f[k];
  }
  p.back() -= prof.tail_max(ell);
  return p;
}

double eval_Q_ell(const CoeffProfile& prof, int ell, double x) {
  return x * eval_F(prof, ell, 1.0 + x);
}

ValueSlope eval_Q_ell_with_slope(const CoeffProfile& prof, int ell, double x) {
  const auto f = eval_F_with_slope(prof, ell, 1.0 + x);
  return {x * f.value, f.value + x * f.slope};
}

double q_ell_majorant(const CoeffProfile& prof, int ell, double x) {
  const double y = 1.0 + std::abs(x);
  double acc = 1.0;
  for (int j = 1; j < ell; ++j) acc = acc * y + prof.modulus(j);
  return std::abs(x) * acc;
}

std::vector<double> q_ell_coeffs_binomial(const CoeffProfile& prof, int ell) {
  if (ell > kMaxBinomialEll) {
    throw Error(ErrorCode::EllTooLargeForBinomialPath,
                "binomial Q_l path supports l <= " + std::to_string(kMaxBinomialEll) +
                    ", got " + std::to_string(ell));
  }
  // Pascal's triangle up to row l-1.
  std::vector<std::vector<double>> binom(static_cast<std::size_t>(ell));
  for (int m = 0; m < ell; ++m) {
    binom[m].assign(static_cast<std::size_t>(m) + 1, 1.0);
    for (int s = 1; s < m; ++s) binom[m][s] = binom[m - 1][s - 1] + binom[m - 1][s];
  }
  auto C = [&](int m, int s) { return binom[m][s]; };  // C_s^m, 0 <= s <= m

  std::vector<double> c;
  c.reserve(static_cast<std::size_t>(ell));
  c.push_back(1.0);
  for (int v = 2; v <= ell; ++v) {
    double cv = C(ell - 1, ell - v);
    for (int j = 1; j <= v - 1; ++j) cv -= C(ell - j - 1, ell - v) * prof.modulus(j);
    c.push_back(cv);
  }
  return c;
}

double eval_q_ell_binomial(std::span<const double> coeffs, double x) {
  return x * horner(coeffs, x);
}

std::vector<double> cauchy_Q_coeffs(const CoeffProfile& prof) {
  return f_coeffs(prof, prof.degree + 1);
}

}  // namespace zbound
