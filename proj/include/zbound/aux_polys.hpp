#pragma once

#include <vector>

#include "zbound/horner.hpp"
#include "zbound/polynomial.hpp"

namespace zbound {

// Auxiliary real polynomials built from a CoeffProfile (m_j = |a_j|):
//
//   Q(x)   = x^n - m_1 x^{n-1} - ... - m_n            (Cauchy polynomial)
//   F_l(x) = x^{l-1} - m_1 x^{l-2} - ... - m_{l-1}    (F_1 = 1)
//   P_l(x) = (x - 1) F_l(x) - A_l
//   Q_l(x) = x F_l(1 + x)
//
// P/F is the production path. Q_l also has a literal binomial expansion,
// kept only to cross-check x F_l(1 + x).

inline constexpr int kMaxBinomialEll = 60;

/// [1, -m_1, ..., -m_{l-1}] with m_j = 0 past the degree.
std::vector<double> f_coeffs(const CoeffProfile& prof, int ell);

double eval_F(const CoeffProfile& prof, int ell, double x);
ValueSlope eval_F_with_slope(const CoeffProfile& prof, int ell, double x);

/// (x - 1) F_l(x) - A_l. Exactly -A_l at x = 1.
double eval_P(const CoeffProfile& prof, int ell, double x);
ValueSlope eval_P_with_slope(const CoeffProfile& prof, int ell, double x);

/// Dense coefficients of P_l, highest power first:
/// [1, -(m_1 + 1), -(m_2 - m_1), ..., -(m_{l-1} - m_{l-2}), -(A_l - m_{l-1})].
std::vector<double> p_coeffs(const CoeffProfile& prof, int ell);

/// x F_l(1 + x).
double eval_Q_ell(const CoeffProfile& prof, int ell, double x);
ValueSlope eval_Q_ell_with_slope(const CoeffProfile& prof, int ell, double x);

/// x * sum_k |b_k| (1 + |x|)^k: bounds the magnitude of every term either
/// Q_l route touches, so it is the scale for comparing the two routes.
double q_ell_majorant(const CoeffProfile& prof, int ell, double x);

/// Coefficients of Q_l for powers l..1 (the constant term is always zero):
///   x^l + sum_{v=2}^{l} [C(l-1, l-v) - sum_{j=1}^{v-1} C(l-j-1, l-v) m_j] x^{l+1-v}
/// Throws EllTooLargeForBinomialPath for l > 60.
std::vector<double> q_ell_coeffs_binomial(const CoeffProfile& prof, int ell);

/// Evaluates the binomial coefficient list at x (multiplies through by x).
double eval_q_ell_binomial(std::span<const double> coeffs, double x);

/// [1, -m_1, ..., -m_n].
std::vector<double> cauchy_Q_coeffs(const CoeffProfile& prof);

}  // namespace zbound
