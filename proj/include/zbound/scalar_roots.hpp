#pragma once

#include <functional>
#include <span>

#include "zbound/horner.hpp"

namespace zbound {

inline constexpr double kDefaultRootTol = 1e-12;
inline constexpr int kMaxRootIterations = 200;

/// Interval known to enclose exactly one root: f(lo) and f(hi) do not share
/// a strict sign.
struct Bracket {
  double lo;
  double hi;
  double f_lo;
  double f_hi;
};

enum class RootMethod { closed_form, bisect_newton };

struct RootResult {
  double root;
  double residual;   // f(root)
  int iterations;
  RootMethod method;
};

using ScalarFunction = std::function<ValueSlope(double)>;

Bracket make_bracket(const ScalarFunction& f, double lo, double hi);

/// Bisection down to a width of 1e-3, then Newton steps clipped to the
/// shrinking bracket (bisecting whenever a step would leave it). Stops once
/// the bracket is narrower than 1e-13 * max(1, |root|) or f hits zero.
///
/// Throws NoSignChange if f(lo), f(hi) have the same strict sign and
/// MaxIterationsExceeded after 200 iterations.
RootResult bisect_newton(const ScalarFunction& f, Bracket bracket,
                         double tol = kDefaultRootTol);

/// Largest real root of x^2 + b x + c, avoiding cancellation.
/// Throws NoRealRoot for a negative discriminant.
double largest_root_quadratic(double b, double c);

/// Largest real root of c0 x^3 + c1 x^2 + c2 x + c3 (c0 != 0), closed form
/// plus one Newton polish step.
double largest_real_root_cubic(std::span<const double, 4> coeffs);

/// Largest real root of a quartic via Ferrari's resolvent cubic, plus one
/// Newton polish step. Throws NoRealRoot if every root is complex.
double largest_real_root_quartic(std::span<const double, 5> coeffs);

/// Unique positive root of [1, -m_1, ..., -m_n] (all m_j >= 0, not all zero).
double unique_positive_root_cauchy(std::span<const double> coeffs,
                                   double tol = kDefaultRootTol);

}  // namespace zbound
