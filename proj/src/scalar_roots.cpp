#include "zbound/scalar_roots.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "zbound/error.hpp"
#include "zbound/polynomial.hpp"

namespace zbound {
namespace {

constexpr double kNewtonSwitchWidth = 1e-3;

// One Newton step on a dense polynomial; keeps the input if the step is
// not finite or makes the residual worse.
double newton_polish(std::span<const double> coeffs, double x) {
  const auto [value, slope] = horner_with_slope(coeffs, x);
  if (slope == 0.0 || !std::isfinite(value)) return x;
  const double next = x - value / slope;
  if (!std::isfinite(next)) return x;
  return std::abs(horner(coeffs, next)) <= std::abs(value) ? next : x;
}

// Largest real root of the depressed cubic t^3 + p t + q.
double largest_depressed_cubic_root(double p, double q) {
  if (p == 0.0) return std::cbrt(-q);
  const double half_q = q / 2.0;
  const double third_p = p / 3.0;
  const double disc = half_q * half_q + third_p * third_p * third_p;
  if (disc > 0.0) {
    // One real root. Pick the cube root branch without cancellation.
    const double u = std::cbrt(-half_q - std::copysign(std::sqrt(disc), half_q));
    return u == 0.0 ? 0.0 : u - third_p / u;
  }
  // Three real roots (p < 0).
  const double r = std::sqrt(-third_p);
  const double cos_theta = std::clamp(-half_q / (r * r * r), -1.0, 1.0);
  return 2.0 * r * std::cos(std::acos(cos_theta) / 3.0);
}

}  // namespace

Bracket make_bracket(const ScalarFunction& f, double lo, double hi) {
  return {lo, hi, f(lo).value, f(hi).value};
}

RootResult bisect_newton(const ScalarFunction& f, Bracket bracket, double tol) {
  if (!(bracket.lo < bracket.hi)) {
    throw Error(ErrorCode::NoSignChange, "bracket endpoints are not ordered");
  }
  if (bracket.f_lo == 0.0) return {bracket.lo, 0.0, 0, RootMethod::bisect_newton};
  if (bracket.f_hi == 0.0) return {bracket.hi, 0.0, 0, RootMethod::bisect_newton};
  if ((bracket.f_lo > 0.0) == (bracket.f_hi > 0.0)) {
    throw Error(ErrorCode::NoSignChange, "function has the same sign at both bracket ends");
  }

  // Work with g = sign * f so that g(lo) < 0 < g(hi).
  const double sign = bracket.f_lo < 0.0 ? 1.0 : -1.0;
  double lo = bracket.lo;
  double hi = bracket.hi;
  const double width_factor = 0.1 * tol;

  auto target_width = [&](double x) { return width_factor * std::max(1.0, std::abs(x)); };

  double x = 0.5 * (lo + hi);
  ValueSlope gx{};
  bool have_point = false;
  int iterations = 0;

  // Evaluates g at x, narrows the bracket. Returns true on an exact zero.
  auto probe = [&](double at) {
    if (++iterations > kMaxRootIterations) {
      throw Error(ErrorCode::MaxIterationsExceeded,
                  "bisect_newton exceeded " + std::to_string(kMaxRootIterations) + " iterations");
    }
    const auto v = f(at);
    x = at;
    gx = {sign * v.value, sign * v.slope};
    have_point = true;
    if (gx.value == 0.0) return true;
    (gx.value < 0.0 ? lo : hi) = at;
    return false;
  };

  auto finish = [&](double root) {
    return RootResult{root, f(root).value, iterations, RootMethod::bisect_newton};
  };

  while (true) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= target_width(mid) || mid <= lo || mid >= hi) return finish(mid);

    double next = mid;
    bool newton = false;
    if (have_point && hi - lo <= kNewtonSwitchWidth && gx.slope != 0.0) {
      const double candidate = x - gx.value / gx.slope;
      if (candidate > lo && candidate < hi) {
        next = candidate;
        newton = true;
      }
    }
    const double step = std::abs(next - x);
    if (probe(next)) return finish(next);

    // A converged Newton iterate only narrows one side; straddle it to
    // certify the enclosure.
    if (newton && step <= target_width(next)) {
      const double h = 0.5 * target_width(next);
      const double left = std::max(lo, next - h);
      const double right = std::min(hi, next + h);
      if (left > lo && probe(left)) return finish(left);
      if (right < hi && probe(right)) return finish(right);
    }
  }
}

double largest_root_quadratic(double b, double c) {
  const double disc = b * b - 4.0 * c;
  if (disc < 0.0) {
    throw Error(ErrorCode::NoRealRoot, "quadratic has a negative discriminant");
  }
  const double s = std::sqrt(disc);
  if (b <= 0.0) return 0.5 * (-b + s);
  // -b + s cancels; use the product of the roots instead.
  const double other = 0.5 * (-b - s);
  return c / other;
}

double largest_real_root_cubic(std::span<const double, 4> coeffs) {
  const double a = coeffs[1] / coeffs[0];
  const double b = coeffs[2] / coeffs[0];
  const double c = coeffs[3] / coeffs[0];
  const double shift = a / 3.0;
  const double p = b - a * shift;
  const double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
  const double x = largest_depressed_cubic_root(p, q) - shift;
  return newton_polish(coeffs, x);
}

double largest_real_root_quartic(std::span<const double, 5> coeffs) {
  const double a = coeffs[1] / coeffs[0];
  const double b = coeffs[2] / coeffs[0];
  const double c = coeffs[3] / coeffs[0];
  const double d = coeffs[4] / coeffs[0];
  const double shift = a / 4.0;
  const double a2 = a * a;
  const double p = b - 3.0 * a2 / 8.0;
  const double q = c - a * b / 2.0 + a2 * a / 8.0;
  const double r = d - a * c / 4.0 + a2 * b / 16.0 - 3.0 * a2 * a2 / 256.0;

  // Real roots of y^2 + s y + t, tolerating rounding-level negative
  // discriminants (double roots).
  double best = -std::numeric_limits<double>::infinity();
  auto take_quadratic = [&](double s, double t) {
    double disc = s * s - 4.0 * t;
    const double scale = std::max({s * s, std::abs(t), 1e-300});
    if (disc < 0.0 && disc > -1e-12 * scale) disc = 0.0;
    if (disc < 0.0) return;
    best = std::max(best, largest_root_quadratic(s, t));
  };

  const double mag = std::max({p * p, std::abs(r), 1e-300});
  bool biquadratic = std::abs(q) <= 1e-14 * std::pow(mag, 0.75);
  if (!biquadratic) {
    // y^4 + p y^2 + q y + r = (y^2 + m)^2 - (s y - q/(2s))^2 with s^2 = 2m - p
    // requires 8m^3 - 4p m^2 - 8r m + 4pr - q^2 = 0. The resolvent equals
    // -q^2 at m = p/2, so its largest real root has 2m - p > 0.
    const std::array<double, 4> resolvent{8.0, -4.0 * p, -8.0 * r, 4.0 * p * r - q * q};
    const double m = largest_real_root_cubic(resolvent);
    const double s2 = 2.0 * m - p;
    if (s2 > 0.0) {
      const double s = std::sqrt(s2);
      const double k = q / (2.0 * s);
      take_quadratic(s, m - k);
      take_quadratic(-s, m + k);
    } else {
      biquadratic = true;
    }
  }
  if (biquadratic) {
    // z^2 + p z + r with z = y^2.
    double disc = p * p - 4.0 * r;
    if (disc < 0.0 && disc > -1e-12 * mag) disc = 0.0;
    if (disc >= 0.0) {
      const double z = largest_root_quadratic(p, r);
      if (z >= 0.0) best = std::max(best, std::sqrt(z));
    }
  }
  if (!std::isfinite(best)) {
    throw Error(ErrorCode::NoRealRoot, "quartic has no real root");
  }
  return newton_polish(coeffs, best - shift);
}

double unique_positive_root_cauchy(std::span<const double> coeffs, double tol) {
  std::size_t len = coeffs.size();
  while (len > 1 && std::abs(coeffs[len - 1]) < kModulusFloor) --len;
  if (len < 2) {
    throw Error(ErrorCode::DegenerateAllZeroTail, "Cauchy polynomial has no nonzero tail");
  }
  const std::vector<double> deflated(coeffs.begin(), coeffs.begin() + static_cast<long>(len));
  double A = 0.0;
  for (std::size_t j = 1; j < len; ++j) A = std::max(A, std::abs(deflated[j]));

  const ScalarFunction f = [&deflated](double x) { return horner_with_slope(deflated, x); };
  double lo = 1e-12;
  if (f(lo).value >= 0.0) lo = 0.0;
  return bisect_newton(f, make_bracket(f, lo, 1.0 + A), tol).root;
}

}  // namespace zbound
