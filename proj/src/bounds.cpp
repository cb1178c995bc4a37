#include "zbound/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "zbound/aux_polys.hpp"
#include "zbound/error.hpp"
#include "zbound/oracle.hpp"

namespace zbound {
namespace {

// Solves f = 0 for an increasing f with f(lo) < 0 and f(hi) >= 0 in exact
// arithmetic; nudges hi outward if rounding leaves f(hi) just below zero.
double solve_upward(const ScalarFunction& f, double lo, double hi, double tol) {
  Bracket b = make_bracket(f, lo, hi);
  double step = 1e-12 * std::max(1.0, hi);
  for (int i = 0; i < 64 && b.f_hi < 0.0; ++i) {
    b.hi += step;
    b.f_hi = f(b.hi).value;
    step *= 2.0;
  }
  return bisect_newton(f, b, tol).root;
}

}  // namespace

const char* to_string(LadderMethod method) {
  switch (method) {
    case LadderMethod::closed_form: return "closed_form";
    case LadderMethod::iterative: return "iterative";
    case LadderMethod::terminal_rho: return "terminal_rho";
  }
  return "unknown";
}

double cauchy_bound(const CoeffProfile& prof) { return 1.0 + prof.A; }

double cauchy_rho(const CoeffProfile& prof, const BoundOptions& opts) {
  return unique_positive_root_cauchy(cauchy_Q_coeffs(prof), opts.tol);
}

double jlr_bound(const CoeffProfile& prof) {
  const double m1 = prof.modulus(1);
  const double d = m1 - 1.0;
  return 0.5 * (m1 + 1.0 + std::sqrt(d * d + 4.0 * prof.tail_max(2)));
}

double r_ell_closed_form(const CoeffProfile& prof, int ell) {
  const auto c = p_coeffs(prof, ell);
  switch (ell) {
    case 1: return 1.0 + prof.A;
    case 2: return largest_root_quadratic(c[1], c[2]);
    case 3: return largest_real_root_cubic(std::span<const double, 4>(c.data(), 4));
    case 4: return largest_real_root_quartic(std::span<const double, 5>(c.data(), 5));
    default:
      throw Error(ErrorCode::NoRealRoot, "closed form only available for l <= 4");
  }
}

double r_ell_iterative(const CoeffProfile& prof, int ell, const BoundOptions& opts) {
  const ScalarFunction f = [&prof, ell](double x) { return eval_P_with_slope(prof, ell, x); };
  return solve_upward(f, 1.0, 1.0 + prof.A, opts.tol);
}

RungValue r_ell(const CoeffProfile& prof, double rho, int ell, const BoundOptions& opts) {
  if (ell > prof.q) return {std::max(1.0, rho), LadderMethod::terminal_rho};
  if (ell <= 4) return {r_ell_closed_form(prof, ell), LadderMethod::closed_form};
  return {r_ell_iterative(prof, ell, opts), LadderMethod::iterative};
}

double delta_ell(const CoeffProfile& prof, int ell, const BoundOptions& opts) {
  if (ell == 1) return 1.0 + prof.A;
  const double A = prof.A;
  const ScalarFunction g = [&prof, ell, A](double x) {
    const auto q = eval_Q_ell_with_slope(prof, ell, x);
    return ValueSlope{q.value - A, q.slope};
  };
  return 1.0 + solve_upward(g, std::min(1e-12, 0.5 * A), A, opts.tol);
}

BoundReport full_report(const Polynomial& p, int ell_max, bool with_oracle,
                        const BoundOptions& opts) {
  const CoeffProfile prof = profile(p);
  BoundReport report;
  report.degree = prof.degree;
  report.q = prof.q;
  report.cauchy_one_plus_A = cauchy_bound(prof);
  report.rho = cauchy_rho(prof, opts);
  report.jlr = jlr_bound(prof);
  report.ladder.reserve(static_cast<std::size_t>(std::max(ell_max, 0)));
  for (int ell = 1; ell <= ell_max; ++ell) {
    const RungValue r = r_ell(prof, report.rho, ell, opts);
    report.ladder.push_back({ell, r.value, delta_ell(prof, ell, opts), r.method});
  }
  if (with_oracle) {
    const RootSet roots = all_roots(p);
    report.oracle = OracleSummary{max_modulus(roots), roots.converged};
  }
  return report;
}

}  // namespace zbound
