#pragma once

#include <optional>
#include <vector>

#include "zbound/polynomial.hpp"
#include "zbound/scalar_roots.hpp"

namespace zbound {

struct BoundOptions {
  double tol = kDefaultRootTol;
};

enum class LadderMethod { closed_form, iterative, terminal_rho };

const char* to_string(LadderMethod method);

/// One rung of the two bound ladders. r_ell = 1 + eps_l is the sharpened
/// bound, one_plus_delta = 1 + delta_l the older one; r_ell <= one_plus_delta.
struct LadderEntry {
  int ell = 0;
  double r_ell = 0.0;
  double one_plus_delta = 0.0;
  LadderMethod method = LadderMethod::closed_form;
};

struct OracleSummary {
  double max_modulus = 0.0;
  bool converged = false;
};

struct BoundReport {
  int degree = 0;
  int q = 0;
  double cauchy_one_plus_A = 0.0;
  double rho = 0.0;
  double jlr = 0.0;
  std::vector<LadderEntry> ladder;  // ell = 1, 2, ...
  std::optional<OracleSummary> oracle;
};

/// 1 + A.
double cauchy_bound(const CoeffProfile& prof);

/// Cauchy radius: the unique positive zero of x^n - m_1 x^{n-1} - ... - m_n.
double cauchy_rho(const CoeffProfile& prof, const BoundOptions& opts = {});

/// (m_1 + 1 + sqrt((m_1 - 1)^2 + 4 A_2)) / 2.
double jlr_bound(const CoeffProfile& prof);

struct RungValue {
  double value;
  LadderMethod method;
};

/// r_l: the largest real zero of P_l. For l > q this is max(1, rho) and is
/// returned without solving; l = 1 gives 1 + A; l in {2,3,4} use the closed
/// forms; larger l bisect/Newton on [1, 1 + A].
RungValue r_ell(const CoeffProfile& prof, double rho, int ell, const BoundOptions& opts = {});

/// Closed-form route for 1 <= l <= min(4, q).
double r_ell_closed_form(const CoeffProfile& prof, int ell);

/// Iterative route for 1 <= l <= q (bracket [1, 1 + A]).
double r_ell_iterative(const CoeffProfile& prof, int ell, const BoundOptions& opts = {});

/// 1 + delta_l, where delta_l > 0 solves x F_l(1 + x) = A.
double delta_ell(const CoeffProfile& prof, int ell, const BoundOptions& opts = {});

/// Smallest l at which the r-ladder reaches max(1, rho).
inline int default_ell_max(const CoeffProfile& prof) { return prof.q + 1; }

/// Classical bounds plus both ladders for l = 1..ell_max. With the oracle
/// enabled the maximum zero modulus is attached (throws NotConverged).
BoundReport full_report(const Polynomial& p, int ell_max, bool with_oracle,
                        const BoundOptions& opts = {});

}  // namespace zbound
