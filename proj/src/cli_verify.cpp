#include <algorithm>
#include <cmath>
#include <limits>

#include "zbound/aux_polys.hpp"
#include "zbound/cli.hpp"

namespace zbound::cli {
namespace {

constexpr double kChainSlack = 1e-10;
constexpr double kJlrTol = 1e-12;
constexpr double kIdentityTol = 1e-12;
constexpr double kResidualTol = 1e-10;
constexpr double kStrictGapTrigger = 0.1;

// Tracks the worst margin over many sub-checks; fails on the first negative.
struct Accumulator {
  std::string name;
  double margin = std::numeric_limits<double>::infinity();
  std::string detail;

  void observe(double m, const std::string& where) {
    if (m < margin) {
      margin = m;
      detail = where;
    }
  }
  CheckResult result() const {
    const bool empty = margin == std::numeric_limits<double>::infinity();
    return {name, empty || margin >= 0.0, empty ? 0.0 : margin, empty ? "vacuous" : detail};
  }
};

std::string at_ell(int ell) { return "l=" + std::to_string(ell); }

}  // namespace

std::vector<CheckResult> run_invariant_checks(const CoeffProfile& prof, const BoundReport& report,
                                              const RootSet* roots) {
  std::vector<CheckResult> out;
  const auto& ladder = report.ladder;
  const double floor_value = std::max(1.0, report.rho);
  const int q = prof.q;

  {
    Accumulator acc{"r_chain_nonincreasing", std::numeric_limits<double>::infinity(), {}};
    for (std::size_t k = 1; k < ladder.size(); ++k) {
      acc.observe(ladder[k - 1].r_ell - ladder[k].r_ell + kChainSlack, at_ell(ladder[k].ell));
    }
    out.push_back(acc.result());
  }
  {
    Accumulator acc{"r_q_above_max_1_rho", std::numeric_limits<double>::infinity(), {}};
    for (const auto& e : ladder) {
      if (e.ell == q) acc.observe(e.r_ell - floor_value + kChainSlack, at_ell(e.ell));
    }
    out.push_back(acc.result());
  }
  {
    Accumulator acc{"r_terminal_equals_max_1_rho", std::numeric_limits<double>::infinity(), {}};
    for (const auto& e : ladder) {
      if (e.ell > q) acc.observe(e.r_ell == floor_value ? 0.0 : -std::abs(e.r_ell - floor_value),
                                 at_ell(e.ell));
    }
    out.push_back(acc.result());
  }
  {
    Accumulator acc{"delta_chain", std::numeric_limits<double>::infinity(), {}};
    for (std::size_t k = 0; k < ladder.size(); ++k) {
      acc.observe(ladder[k].one_plus_delta - floor_value + kChainSlack, at_ell(ladder[k].ell));
      if (k > 0) {
        acc.observe(ladder[k - 1].one_plus_delta - ladder[k].one_plus_delta + kChainSlack,
                    at_ell(ladder[k].ell));
      }
    }
    out.push_back(acc.result());
  }
  {
    Accumulator weak{"dominance_r_le_delta", std::numeric_limits<double>::infinity(), {}};
    Accumulator strict{"dominance_strict", std::numeric_limits<double>::infinity(), {}};
    for (const auto& e : ladder) {
      const double gap = e.one_plus_delta - e.r_ell;
      weak.observe(gap + kChainSlack, at_ell(e.ell));
      if (prof.tail_max(e.ell) <= prof.A - kStrictGapTrigger) {
        strict.observe(gap - kChainSlack, at_ell(e.ell));
      }
    }
    out.push_back(weak.result());
    out.push_back(strict.result());
  }
  {
    Accumulator acc{"jlr_equals_r_2", std::numeric_limits<double>::infinity(), {}};
    for (const auto& e : ladder) {
      if (e.ell == 2) acc.observe(kJlrTol - std::abs(report.jlr - e.r_ell), at_ell(2));
    }
    out.push_back(acc.result());
  }
  {
    // P_l(1 + x) = Q_l(x) - A_l on a fixed grid.
    Accumulator acc{"shift_identity", std::numeric_limits<double>::infinity(), {}};
    for (const auto& e : ladder) {
      for (int k = 0; k <= 20; ++k) {
        const double x = -5.0 + 0.5 * k + 0.0123;
        const double q_val = eval_Q_ell(prof, e.ell, x);
        const double diff = std::abs(eval_P(prof, e.ell, 1.0 + x) - (q_val - prof.tail_max(e.ell)));
        acc.observe(kIdentityTol * std::max(1.0, std::abs(q_val)) - diff, at_ell(e.ell));
      }
    }
    out.push_back(acc.result());
  }
  {
    // Binomial expansion vs x F_l(1 + x), compared on the scale of the
    // largest term either route touches.
    Accumulator acc{"q_ell_dual_path", std::numeric_limits<double>::infinity(), {}};
    for (const auto& e : ladder) {
      if (e.ell > kMaxBinomialEll) continue;
      const auto coeffs = q_ell_coeffs_binomial(prof, e.ell);
      for (int k = 0; k <= 16; ++k) {
        const double x = prof.A * k / 16.0;
        const double diff = std::abs(eval_q_ell_binomial(coeffs, x) - eval_Q_ell(prof, e.ell, x));
        acc.observe(kIdentityTol * q_ell_majorant(prof, e.ell, x) - diff, at_ell(e.ell));
      }
    }
    out.push_back(acc.result());
  }
  {
    // Q_l(eps_l) = A_l and Q_l(delta_l) = A, through the binomial route
    // where it exists.
    Accumulator acc{"defining_equation_residuals", std::numeric_limits<double>::infinity(), {}};
    for (const auto& e : ladder) {
      if (e.ell > q) continue;
      std::vector<double> coeffs;
      if (e.ell <= kMaxBinomialEll) coeffs = q_ell_coeffs_binomial(prof, e.ell);
      auto q_at = [&](double x) {
        return coeffs.empty() ? eval_Q_ell(prof, e.ell, x) : eval_q_ell_binomial(coeffs, x);
      };
      const double eps = e.r_ell - 1.0;
      const double delta = e.one_plus_delta - 1.0;
      const double a_ell = prof.tail_max(e.ell);
      acc.observe(kResidualTol * std::max(a_ell, q_ell_majorant(prof, e.ell, eps)) -
                      std::abs(q_at(eps) - a_ell),
                  at_ell(e.ell) + " eps");
      acc.observe(kResidualTol * std::max(prof.A, q_ell_majorant(prof, e.ell, delta)) -
                      std::abs(q_at(delta) - prof.A),
                  at_ell(e.ell) + " delta");
    }
    out.push_back(acc.result());
  }
  if (roots != nullptr) {
    const ContainmentRecord rec = verify_containment(*roots, report);
    Accumulator acc{"containment", std::numeric_limits<double>::infinity(), {}};
    for (const auto& c : rec.checks) {
      acc.observe(c.margin + kContainmentSlack,
                  c.label + (c.ell > 0 ? " " + at_ell(c.ell) : std::string{}));
    }
    out.push_back(acc.result());
  }
  return out;
}

}  // namespace zbound::cli
