// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Golden values are the published five-decimal tables.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "support/corpus.hpp"
#include "zbound/aux_polys.hpp"
#include "zbound/bounds.hpp"
#include "zbound/cli.hpp"
#include "zbound/oracle.hpp"

namespace {

using namespace zbound;

constexpr double kTableTol = 1e-4;
constexpr std::size_t kCorpusSize = 1000;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

struct GoldenRow {
  int ell;
  double r_ell;
  double one_plus_delta;
};

struct Golden {
  std::vector<std::string> args;
  std::vector<GoldenRow> rows;
  double rho;
  std::optional<double> max_modulus;
  double max_seconds;
};

Outcome check_golden(const Golden& g) {
  Outcome o;
  std::ostringstream out, err;
  const auto t0 = std::chrono::steady_clock::now();
  const int code = cli::run(g.args, out, err);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (code != 0) {
    o.fail("exit code " + std::to_string(code) + ": " + err.str());
    return o;
  }
  const auto j = nlohmann::json::parse(out.str());
  std::map<int, std::pair<double, double>> ladder;
  for (const auto& row : j["ladder"]) {
    ladder[row["ell"].get<int>()] = {row["r_ell"].get<double>(), row["one_plus_delta"].get<double>()};
  }
  double worst = 0.0;
  for (const auto& row : g.rows) {
    if (!ladder.count(row.ell)) {
      o.fail("missing row l=" + std::to_string(row.ell));
      continue;
    }
    const auto [r, d] = ladder[row.ell];
    const double err_r = std::abs(r - row.r_ell);
    const double err_d = std::abs(d - row.one_plus_delta);
    worst = std::max({worst, err_r, err_d});
    if (err_r > kTableTol) o.fail("l=" + std::to_string(row.ell) + " 1+eps off by " + fmt(err_r));
    if (err_d > kTableTol) o.fail("l=" + std::to_string(row.ell) + " 1+delta off by " + fmt(err_d));
  }
  const double err_rho = std::abs(j["rho"].get<double>() - g.rho);
  worst = std::max(worst, err_rho);
  if (err_rho > kTableTol) o.fail("rho off by " + fmt(err_rho));
  if (g.max_modulus) {
    const double m = j["oracle"]["max_modulus"].get<double>();
    const double err_m = std::abs(m - *g.max_modulus);
    worst = std::max(worst, err_m);
    if (err_m > kTableTol) o.fail("max modulus off by " + fmt(err_m));
  }
  if (seconds >= g.max_seconds) {
    o.fail("runtime " + fmt(seconds) + " s >= " + fmt(g.max_seconds) + " s");
  }
  if (o.pass) o.detail = "max abs error " + fmt(worst) + ", runtime " + fmt(seconds) + " s";
  return o;
}

struct CorpusEntry {
  Polynomial poly;
  CoeffProfile prof;
  BoundReport report;
};

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> out;
    for (auto& p : zbound::testing::make_corpus(kCorpusSize)) {
      CoeffProfile prof = profile(p);
      // Two rungs past q so the terminal plateau is exercised.
      BoundReport report = full_report(p, prof.q + 2, false);
      out.push_back({std::move(p), std::move(prof), std::move(report)});
    }
    return out;
  }();
  return entries;
}

Outcome ac4_chain() {
  Outcome o;
  int with_zero_tail = 0;
  for (const auto& e : corpus()) {
    const double floor_value = std::max(1.0, e.report.rho);
    with_zero_tail += e.prof.q < e.prof.degree ? 1 : 0;
    const auto& lad = e.report.ladder;
    for (std::size_t k = 1; k < lad.size(); ++k) {
      if (lad[k].r_ell > lad[k - 1].r_ell + 1e-10) {
        o.fail("ladder increases at l=" + std::to_string(lad[k].ell));
      }
    }
    for (const auto& r : lad) {
      if (r.ell == e.prof.q && !(r.r_ell > floor_value - 1e-10)) {
        o.fail("r_q not above max(1,rho): gap " + fmt(r.r_ell - floor_value));
      }
      if (r.ell > e.prof.q && (r.r_ell != floor_value || r.method != LadderMethod::terminal_rho)) {
        o.fail("r_l != max(1,rho) past q");
      }
    }
  }
  if (with_zero_tail == 0) o.fail("corpus has no q < n instance");
  if (o.pass) o.detail = std::to_string(corpus().size()) + " polynomials, " +
                         std::to_string(with_zero_tail) + " with q < n";
  return o;
}

Outcome ac5_dominance() {
  Outcome o;
  int strict_cases = 0;
  int strict_failures = 0;
  int weak_failures = 0;
  double min_strict = INFINITY;
  for (const auto& e : corpus()) {
    for (const auto& r : e.report.ladder) {
      if (r.r_ell > r.one_plus_delta + 1e-10) ++weak_failures;
      if (e.prof.tail_max(r.ell) <= e.prof.A - 0.1) {
        ++strict_cases;
        const double gap = r.one_plus_delta - r.r_ell;
        min_strict = std::min(min_strict, gap);
        if (!(gap > 1e-10)) ++strict_failures;
      }
    }
  }
  if (weak_failures > 0) o.fail(std::to_string(weak_failures) + " rungs with r_l > 1+delta_l + 1e-10");
  if (strict_failures > 0) {
    o.fail(std::to_string(strict_failures) + " of " + std::to_string(strict_cases) +
           " strict cases have gap <= 1e-10 (min gap " + fmt(min_strict) + ")");
  }
  if (o.pass) o.detail = std::to_string(strict_cases) + " strict cases, min gap " + fmt(min_strict);
  return o;
}

Outcome ac6_shift_identity() {
  Outcome o;
  std::mt19937_64 rng(6);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const auto& e = corpus()[rng() % corpus().size()];
    const int ell = 1 + static_cast<int>(rng() % static_cast<unsigned>(e.prof.degree + 2));
    const double x = -5.0 + 10.0 * zbound::testing::unit(rng);
    const double q_val = eval_Q_ell(e.prof, ell, x);
    const double diff = std::abs(eval_P(e.prof, ell, 1.0 + x) - (q_val - e.prof.tail_max(ell)));
    const double rel = diff / std::max(1.0, std::abs(q_val));
    worst = std::max(worst, rel);
    if (rel > 1e-12) o.fail("identity off by " + fmt(rel) + " at l=" + std::to_string(ell));
  }
  if (o.pass) o.detail = "1000 triples, worst scaled error " + fmt(worst);
  return o;
}

Outcome ac7_dual_path() {
  Outcome o;
  double worst = 0.0;
  long comparisons = 0;
  for (std::size_t i = 0; i < corpus().size(); ++i) {
    const auto& e = corpus()[i];
    for (int ell = 1; ell <= kMaxBinomialEll; ++ell) {
      const auto coeffs = q_ell_coeffs_binomial(e.prof, ell);
      std::vector<double> xs;
      for (int k = 0; k <= 8; ++k) xs.push_back(-5.0 + 1.25 * k + 0.01);
      for (int k = 1; k <= 4; ++k) xs.push_back(e.prof.A * k / 4.0);
      if (ell <= static_cast<int>(e.report.ladder.size())) {
        xs.push_back(e.report.ladder[ell - 1].r_ell - 1.0);
        xs.push_back(e.report.ladder[ell - 1].one_plus_delta - 1.0);
      }
      for (double x : xs) {
        const double a = eval_q_ell_binomial(coeffs, x);
        const double b = eval_Q_ell(e.prof, ell, x);
        const double rel = std::abs(a - b) / q_ell_majorant(e.prof, ell, x);
        ++comparisons;
        worst = std::max(worst, rel);
        if (rel > 1e-12) o.fail("paths differ by " + fmt(rel) + " at l=" + std::to_string(ell));
      }
    }
  }
  if (o.pass) o.detail = std::to_string(comparisons) + " comparisons, worst " + fmt(worst);
  return o;
}

Outcome ac8_closed_vs_iterative() {
  Outcome o;
  double worst = 0.0, worst_jlr = 0.0;
  for (const auto& e : corpus()) {
    for (int ell = 2; ell <= std::min(4, e.prof.q); ++ell) {
      const double diff =
          std::abs(r_ell_closed_form(e.prof, ell) - r_ell_iterative(e.prof, ell));
      worst = std::max(worst, diff);
      if (diff > 1e-9) o.fail("l=" + std::to_string(ell) + " routes differ by " + fmt(diff));
    }
    const double r2 = r_ell(e.prof, e.report.rho, 2).value;
    const double d2 = std::abs(r2 - jlr_bound(e.prof));
    worst_jlr = std::max(worst_jlr, d2);
    if (d2 > 1e-12) o.fail("r_2 differs from JLR by " + fmt(d2));
  }
  if (o.pass) o.detail = "worst route gap " + fmt(worst) + ", worst JLR gap " + fmt(worst_jlr);
  return o;
}

Outcome ac9_containment() {
  Outcome o;
  double min_margin = INFINITY;
  for (const auto& e : corpus()) {
    RootSet rs;
    try {
      rs = all_roots(e.poly);
    } catch (const NotConverged&) {
      o.fail("oracle did not converge on a degree-" + std::to_string(e.prof.degree) + " input");
      continue;
    }
    for (Complex z : rs.roots) {
      const double m = std::abs(z);
      min_margin = std::min(min_margin, e.report.rho - m);
      if (!(m <= e.report.rho + 1e-8)) o.fail("|z| exceeds rho by " + fmt(m - e.report.rho));
      for (const auto& r : e.report.ladder) {
        if (r.ell <= e.prof.q && !(m < r.r_ell + 1e-8)) {
          o.fail("|z| exceeds r_l at l=" + std::to_string(r.ell));
        }
      }
    }
  }
  if (o.pass) o.detail = "min (rho - |z|) " + fmt(min_margin);
  return o;
}

Outcome ac10_worked_case() {
  Outcome o;
  for (double a : {0.5, 2.0}) {
    for (int n : {3, 8}) {
      std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
      c[0] = 1.0;
      c[1] = a;
      const Polynomial p = normalize(std::span<const double>(c));
      const CoeffProfile prof = profile(p);
      const std::string tag = "|a|=" + fmt(a) + " n=" + std::to_string(n);
      if (prof.q != 1) o.fail(tag + ": q != 1");
      const double rho = cauchy_rho(prof);
      if (std::abs(rho - a) > 1e-10) o.fail(tag + ": rho off by " + fmt(rho - a));
      const double target = std::max(1.0, a);
      if (std::abs(jlr_bound(prof) - target) > 1e-12) o.fail(tag + ": JLR != max(1,|a|)");
      for (int ell = 2; ell <= n + 3; ++ell) {
        if (std::abs(r_ell(prof, rho, ell).value - target) > 1e-10) {
          o.fail(tag + ": r_l != max(1,|a|) at l=" + std::to_string(ell));
        }
      }
    }
  }
  if (o.pass) o.detail = "|a| in {0.5, 2}, n in {3, 8}";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1 golden table, z^5+3z^4+2z^2+2",
       [] {
         return check_golden({{"compute", "--poly", "z^5+3z^4+2z^2+2", "--ell-max", "6",
                               "--format", "json"},
                              {{1, 4.00000, 4.00000},
                               {2, 3.73205, 4.00000},
                               {3, 3.26953, 3.37442},
                               {4, 3.26953, 3.30278},
                               {5, 3.21989, 3.23138},
                               {6, 3.21256, 3.22350}},
                              3.21256,
                              std::nullopt,
                              0.1});
       }},
      {"AC2 golden table, degree-10 example with oracle",
       [] {
         return check_golden({{"compute", "--coeffs", "1,2,-3,0,0,2,-1,0,0,1,2", "--ell-max",
                               "11", "--oracle", "--format", "json"},
                              {{1, 4.00000, 4.00000},
                               {2, 3.30278, 3.30278},
                               {3, 3.21432, 3.30278},
                               {4, 3.07678, 3.11111},
                               {5, 3.02675, 3.03942},
                               {10, 3.02124, 3.02129},
                               {11, 3.02120, 3.02125}},
                              3.02120,
                              3.02106,
                              0.5});
       }},
      {"AC3 golden table, degree-20 example",
       [] {
         return check_golden({{"compute", "--poly",
                               "z^20 - 0.6z^19 - 0.3z^15 - 0.2z^8 - 0.1z - 0.2", "--ell-max",
                               "21", "--format", "json"},
                              {{1, 1.60000, 1.60000},
                               {2, 1.38310, 1.60000},
                               {3, 1.31742, 1.46954},
                               {4, 1.27413, 1.39150},
                               {5, 1.24297, 1.33864},
                               {6, 1.20500, 1.31930},
                               {10, 1.15805, 1.22986},
                               {21, 1.05673, 1.14649}},
                              1.05673,
                              std::nullopt,
                              1.0});
       }},
      {"AC4 chain r_1 >= ... >= r_q > max(1,rho) = r_{q+1}", ac4_chain},
      {"AC5 dominance r_l <= 1+delta_l (strict when A_l <= A-0.1)", ac5_dominance},
      {"AC6 shift identity P_l(1+x) = Q_l(x) - A_l", ac6_shift_identity},
      {"AC7 binomial vs product Q_l paths (l <= 60)", ac7_dual_path},
      {"AC8 closed form vs iterative (l = 2,3,4), r_2 = JLR", ac8_closed_vs_iterative},
      {"AC9 containment against the root oracle", ac9_containment},
      {"AC10 z^n + a z^(n-1) worked case", ac10_worked_case},
  };

  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("[%s] %s -- %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu acceptance criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
