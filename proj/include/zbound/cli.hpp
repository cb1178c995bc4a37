#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "zbound/bounds.hpp"
#include "zbound/oracle.hpp"
#include "zbound/polynomial.hpp"

namespace zbound::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInvariantFailure = 1,
  kExitInputError = 2,
  kExitNonConvergence = 3,
};

enum class OutputKind { table, json, csv };

struct OutputFormat {
  OutputKind kind = OutputKind::table;
  int digits = 5;  // table rounding, 1..17
};

/// Test seam: lets a test tamper with the report `verify` is about to check.
struct RunHooks {
  std::function<void(BoundReport&)> tamper_report;
};

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const RunHooks& hooks = {});

/// Comma-separated coefficients, highest power first; entries are reals or
/// `re+imi` / `re-imi` / `imi`.
std::vector<Complex> parse_coefficient_list(std::string_view text);

/// printf-style fixed rounding (ties of exactly representable values go to
/// even).
std::string format_fixed(double value, int digits);

/// Shortest round-trip decimal.
std::string format_shortest(double value);

std::string report_to_json(const BoundReport& report);
std::string report_to_table(const Polynomial& p, const BoundReport& report, int digits);
std::string report_to_csv(const BoundReport& report);

// --- verify ---------------------------------------------------------------

struct CheckResult {
  std::string name;
  bool pass = false;
  double margin = 0.0;  // distance to the failure threshold; negative when failing
  std::string detail;
};

/// Runs every invariant the bounds promise against a computed report. `roots`
/// may be null, in which case containment is skipped.
std::vector<CheckResult> run_invariant_checks(const CoeffProfile& prof, const BoundReport& report,
                                              const RootSet* roots);

// --- bench ----------------------------------------------------------------

enum class Distribution { uniform, loguniform };

struct BenchConfig {
  int degree = 10;
  int count = 100;
  Distribution dist = Distribution::uniform;
  std::uint64_t seed = 0;
  BoundOptions bound_opts;
};

struct BenchRow {
  int ell = 0;
  double mean_gap_eps = 0.0;
  double median_gap_eps = 0.0;
  double mean_gap_delta = 0.0;
  double median_gap_delta = 0.0;
  int count = 0;
};

struct BenchResult {
  std::vector<BenchRow> rows;
  int skipped = 0;
  int total = 0;
};

/// Real monic polynomial with a_j ~ U(-1, 1) (uniform) or
/// +-10^U(-2, 2) (loguniform). Uses only raw 64-bit draws so the stream is
/// identical across standard libraries.
Polynomial random_polynomial(int degree, Distribution dist, std::mt19937_64& rng);

/// Relative gaps (bound - max|zero|) / max|zero| per l = 1..degree+1.
BenchResult run_bench(const BenchConfig& cfg);

std::string bench_to_csv(const BenchResult& result);

}  // namespace zbound::cli
