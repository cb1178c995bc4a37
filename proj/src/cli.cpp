#include "zbound/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zbound/error.hpp"

namespace zbound::cli {
namespace {

double parse_real(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw Error(ErrorCode::SyntaxError, "malformed coefficient '" + std::string(whole) + "'");
  }
  return v;
}

Complex parse_coefficient(std::string_view entry) {
  while (!entry.empty() && entry.front() == ' ') entry.remove_prefix(1);
  while (!entry.empty() && entry.back() == ' ') entry.remove_suffix(1);
  if (entry.empty() || entry.back() != 'i') return {parse_real(entry, entry), 0.0};

  const std::string_view body = entry.substr(0, entry.size() - 1);
  // Split before the last sign that does not start the entry or an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag_part = [&](std::string_view s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_real(s, entry);
  };
  if (split == std::string_view::npos) return {0.0, imag_part(body)};
  return {parse_real(body.substr(0, split), entry), imag_part(body.substr(split))};
}

struct InputArgs {
  std::string poly;
  std::string coeffs;
};

Polynomial read_polynomial(const InputArgs& in) {
  const bool have_poly = !in.poly.empty();
  const bool have_coeffs = !in.coeffs.empty();
  if (have_poly == have_coeffs) {
    throw Error(ErrorCode::SyntaxError, "give exactly one of --poly or --coeffs");
  }
  if (have_poly) return parse_expression(in.poly);
  const auto c = parse_coefficient_list(in.coeffs);
  return normalize(std::span<const Complex>(c));
}

void add_input_options(CLI::App* cmd, InputArgs& in) {
  auto* poly = cmd->add_option("--poly", in.poly, "polynomial expression, e.g. \"z^5+3z^4+2\"");
  cmd->add_option("--coeffs", in.coeffs,
                  "comma-separated coefficients, highest power first (complex as re+imi)")
      ->excludes(poly);
}

int report_error(std::ostream& err, const Error& e) {
  err << "error: " << e.what() << " [" << to_string(e.code()) << "]\n";
  switch (e.code()) {
    case ErrorCode::NoSignChange:
    case ErrorCode::MaxIterationsExceeded:
    case ErrorCode::NoRealRoot:
    case ErrorCode::NotConverged:
      return kExitNonConvergence;
    default:
      return kExitInputError;
  }
}

struct CommonOptions {
  std::optional<int> ell_max;
  bool oracle = false;
  std::string format = "table";
  int digits = 5;
  double tol = kDefaultRootTol;
};

void validate(const CommonOptions& o) {
  if (o.digits < 1 || o.digits > 17) {
    throw Error(ErrorCode::SyntaxError, "--digits must be in [1, 17]");
  }
  if (!(o.tol > 0.0) || !std::isfinite(o.tol)) {
    throw Error(ErrorCode::SyntaxError, "--tol must be a positive number");
  }
  if (o.ell_max && *o.ell_max < 1) {
    throw Error(ErrorCode::SyntaxError, "--ell-max must be at least 1");
  }
}

int cmd_compute(const InputArgs& in, const CommonOptions& opts, std::ostream& out,
                std::ostream& err) {
  try {
    validate(opts);
    const Polynomial p = read_polynomial(in);
    const CoeffProfile prof = profile(p);
    const int ell_max = opts.ell_max.value_or(default_ell_max(prof));
    const BoundReport report = full_report(p, ell_max, opts.oracle, {opts.tol});
    if (opts.format == "json") {
      out << report_to_json(report) << '\n';
    } else if (opts.format == "csv") {
      out << report_to_csv(report);
    } else {
      out << report_to_table(p, report, opts.digits);
    }
    return kExitOk;
  } catch (const Error& e) {
    return report_error(err, e);
  }
}

int cmd_verify(const InputArgs& in, const CommonOptions& opts, std::ostream& out,
               std::ostream& err, const RunHooks& hooks) {
  try {
    validate(opts);
    const Polynomial p = read_polynomial(in);
    const CoeffProfile prof = profile(p);
    const int ell_max = opts.ell_max.value_or(std::max(2, default_ell_max(prof)));
    BoundReport report = full_report(p, ell_max, false, {opts.tol});
    const RootSet roots = all_roots(p);
    report.oracle = OracleSummary{max_modulus(roots), roots.converged};
    if (hooks.tamper_report) hooks.tamper_report(report);

    const auto checks = run_invariant_checks(prof, report, &roots);
    int failed = 0;
    for (const auto& c : checks) {
      out << (c.pass ? "PASS  " : "FAIL  ") << c.name;
      for (std::size_t pad = c.name.size(); pad < 28; ++pad) out << ' ';
      out << "margin=" << format_shortest(c.margin);
      if (!c.detail.empty()) out << "  " << c.detail;
      out << '\n';
      failed += c.pass ? 0 : 1;
    }
    if (failed == 0) {
      out << "verify: all " << checks.size() << " checks passed\n";
      return kExitOk;
    }
    out << "verify: " << failed << " of " << checks.size() << " checks FAILED\n";
    return kExitInvariantFailure;
  } catch (const Error& e) {
    return report_error(err, e);
  }
}

struct BenchArgs {
  int degree = 10;
  int count = 100;
  std::string dist = "uniform";
  std::uint64_t seed = 0;
  double tol = kDefaultRootTol;
};

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  if (args.degree < 2 || args.degree > 64) {
    err << "error: --degree must be in [2, 64]\n";
    return kExitInputError;
  }
  if (args.count < 1) {
    err << "error: --count must be at least 1\n";
    return kExitInputError;
  }
  if (!(args.tol > 0.0)) {
    err << "error: --tol must be a positive number\n";
    return kExitInputError;
  }
  BenchConfig cfg;
  cfg.degree = args.degree;
  cfg.count = args.count;
  cfg.dist = args.dist == "loguniform" ? Distribution::loguniform : Distribution::uniform;
  cfg.seed = args.seed;
  cfg.bound_opts.tol = args.tol;
  try {
    const BenchResult result = run_bench(cfg);
    out << bench_to_csv(result);
    if (result.skipped > 0) {
      err << "bench: " << result.skipped << " of " << result.total
          << " instances skipped (oracle did not converge)\n";
    }
    // 5% skip budget
    if (result.skipped * 20 >= result.total && result.skipped > 0) return kExitNonConvergence;
    return kExitOk;
  } catch (const Error& e) {
    return report_error(err, e);
  }
}

}  // namespace

std::vector<Complex> parse_coefficient_list(std::string_view text) {
  std::vector<Complex> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_coefficient(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_fixed(double value, int digits) {
  char buf[512];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

std::string format_shortest(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

std::string report_to_json(const BoundReport& report) {
  nlohmann::ordered_json j;
  j["degree"] = report.degree;
  j["q"] = report.q;
  j["rho"] = report.rho;
  j["cauchy"] = report.cauchy_one_plus_A;
  j["jlr"] = report.jlr;
  j["ladder"] = nlohmann::ordered_json::array();
  for (const auto& e : report.ladder) {
    nlohmann::ordered_json row;
    row["ell"] = e.ell;
    row["r_ell"] = e.r_ell;
    row["one_plus_delta"] = e.one_plus_delta;
    row["method"] = to_string(e.method);
    j["ladder"].push_back(std::move(row));
  }
  if (report.oracle) {
    j["oracle"] = {{"max_modulus", report.oracle->max_modulus},
                   {"converged", report.oracle->converged}};
  } else {
    j["oracle"] = nullptr;
  }
  return j.dump(2);
}

std::string report_to_table(const Polynomial& p, const BoundReport& report, int digits) {
  std::ostringstream os;
  auto line = [&](const char* key, const std::string& value) {
    os << key;
    for (std::size_t pad = std::char_traits<char>::length(key); pad < 12; ++pad) os << ' ';
    os << value << '\n';
  };
  line("polynomial", render(p));
  line("degree", std::to_string(report.degree));
  line("q", std::to_string(report.q));
  line("1+A", format_fixed(report.cauchy_one_plus_A, digits));
  line("rho", format_fixed(report.rho, digits));
  line("JLR", format_fixed(report.jlr, digits));
  os << '\n';

  const int width = digits + 8;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%5s  %*s  %*s  %s\n", "ell", width, "1+eps_ell", width,
                "1+delta_ell", "method");
  os << buf;
  for (const auto& e : report.ladder) {
    // Rows past q+1 repeat the terminal value.
    if (e.ell > report.q + 1) break;
    std::snprintf(buf, sizeof buf, "%5d  %*s  %*s  %s\n", e.ell, width,
                  format_fixed(e.r_ell, digits).c_str(), width,
                  format_fixed(e.one_plus_delta, digits).c_str(), to_string(e.method));
    os << buf;
  }
  if (report.oracle) {
    os << "\nmax |zero| = " << format_fixed(report.oracle->max_modulus, digits) << '\n';
  }
  return os.str();
}

std::string report_to_csv(const BoundReport& report) {
  std::ostringstream os;
  os << "ell,r_ell,one_plus_delta,method\n";
  for (const auto& e : report.ladder) {
    os << e.ell << ',' << format_shortest(e.r_ell) << ',' << format_shortest(e.one_plus_delta)
       << ',' << to_string(e.method) << '\n';
  }
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const RunHooks& hooks) {
  CLI::App app{"Upper bounds for the moduli of the zeros of a complex polynomial", "zbound"};
  app.require_subcommand(1);

  InputArgs compute_in, verify_in;
  CommonOptions compute_opts, verify_opts;
  BenchArgs bench_args;

  auto* compute = app.add_subcommand("compute", "print both bound ladders and classical bounds");
  add_input_options(compute, compute_in);
  compute->add_option("--ell-max", compute_opts.ell_max, "largest l to report (default q+1)");
  compute->add_flag("--oracle", compute_opts.oracle, "also compute all zeros and their max modulus");
  compute->add_option("--format", compute_opts.format, "table|json|csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  compute->add_option("--digits", compute_opts.digits, "table rounding digits (1-17)");
  compute->add_option("--tol", compute_opts.tol, "scalar root tolerance");

  auto* verify = app.add_subcommand("verify", "check every bound invariant against the oracle");
  add_input_options(verify, verify_in);
  verify->add_option("--ell-max", verify_opts.ell_max, "largest l to check (default q+1)");
  verify->add_option("--tol", verify_opts.tol, "scalar root tolerance");

  auto* bench = app.add_subcommand("bench", "tightness statistics over random polynomials (CSV)");
  bench->add_option("--degree", bench_args.degree, "polynomial degree (2-64)");
  bench->add_option("--count", bench_args.count, "number of random polynomials");
  bench->add_option("--dist", bench_args.dist, "coefficient distribution")
      ->check(CLI::IsMember({"uniform", "loguniform"}));
  bench->add_option("--seed", bench_args.seed, "RNG seed");
  bench->add_option("--tol", bench_args.tol, "scalar root tolerance");

  std::vector<const char*> argv{"zbound"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  if (compute->parsed()) return cmd_compute(compute_in, compute_opts, out, err);
  if (verify->parsed()) return cmd_verify(verify_in, verify_opts, out, err, hooks);
  return cmd_bench(bench_args, out, err);
}

}  // namespace zbound::cli
