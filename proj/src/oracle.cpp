#include "zbound/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace zbound {

RootSet all_roots(const Polynomial& p) {
  const CoeffProfile prof = profile(p);
  const int n = p.degree();
  const int q = prof.q;

  // Deflated monic polynomial z^q + a_1 z^{q-1} + ... + a_q.
  std::vector<Complex> tail(p.tail().begin(), p.tail().begin() + q);
  auto eval = [&tail](Complex z) {
    Complex acc{1.0, 0.0};
    for (Complex a : tail) acc = acc * z + a;
    return acc;
  };

  RootSet rs;
  rs.roots.assign(static_cast<std::size_t>(n), Complex{});

  const double radius = 0.5 * (1.0 + prof.A);
  std::vector<Complex> z(static_cast<std::size_t>(q));
  for (int k = 0; k < q; ++k) {
    z[k] = std::polar(radius, 2.0 * std::numbers::pi * k / q + 0.4);
  }

  const double stop = 1e-13 * (1.0 + prof.A);
  std::vector<Complex> next(z.size());
  for (rs.iterations = 1; rs.iterations <= kOracleMaxIterations; ++rs.iterations) {
    double max_correction = 0.0;
    for (int i = 0; i < q; ++i) {
      Complex denom{1.0, 0.0};
      for (int j = 0; j < q; ++j) {
        if (j != i) denom *= z[i] - z[j];
      }
      Complex correction = eval(z[i]) / denom;
      if (!std::isfinite(correction.real()) || !std::isfinite(correction.imag())) {
        correction = Complex{};  // coincident iterates; let the others move
      }
      next[i] = z[i] - correction;
      max_correction = std::max(max_correction, std::abs(correction));
    }
    z.swap(next);
    if (max_correction < stop) {
      rs.converged = true;
      break;
    }
  }
  rs.iterations = std::min(rs.iterations, kOracleMaxIterations);
  std::copy(z.begin(), z.end(), rs.roots.begin());

  double scale = 1.0;
  for (int i = 0; i < n; ++i) {
    double prod = 1.0;
    for (int j = 0; j < n; ++j) {
      if (j != i) prod *= std::abs(rs.roots[i] - rs.roots[j]);
    }
    scale = std::max(scale, prod);
  }
  rs.residuals.reserve(static_cast<std::size_t>(n));
  for (Complex r : rs.roots) rs.residuals.push_back(std::abs(p(r)) / scale);

  if (!rs.converged) throw NotConverged(std::move(rs));
  return rs;
}

double max_modulus(const RootSet& rs) {
  if (!rs.converged) throw NotConverged(rs);
  double best = 0.0;
  for (Complex r : rs.roots) best = std::max(best, std::abs(r));
  return best;
}

ContainmentRecord verify_containment(const RootSet& rs, const BoundReport& report) {
  ContainmentRecord rec;
  rec.max_modulus = max_modulus(rs);
  auto add = [&rec](std::string label, int ell, double bound) {
    const double margin = bound - rec.max_modulus;
    rec.checks.push_back({std::move(label), ell, bound, margin, margin >= -kContainmentSlack});
  };
  add("cauchy", 0, report.cauchy_one_plus_A);
  add("rho", 0, report.rho);
  add("jlr", 0, report.jlr);
  for (const LadderEntry& e : report.ladder) {
    add("r_ell", e.ell, e.r_ell);
    add("one_plus_delta", e.ell, e.one_plus_delta);
  }
  rec.pass = std::all_of(rec.checks.begin(), rec.checks.end(),
                         [](const ContainmentCheck& c) { return c.pass; });
  return rec;
}

}  // namespace zbound
