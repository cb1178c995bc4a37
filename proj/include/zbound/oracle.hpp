#pragma once

#include <string>
#include <vector>

#include "zbound/bounds.hpp"
#include "zbound/error.hpp"
#include "zbound/polynomial.hpp"

namespace zbound {

inline constexpr int kOracleMaxIterations = 1000;
inline constexpr double kContainmentSlack = 1e-8;

/// All n zeros of a polynomial as found by the oracle.
struct RootSet {
  std::vector<Complex> roots;
  std::vector<double> residuals;  // |P(z_i)| / scale
  bool converged = false;
  int iterations = 0;
};

class NotConverged : public Error {
 public:
  explicit NotConverged(RootSet partial)
      : Error(ErrorCode::NotConverged, "root oracle did not converge"),
        partial_(std::move(partial)) {}

  const RootSet& partial() const noexcept { return partial_; }

 private:
  RootSet partial_;
};

/// Weierstrass (Durand-Kerner) simultaneous iteration. The n - q zeros at
/// the origin are split off exactly; the remaining q start on the circle
/// |z| = (1 + A)/2 at angles 2 pi k / q + 0.4. Iterates until every
/// correction is below 1e-13 (1 + A) or 1000 sweeps.
///
/// Residuals use one scale for all roots: max(1, max_i prod_{j != i} |z_i - z_j|).
/// Throws NotConverged (carrying the partial RootSet).
RootSet all_roots(const Polynomial& p);

/// Largest |z_i|. Throws NotConverged if `rs.converged` is false.
double max_modulus(const RootSet& rs);

struct ContainmentCheck {
  std::string label;   // "cauchy", "rho", "jlr", "r_ell", "one_plus_delta"
  int ell = 0;         // ladder index, 0 for the classical bounds
  double bound = 0.0;
  double margin = 0.0;  // bound - max modulus
  bool pass = false;    // max modulus <= bound + 1e-8
};

struct ContainmentRecord {
  double max_modulus = 0.0;
  std::vector<ContainmentCheck> checks;
  bool pass = false;
};

ContainmentRecord verify_containment(const RootSet& rs, const BoundReport& report);

}  // namespace zbound
