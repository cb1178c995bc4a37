#include "zbound/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "zbound/error.hpp"

namespace zbound {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
    case ErrorCode::DegenerateAllZeroTail: return "DegenerateAllZeroTail";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::EllTooLargeForBinomialPath: return "EllTooLargeForBinomialPath";
    case ErrorCode::NoSignChange: return "NoSignChange";
    case ErrorCode::MaxIterationsExceeded: return "MaxIterationsExceeded";
    case ErrorCode::NoRealRoot: return "NoRealRoot";
    case ErrorCode::NotConverged: return "NotConverged";
  }
  return "Unknown";
}

bool Polynomial::has_real_coefficients() const noexcept {
  return std::all_of(tail_.begin(), tail_.end(),
                     [](Complex c) { return c.imag() == 0.0; });
}

Complex Polynomial::operator()(Complex z) const noexcept {
  Complex acc{1.0, 0.0};
  for (Complex a : tail_) acc = acc * z + a;
  return acc;
}

Polynomial normalize(std::span<const Complex> raw) {
  if (raw.size() < 2) {
    throw Error(ErrorCode::DegreeTooSmall,
                "polynomial needs at least two coefficients (degree >= 1)");
  }
  const Complex lead = raw.front();
  if (lead == Complex{}) {
    throw Error(ErrorCode::ZeroLeadingCoefficient, "leading coefficient is zero");
  }
  std::vector<Complex> tail;
  tail.reserve(raw.size() - 1);
  bool any_nonzero = false;
  for (Complex c : raw.subspan(1)) {
    const Complex a = lead == Complex{1.0, 0.0} ? c : c / lead;
    any_nonzero = any_nonzero || std::abs(a) >= kModulusFloor;
    tail.push_back(a);
  }
  if (!any_nonzero) {
    throw Error(ErrorCode::DegenerateAllZeroTail,
                "all non-leading coefficients are zero: every zero is at the origin");
  }
  return Polynomial(std::move(tail), lead);
}

Polynomial normalize(std::span<const double> raw) {
  std::vector<Complex> c(raw.begin(), raw.end());
  return normalize(std::span<const Complex>(c));
}

CoeffProfile profile_from_moduli(std::span<const double> moduli) {
  CoeffProfile prof;
  prof.degree = static_cast<int>(moduli.size());
  prof.moduli.reserve(moduli.size());
  for (double m : moduli) prof.moduli.push_back(m < kModulusFloor ? 0.0 : m);

  prof.tail_maxima.assign(moduli.size() + 1, 0.0);
  for (int ell = prof.degree; ell >= 1; --ell) {
    prof.tail_maxima[ell - 1] = std::max(prof.tail_maxima[ell], prof.moduli[ell - 1]);
  }
  prof.A = prof.tail_maxima.front();
  if (prof.degree == 0 || prof.A == 0.0) {
    throw Error(ErrorCode::DegenerateAllZeroTail, "all coefficient moduli are zero");
  }
  prof.q = prof.degree;
  while (prof.moduli[prof.q - 1] == 0.0) --prof.q;
  return prof;
}

CoeffProfile profile(const Polynomial& p) {
  std::vector<double> m;
  m.reserve(p.tail().size());
  for (Complex a : p.tail()) m.push_back(std::abs(a));
  return profile_from_moduli(m);
}

}  // namespace zbound
