#pragma once

#include <complex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zbound {

using Complex = std::complex<double>;

/// Moduli below this are treated as exact zeros (denormal noise from the
/// division by the leading coefficient must not move q).
inline constexpr double kModulusFloor = 1e-300;

/// Monic complex polynomial z^n + a_1 z^{n-1} + ... + a_n.
///
/// Only constructible through `normalize` / `parse_expression`, so every
/// instance has degree >= 1 and at least one nonzero tail coefficient.
class Polynomial {
 public:
  int degree() const noexcept { return static_cast<int>(tail_.size()); }

  /// a_1 ... a_n, highest power first.
  std::span<const Complex> tail() const noexcept { return tail_; }

  /// a_j for 1 <= j; zero for j > n.
  Complex coeff(int j) const noexcept {
    return (j >= 1 && j <= degree()) ? tail_[j - 1] : Complex{};
  }

  /// Leading coefficient that was divided out (1 for monic input).
  Complex scale() const noexcept { return scale_; }

  bool has_real_coefficients() const noexcept;

  /// P(z) by Horner's rule.
  Complex operator()(Complex z) const noexcept;

  friend Polynomial normalize(std::span<const Complex> raw);

 private:
  Polynomial(std::vector<Complex> tail, Complex scale)
      : tail_(std::move(tail)), scale_(scale) {}

  std::vector<Complex> tail_;
  Complex scale_;
};

/// Brings c_0 z^n + c_1 z^{n-1} + ... + c_n to monic form.
/// Throws DegreeTooSmall, ZeroLeadingCoefficient, DegenerateAllZeroTail.
Polynomial normalize(std::span<const Complex> raw);
Polynomial normalize(std::span<const double> raw);

/// Parses sums of terms `c`, `z`, `c z^k`, `z^k` (optionally `c*z^k`),
/// where c is a decimal real or a complex literal `(re+im i)`.
/// Like terms are summed. Throws SyntaxError with the byte offset.
Polynomial parse_expression(std::string_view text);

/// Debug printer; `parse_expression(render(p))` reproduces the tail exactly.
std::string render(const Polynomial& p);

/// Moduli-only view of a polynomial: every bound depends on |a_j| alone.
struct CoeffProfile {
  int degree = 0;
  std::vector<double> moduli;    // m_1 ... m_n
  double A = 0.0;                // max_j m_j
  std::vector<double> tail_maxima;  // A_1 ... A_{n+1}, A_{n+1} = 0
  int q = 0;                     // last index with m_q != 0

  /// m_j, 1-based; zero outside 1..n.
  double modulus(int j) const noexcept {
    return (j >= 1 && j <= degree) ? moduli[j - 1] : 0.0;
  }

  /// A_l = max_{j >= l} m_j, 1-based; zero for l > n.
  double tail_max(int ell) const noexcept {
    if (ell <= 1) return A;
    return ell <= degree ? tail_maxima[ell - 1] : 0.0;
  }
};

CoeffProfile profile(const Polynomial& p);

/// Builds a profile directly from moduli (used by tests and by callers that
/// already hold |a_j|). Throws DegenerateAllZeroTail if all moduli vanish.
CoeffProfile profile_from_moduli(std::span<const double> moduli);

}  // namespace zbound
