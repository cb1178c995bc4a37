#include <cctype>
#include <cmath>
#include <charconv>
#include <map>
#include <optional>
#include <string>

#include "zbound/error.hpp"
#include "zbound/polynomial.hpp"

namespace zbound {
namespace {

constexpr int kMaxExponent = 100000;

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) fail("empty expression");
    double sign = take_sign().value_or(1.0);
    parse_term(sign);
    while (true) {
      skip_ws();
      if (at_end()) break;
      auto s = take_sign();
      if (!s) fail("expected '+' or '-' between terms");
      parse_term(*s);
    }
    return assemble();
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::SyntaxError,
                msg + " at byte " + std::to_string(pos_), pos_);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::optional<double> take_sign() {
    skip_ws();
    if (peek() == '+') { ++pos_; return 1.0; }
    if (peek() == '-') { ++pos_; return -1.0; }
    return std::nullopt;
  }

  bool is_var(char c) const {
    if (c != 'z' && c != 'x') return false;
    return !var_ || *var_ == c;
  }

  // digits [. digits] [(e|E) [+-] digits]
  std::optional<double> take_decimal() {
    const std::size_t start = pos_;
    std::size_t p = pos_;
    auto digits = [&] {
      std::size_t s = p;
      while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p;
      return p - s;
    };
    std::size_t n = digits();
    if (p < text_.size() && text_[p] == '.') {
      ++p;
      n += digits();
    }
    if (n == 0) return std::nullopt;
    if (p < text_.size() && (text_[p] == 'e' || text_[p] == 'E')) {
      std::size_t q = p + 1;
      if (q < text_.size() && (text_[q] == '+' || text_[q] == '-')) ++q;
      if (q < text_.size() && std::isdigit(static_cast<unsigned char>(text_[q]))) {
        p = q;
        digits();
      }
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + p, value);
    if (ec != std::errc{} || ptr != text_.data() + p) fail("malformed number");
    pos_ = p;
    return value;
  }

  // '(' re [(+|-) im i] ')' or '(' [+-] im i ')'
  Complex take_complex_literal() {
    ++pos_;  // '('
    double re = 0.0, im = 0.0;
    bool have_any = false;
    for (int part = 0; part < 2; ++part) {
      skip_ws();
      if (peek() == ')') break;
      auto s = take_sign();
      if (!s && part == 1) fail("expected '+' or '-' inside complex literal");
      skip_ws();
      auto mag = take_decimal();
      skip_ws();
      if (peek() == 'i') {
        ++pos_;
        im += s.value_or(1.0) * mag.value_or(1.0);
      } else {
        if (!mag) fail("expected number inside complex literal");
        if (part == 1) fail("second part of complex literal must be imaginary");
        re += s.value_or(1.0) * *mag;
      }
      have_any = true;
    }
    skip_ws();
    if (!have_any) fail("empty complex literal");
    if (peek() != ')') fail("expected ')'");
    ++pos_;
    return {re, im};
  }

  void parse_term(double sign) {
    skip_ws();
    const std::size_t term_start = pos_;
    Complex coeff{1.0, 0.0};
    bool have_coeff = false;
    if (peek() == '(') {
      coeff = take_complex_literal();
      have_coeff = true;
    } else if (auto d = take_decimal()) {
      coeff = *d;
      have_coeff = true;
    }
    skip_ws();
    if (peek() == '*') {
      if (!have_coeff) fail("unexpected '*'");
      ++pos_;
      skip_ws();
      if (!is_var(peek())) fail("expected variable after '*'");
    }
    int power = 0;
    if (is_var(peek())) {
      var_ = peek();
      ++pos_;
      power = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        const std::size_t exp_start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == exp_start) fail("expected non-negative integer exponent");
        auto [ptr, ec] = std::from_chars(text_.data() + exp_start, text_.data() + pos_, power);
        if (ec != std::errc{} || power > kMaxExponent) {
          pos_ = exp_start;
          fail("exponent out of range");
        }
      }
    } else if (!have_coeff) {
      pos_ = term_start;
      fail("expected a term");
    }
    terms_[power] += sign * coeff;
  }

  Polynomial assemble() const {
    const int top = terms_.rbegin()->first;
    std::vector<Complex> dense(static_cast<std::size_t>(top) + 1);
    for (const auto& [power, c] : terms_) dense[top - power] = c;
    if (top < 1) {
      throw Error(ErrorCode::DegreeTooSmall, "expression has no variable term");
    }
    return normalize(std::span<const Complex>(dense));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::optional<char> var_;
  std::map<int, Complex> terms_;
};

void append_double(std::string& out, double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, ptr);
}

void append_power(std::string& out, int power) {
  if (power == 0) return;
  out += 'z';
  if (power > 1) {
    out += '^';
    out += std::to_string(power);
  }
}

}  // namespace

Polynomial parse_expression(std::string_view text) {
  return ExpressionParser(text).parse();
}

std::string render(const Polynomial& p) {
  std::string out;
  const int n = p.degree();
  append_power(out, n);
  for (int j = 1; j <= n; ++j) {
    const Complex a = p.coeff(j);
    if (a == Complex{}) continue;
    if (a.imag() == 0.0) {
      out += std::signbit(a.real()) ? " - " : " + ";
      if (std::abs(a.real()) != 1.0 || j == n) append_double(out, std::abs(a.real()));
    } else {
      out += " + (";
      append_double(out, a.real());
      out += a.imag() < 0.0 ? '-' : '+';
      append_double(out, std::abs(a.imag()));
      out += "i)";
    }
    append_power(out, n - j);
  }
  return out;
}

}  // namespace zbound
