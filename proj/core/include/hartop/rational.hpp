#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hartop {

/// Parses "p" or "p/q" (optional leading '-', decimal digits, q > 0) into a
/// canonical rational. Throws std::invalid_argument on anything else.
mpq_class parse_rational(std::string_view text);

/// Canonical decimal form: "p" when the denominator is 1, otherwise "p/q".
std::string rational_to_string(const mpq_class& q);

/// Exact complex number with arbitrary-precision rational parts.
class ComplexRational {
 public:
  ComplexRational() = default;
  ComplexRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  ComplexRational(mpq_class re, mpq_class im = 0);

  static ComplexRational i() { return {0, 1}; }

  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }

  /// Squared modulus re^2 + im^2, exact.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  ComplexRational conj() const { return {re_, -im_}; }

  /// Multiplicative inverse; throws std::domain_error on zero.
  ComplexRational inverse() const;

  ComplexRational& operator+=(const ComplexRational& o);
  ComplexRational& operator-=(const ComplexRational& o);
  ComplexRational& operator*=(const ComplexRational& o);

  friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
  friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
  friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
  friend ComplexRational operator/(const ComplexRational& a, const ComplexRational& b) {
    return a * b.inverse();
  }
  ComplexRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Human-readable form, e.g. "3/2", "-i", "1/2-3i".
  std::string to_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

ComplexRational pow(const ComplexRational& base, unsigned exponent);

}  // namespace hartop
