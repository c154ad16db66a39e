#include "hartop/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace hartop {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

mpq_class parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw std::invalid_argument("malformed rational \"" + std::string(text) + "\"");
  }
  mpz_class n(std::string(num), 10);
  if (text.front() == '-') n = -n;
  mpz_class d = 1;
  if (slash != std::string_view::npos) {
    d = mpz_class(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
  }
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const mpq_class& q) { return q.get_str(10); }

ComplexRational::ComplexRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

ComplexRational ComplexRational::inverse() const {
  const mpq_class n = norm();
  if (sgn(n) == 0) throw std::domain_error("inverse of zero");
  return {re_ / n, -im_ / n};
}

ComplexRational& ComplexRational::operator+=(const ComplexRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

ComplexRational& ComplexRational::operator-=(const ComplexRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

ComplexRational& ComplexRational::operator*=(const ComplexRational& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string ComplexRational::to_string() const {
  if (sgn(im_) == 0) return rational_to_string(re_);
  std::string imag;
  const mpq_class mag = abs(im_);
  if (mag != 1) imag = rational_to_string(mag);
  imag += 'i';
  if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag;
  return rational_to_string(re_) + (sgn(im_) < 0 ? "-" : "+") + imag;
}

ComplexRational pow(const ComplexRational& base, unsigned exponent) {
  ComplexRational result(1);
  ComplexRational square = base;
  while (exponent != 0) {
    if (exponent & 1u) result *= square;
    exponent >>= 1u;
    if (exponent != 0) square *= square;
  }
  return result;
}

}  // namespace hartop
