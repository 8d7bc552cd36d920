#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "liealg/error.hpp"

namespace liealg {

/// Exact element of Q(i): a Gaussian rational re + im*i.
///
/// Both parts are GMP rationals kept in canonical form (reduced, positive
/// denominator, zero as 0/1), so structural equality is value equality.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  /// Rational p/q; throws DivisionByZero when q == 0.
  static Scalar fraction(long num, long den);
  static Scalar imag_unit() { return Scalar(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const noexcept { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const noexcept { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// |z|^2 as a rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  Scalar inv() const;

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Canonical text: "re", "re+im*i" or "re-im*i", rationals as "p" or "p/q".
  std::string to_string() const;
  /// Inverse of to_string; also accepts "i", "-i", "im*i" and surrounding blanks.
  static Scalar parse(std::string_view text);

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Rational text form "p" or "p/q"; throws Parse on malformed input.
mpq_class parse_rational(std::string_view text);
std::string rational_to_string(const mpq_class& q);

/// Exact square root in Q(i) when one exists (principal branch: re > 0, or
/// re == 0 and im >= 0).
bool gaussian_sqrt(const Scalar& value, Scalar& root);

}  // namespace liealg
