#include "liealg/field.hpp"

#include <cctype>
#include <ostream>

namespace liealg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotASubalgebra: return "NotASubalgebra";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::NotSolvableNonnilpotent: return "NotSolvableNonnilpotent";
    case ErrorCode::WrongTag: return "WrongTag";
    case ErrorCode::InternalContradiction: return "InternalContradiction";
    case ErrorCode::ConstraintViolation: return "ConstraintViolation";
    case ErrorCode::NotQuotientPreserving: return "NotQuotientPreserving";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::MissingParameter: return "MissingParameter";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

Scalar Scalar::fraction(long num, long den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  return Scalar(mpq_class(num, den));
}

Scalar Scalar::inv() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (is_real()) return Scalar(mpq_class(1 / re_));
  mpq_class n = norm();
  return Scalar(mpq_class(re_ / n), mpq_class(-im_ / n));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inv();
}

std::string rational_to_string(const mpq_class& q) { return q.get_str(10); }

mpq_class parse_rational(std::string_view text) {
  auto fail = [&] {
    return Error(ErrorCode::Parse, "malformed rational '" + std::string(text) + "'");
  };
  if (text.empty()) throw fail();
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  auto digits = [&](std::size_t start) {
    std::size_t end = start;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    return end;
  };
  std::size_t num_end = digits(pos);
  if (num_end == pos) throw fail();
  mpz_class num(std::string(text.substr(pos, num_end - pos)), 10);
  mpz_class den(1);
  if (num_end < text.size()) {
    if (text[num_end] != '/') throw fail();
    std::size_t den_end = digits(num_end + 1);
    if (den_end == num_end + 1 || den_end != text.size()) throw fail();
    den = mpz_class(std::string(text.substr(num_end + 1, den_end - num_end - 1)), 10);
    if (den == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
  }
  if (negative) num = -num;
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

std::string Scalar::to_string() const {
  std::string out = rational_to_string(re_);
  if (sgn(im_) == 0) return out;
  if (sgn(im_) > 0) {
    out += '+';
    out += rational_to_string(im_);
  } else {
    out += '-';
    out += rational_to_string(mpq_class(-im_));
  }
  out += "*i";
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Imaginary term without its leading sign: "i", "q*i".
mpq_class parse_imag_magnitude(std::string_view body, std::string_view whole) {
  if (body == "i") return mpq_class(1);
  if (body.size() < 3 || body.substr(body.size() - 2) != "*i") {
    throw Error(ErrorCode::Parse, "malformed scalar '" + std::string(whole) + "'");
  }
  std::string_view mag = body.substr(0, body.size() - 2);
  if (!mag.empty() && (mag.front() == '+' || mag.front() == '-')) {
    throw Error(ErrorCode::Parse, "malformed scalar '" + std::string(whole) + "'");
  }
  return parse_rational(mag);
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw Error(ErrorCode::Parse, "empty scalar");
  if (s.back() != 'i') return Scalar(parse_rational(s));

  // The imaginary term starts at the last sign that is not the leading one.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) {
    bool negative = s.front() == '-';
    std::string_view body = (s.front() == '+' || s.front() == '-') ? s.substr(1) : s;
    mpq_class im = parse_imag_magnitude(body, text);
    return Scalar(mpq_class(0), negative ? mpq_class(-im) : im);
  }
  mpq_class re = parse_rational(s.substr(0, split));
  mpq_class im = parse_imag_magnitude(s.substr(split + 1), text);
  if (s[split] == '-') im = -im;
  return Scalar(std::move(re), std::move(im));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

namespace {

bool rational_sqrt(const mpq_class& q, mpq_class& root) {
  if (sgn(q) < 0) return false;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) {
    return false;
  }
  mpz_class num = sqrt(q.get_num());
  mpz_class den = sqrt(q.get_den());
  root = mpq_class(num, den);
  root.canonicalize();
  return true;
}

}  // namespace

bool gaussian_sqrt(const Scalar& value, Scalar& root) {
  if (value.is_zero()) {
    root = Scalar();
    return true;
  }
  const mpq_class& x = value.re();
  const mpq_class& y = value.im();
  if (sgn(y) == 0) {
    mpq_class r;
    if (sgn(x) > 0) {
      if (!rational_sqrt(x, r)) return false;
      root = Scalar(r);
    } else {
      if (!rational_sqrt(mpq_class(-x), r)) return false;
      root = Scalar(mpq_class(0), r);
    }
    return true;
  }
  // (u + iv)^2 = x + iy  =>  u^2 = (x + |z|) / 2, v = y / (2u).
  mpq_class modulus;
  if (!rational_sqrt(value.norm(), modulus)) return false;
  mpq_class u;
  if (!rational_sqrt(mpq_class((x + modulus) / 2), u)) return false;
  mpq_class v = y / (2 * u);
  root = Scalar(u, v);
  return true;
}

}  // namespace liealg
