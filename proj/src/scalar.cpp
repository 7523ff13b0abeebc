#include "qpb/scalar.hpp"

#include <cctype>
#include <ostream>

#include "qpb/error.hpp"

namespace qpb {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Parses [sign] digits ['/' digits] starting at pos. Returns false if no
// digits are present (the caller may then accept a bare "i").
bool parse_rational(std::string_view s, std::size_t& pos, mpq_class& out, bool& had_digits) {
  bool negative = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    negative = s[pos] == '-';
    ++pos;
  }
  std::size_t digits_begin = pos;
  while (pos < s.size() && is_digit(s[pos])) ++pos;
  had_digits = pos > digits_begin;
  if (!had_digits) {
    out = negative ? -1 : 1;
    return true;
  }
  mpz_class num(std::string(s.substr(digits_begin, pos - digits_begin)));
  mpz_class den = 1;
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    std::size_t den_begin = pos;
    while (pos < s.size() && is_digit(s[pos])) ++pos;
    if (pos == den_begin) return false;
    den = mpz_class(std::string(s.substr(den_begin, pos - den_begin)));
    if (den == 0) return false;
  }
  out = mpq_class(num, den);
  out.canonicalize();
  if (negative) out = -out;
  return true;
}

}  // namespace

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw StructuralError("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::parse(std::string_view text) {
  auto fail = [&]() -> Scalar {
    throw StructuralError("not an exact rational scalar literal: \"" + std::string(text) + "\"");
  };
  if (text.empty()) return fail();
  std::size_t pos = 0;
  mpq_class first;
  bool digits = false;
  if (!parse_rational(text, pos, first, digits)) return fail();
  if (pos == text.size()) {
    if (!digits) return fail();
    return Scalar(first);
  }
  if (text[pos] == 'i' && pos + 1 == text.size()) return Scalar(0, first);
  if (!digits || (text[pos] != '+' && text[pos] != '-')) return fail();
  mpq_class second;
  bool digits2 = false;
  if (!parse_rational(text, pos, second, digits2)) return fail();
  if (pos + 1 != text.size() || text[pos] != 'i') return fail();
  return Scalar(first, second);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw PreconditionError("division by zero scalar");
  mpq_class norm = re_ * re_ + im_ * im_;
  return Scalar(re_ / norm, -im_ / norm);
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
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (sgn(a.im_) == 0 && sgn(b.im_) == 0) {
    re_ += a.re_ * b.re_;
    return;
  }
  *this += a * b;
}

std::string Scalar::str() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string im_abs = abs(im_) == 1 ? std::string() : mpq_class(abs(im_)).get_str();
  if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + im_abs + "i";
  return re_.get_str() + (sgn(im_) < 0 ? "-" : "+") + im_abs + "i";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace qpb
