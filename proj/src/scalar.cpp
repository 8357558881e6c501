#include "blb/scalar.hpp"

#include <cctype>
#include <ostream>
#include <utility>

#include "blb/errors.hpp"

namespace blb {

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::i() { return Scalar(0, 1); }

Scalar Scalar::fraction(long num, long den, long im_num, long im_den) {
  if (den == 0 || im_den == 0) throw DomainError("zero denominator");
  return Scalar(mpq_class(num, den), mpq_class(im_num, im_den));
}

Scalar Scalar::conj() const { return Scalar(re_, -im_); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  if (is_real()) return Scalar(1 / re_);
  mpq_class norm = re_ * re_ + im_ * im_;
  return Scalar(re_ / norm, -im_ / norm);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_.swap(re);
  im_.swap(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  if (o.is_real()) {
    re_ /= o.re_;
    if (sgn(im_) != 0) im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

Scalar Scalar::operator-() const { return Scalar(-re_, -im_); }

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  Scalar parse() {
    if (text_.empty()) fail("empty scalar");
    bool negative = accept('-');
    if (peek() == 'i') {
      ++pos_;
      expect_end();
      return Scalar(0, negative ? -1 : 1);
    }
    mpq_class first = unsigned_rational();
    if (negative) first = -first;
    if (at_end()) return Scalar(first);
    if (peek() == 'i') {
      ++pos_;
      expect_end();
      return Scalar(0, first);
    }
    char sign = peek();
    if (sign != '+' && sign != '-') fail_token();
    ++pos_;
    mpq_class second = 1;
    if (peek() != 'i') second = unsigned_rational();
    if (peek() != 'i') fail_token();
    ++pos_;
    expect_end();
    if (sign == '-') second = -second;
    return Scalar(first, second);
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " in scalar '" + std::string(text_) + "'");
  }

  [[noreturn]] void fail_token() const {
    if (at_end()) fail("unexpected end");
    fail("unexpected token '" + std::string(1, peek()) + "' at position " + std::to_string(pos_));
  }

  void expect_end() const {
    if (!at_end()) fail_token();
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail_token();
    return std::string(text_.substr(start, pos_ - start));
  }

  mpq_class unsigned_rational() {
    mpz_class num(digits());
    mpz_class den = 1;
    if (accept('/')) {
      den = mpz_class(digits());
      if (den == 0) throw DomainError("zero denominator in scalar '" + std::string(text_) + "'");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string rational_string(const mpq_class& q) { return q.get_str(); }

}  // namespace

Scalar parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

std::string to_string(const Scalar& s) {
  const mpq_class& re = s.re();
  const mpq_class& im = s.im();
  if (sgn(im) == 0) return rational_string(re);
  std::string out;
  if (sgn(re) != 0) out = rational_string(re);
  mpq_class mag = abs(im);
  if (sgn(im) < 0) {
    out += '-';
  } else if (!out.empty()) {
    out += '+';
  }
  if (mag != 1) out += rational_string(mag);
  out += 'i';
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << to_string(s); }

}  // namespace blb
