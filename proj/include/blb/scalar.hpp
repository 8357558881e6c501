#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <iosfwd>
#include <string>
#include <string_view>

namespace blb {

// Exact Gaussian rational re + im*i. Both parts are kept canonical by GMP, so
// equal values have equal representations and zero is unique.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : re_(v) {}
  Scalar(long v) : re_(v) {}
  Scalar(mpq_class re, mpq_class im = 0);

  static Scalar i();
  static Scalar fraction(long num, long den, long im_num = 0, long im_den = 1);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  Scalar conj() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  mpq_class re_;
  mpq_class im_;
};

inline bool is_zero(const Scalar& s) { return s.is_zero(); }

// Grammar: rational ( ('+'|'-') rational? 'i' )?, rational = int ('/' posint)?.
// A bare imaginary part such as "i", "-2i" or "3/2i" is also accepted, since
// that is how canonical output prints purely imaginary values.
Scalar parse_scalar(std::string_view text);
std::string to_string(const Scalar& s);
std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace blb

namespace Eigen {

template <>
struct NumTraits<blb::Scalar> : GenericNumTraits<blb::Scalar> {
  using Real = blb::Scalar;
  using NonInteger = blb::Scalar;
  using Literal = blb::Scalar;
  using Nested = blb::Scalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 32,
    MulCost = 64
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
