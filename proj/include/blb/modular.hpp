#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <cstdint>
#include <optional>

#include "blb/scalar.hpp"

namespace blb {

// Prime field F_P with P = 1 mod 4, so Q(i) reduces into it whenever the
// denominators are prime to P. Used only for rank certificates: a rank
// observed modulo P is a lower bound for the rank over Q(i).
class Modular {
 public:
  static constexpr std::uint64_t P = 1000000009ULL;

  Modular() = default;
  Modular(int v) : v_(reduce(v)) {}
  Modular(long v) : v_(reduce(v)) {}

  std::uint64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  Modular& operator+=(Modular o) {
    v_ += o.v_;
    if (v_ >= P) v_ -= P;
    return *this;
  }
  Modular& operator-=(Modular o) {
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + P - o.v_;
    return *this;
  }
  Modular& operator*=(Modular o) {
    v_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v_) * o.v_) % P);
    return *this;
  }
  Modular& operator/=(Modular o) { return *this *= o.inverse(); }
  Modular operator-() const { return Modular() -= *this; }
  Modular inverse() const;
  Modular pow(std::uint64_t e) const;

  friend Modular operator+(Modular a, Modular b) { return a += b; }
  friend Modular operator-(Modular a, Modular b) { return a -= b; }
  friend Modular operator*(Modular a, Modular b) { return a *= b; }
  friend Modular operator/(Modular a, Modular b) { return a /= b; }
  friend bool operator==(Modular a, Modular b) { return a.v_ == b.v_; }
  friend bool operator!=(Modular a, Modular b) { return a.v_ != b.v_; }

  // A fixed square root of -1.
  static Modular sqrt_minus_one();

 private:
  static std::uint64_t reduce(long v) {
    long r = v % static_cast<long>(P);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<long>(P) : r);
  }
  std::uint64_t v_ = 0;
};

inline bool is_zero(const Modular& m) { return m.is_zero(); }

// Image of s in F_P, or nothing when a denominator vanishes modulo P.
std::optional<Modular> reduce_mod(const Scalar& s);

}  // namespace blb

namespace Eigen {

template <>
struct NumTraits<blb::Modular> : GenericNumTraits<blb::Modular> {
  using Real = blb::Modular;
  using NonInteger = blb::Modular;
  using Literal = blb::Modular;
  using Nested = blb::Modular;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
