#include "blb/modular.hpp"

#include "blb/errors.hpp"
#include "blb/linalg.hpp"

namespace blb {

Modular Modular::pow(std::uint64_t e) const {
  Modular base = *this;
  Modular acc(1);
  while (e > 0) {
    if (e & 1U) acc *= base;
    base *= base;
    e >>= 1U;
  }
  return acc;
}

Modular Modular::inverse() const {
  if (is_zero()) throw DomainError("division by zero modulo P");
  return pow(P - 2);
}

Modular Modular::sqrt_minus_one() {
  static const Modular root = [] {
    for (long g = 2;; ++g) {
      Modular candidate(g);
      if (candidate.pow((P - 1) / 2) == Modular(-1)) return candidate.pow((P - 1) / 4);
    }
  }();
  return root;
}

namespace {

std::optional<Modular> reduce_rational(const mpq_class& q) {
  unsigned long den = mpz_fdiv_ui(q.get_den_mpz_t(), Modular::P);
  if (den == 0) return std::nullopt;
  unsigned long num = mpz_fdiv_ui(q.get_num_mpz_t(), Modular::P);
  return Modular(static_cast<long>(num)) / Modular(static_cast<long>(den));
}

}  // namespace

std::optional<Modular> reduce_mod(const Scalar& s) {
  auto re = reduce_rational(s.re());
  if (!re) return std::nullopt;
  if (s.is_real()) return re;
  auto im = reduce_rational(s.im());
  if (!im) return std::nullopt;
  return *re + *im * Modular::sqrt_minus_one();
}

std::optional<MatrixX<Modular>> reduce_mod(const Matrix& m) {
  MatrixX<Modular> out(m.rows(), m.cols());
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) {
      auto v = reduce_mod(m(r, c));
      if (!v) return std::nullopt;
      out(r, c) = *v;
    }
  return out;
}

}  // namespace blb
