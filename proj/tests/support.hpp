#pragma once

#include <random>
#include <string>

#include "blb/cartan.hpp"
#include "blb/catalog.hpp"

namespace blb::test {

inline Scalar random_scalar(std::mt19937& rng, bool complex = true) {
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 5);
  long a = num(rng), b = den(rng);
  long c = complex ? num(rng) : 0, d = den(rng);
  return Scalar::fraction(a, b, c, d);
}

inline Matrix random_matrix(std::mt19937& rng, Index rows, Index cols, bool complex = true) {
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = random_scalar(rng, complex);
  return m;
}

inline Vector unit(Index n, Index i) {
  Vector v = Vector::Zero(n);
  v(i) = 1;
  return v;
}

inline std::string first_failure_name(const CheckReport& report) {
  const CheckResult* f = first_failure(report);
  return f ? f->name : std::string();
}

// Direct sum of Lie algebras with brackets between the summands zero.
inline LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  Index n = a.dim(), m = b.dim();
  Tensor3 c(n + m, n + m, n + m);
  for (const auto& e : a.structure().nonzeros()) c(e.i, e.j, e.k) = e.value;
  for (const auto& e : b.structure().nonzeros()) c(n + e.i, n + e.j, n + e.k) = e.value;
  std::vector<std::string> labels = a.labels();
  for (const auto& l : b.labels()) labels.push_back(l + "'");
  return LieAlgebra(labels, c);
}

}  // namespace blb::test
