#pragma once

#include <string>
#include <vector>

#include "blb/tensor.hpp"

namespace blb {

struct ResidualEntry {
  std::vector<Index> index;
  Scalar value;
  friend bool operator==(const ResidualEntry& a, const ResidualEntry& b) {
    return a.index == b.index && a.value == b.value;
  }
};

// Outcome of one exact identity check. A failure carries the first failing
// index tuple (in basis order) and the nonzero entries of the residual there.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::vector<Index> where;
  std::vector<ResidualEntry> residual;

  explicit operator bool() const { return passed; }

  static CheckResult pass(std::string name);
  static CheckResult fail(std::string name, std::vector<Index> where, std::vector<ResidualEntry> residual);
};

using CheckReport = std::vector<CheckResult>;

bool all_passed(const CheckReport& report);
const CheckResult* first_failure(const CheckReport& report);
void append(CheckReport& into, const CheckReport& from);

std::vector<ResidualEntry> sparse_entries(const Vector& v);
std::vector<ResidualEntry> sparse_entries(const Matrix& m);
std::vector<ResidualEntry> sparse_entries(const Tensor3& t);

}  // namespace blb
