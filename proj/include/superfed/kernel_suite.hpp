#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace superfed {

/// Outcome of one randomized algebraic property.
struct KernelProperty {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;  // empty when all cases passed
};

struct KernelSuiteResult {
  std::vector<KernelProperty> properties;

  std::size_t cases() const noexcept;
  std::size_t failures() const noexcept;
  bool passed() const noexcept { return failures() == 0; }
};

/// Randomized exact checks of the superalgebra kernel: supercommutativity,
/// associativity, distributivity, inversion, the left-derivative Leibniz
/// rule, d^2 = 0 on functions and 1-forms, bracket antisymmetry and the
/// super-Jacobi identity. Deterministic in `seed`.
KernelSuiteResult run_kernel_suite(std::uint64_t seed, std::size_t cases_per_property);

}  // namespace superfed
