#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace symsig {

struct VerifyCheck {
  std::string name;
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  std::string first_failure;  // empty when all cases pass

  bool passed() const { return failures == 0; }
};

struct VerifyReport {
  std::int64_t max_order = 0;
  std::vector<VerifyCheck> checks;

  bool passed() const;
};

/// Cross-checks every pipeline stage against its independent route for all
/// singularities 1/n(1,a) with n <= max_order.
VerifyReport verify_grid(std::int64_t max_order);

}  // namespace symsig
