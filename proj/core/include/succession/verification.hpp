#pragma once

#include <functional>
#include <vector>

#include "succession/big_count.hpp"
#include "succession/problem.hpp"

namespace succession {

struct VerifyMismatch {
  int n = 0;
  int k = 0;
  Variant variant = Variant::linear;
  BigCount formula;
  BigCount enumerated;
};

struct VerifyReport {
  int max_n_checked = 0;
  long cases_checked = 0;
  std::vector<VerifyMismatch> mismatches;

  bool ok() const noexcept { return mismatches.empty(); }
};

using CountFormula = std::function<BigCount(int n, int k)>;

/// Cross-checks the closed-form counts against brute-force enumeration for
/// every 2 <= n <= min(max_n, guard), 1 <= k < n, both variants. The formula
/// arguments exist so tests can inject a broken formula and watch the check
/// trip; callers normally use the two-argument overload.
VerifyReport verify_counts(int max_n, int guard, const CountFormula& linear_formula,
                           const CountFormula& modular_formula);
VerifyReport verify_counts(int max_n, int guard = 11);

}  // namespace succession
