#include "succession/verification.hpp"

#include <algorithm>

#include "succession/counting.hpp"
#include "succession/enumeration.hpp"

namespace succession {

VerifyReport verify_counts(int max_n, int guard, const CountFormula& linear_formula,
                           const CountFormula& modular_formula) {
  VerifyReport report;
  report.max_n_checked = std::min(max_n, guard);
  for (int n = 2; n <= report.max_n_checked; ++n) {
    for (int k = 1; k < n; ++k) {
      for (Variant variant : {Variant::linear, Variant::modular}) {
        const ShiftProblem problem(n, k, variant);
        const BigCount enumerated =
            count_by_enumeration(EnumerationConfig{problem, guard, std::nullopt});
        const BigCount formula =
            variant == Variant::linear ? linear_formula(n, k) : modular_formula(n, k);
        ++report.cases_checked;
        if (formula != enumerated) {
          report.mismatches.push_back(VerifyMismatch{n, k, variant, formula, enumerated});
        }
      }
    }
  }
  return report;
}

VerifyReport verify_counts(int max_n, int guard) {
  return verify_counts(
      max_n, guard, [](int n, int k) { return count_linear(n, k); },
      [](int n, int k) { return count_modular(n, k); });
}

}  // namespace succession
