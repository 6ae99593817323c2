#include <doctest.h>

#include "succession/counting.hpp"
#include "succession/verification.hpp"

using succession::BigCount;
using succession::count_linear;
using succession::count_modular;
using succession::Variant;
using succession::verify_counts;
using succession::VerifyReport;

TEST_CASE("formulas agree with enumeration over the default sweep") {
  const VerifyReport report = verify_counts(6);
  CHECK(report.ok());
  CHECK(report.max_n_checked == 6);
  CHECK(report.cases_checked == 30);  // (1+2+3+4+5) pairs x 2 variants
}

TEST_CASE("the guard clamps the sweep") {
  const VerifyReport report = verify_counts(50, 5);
  CHECK(report.ok());
  CHECK(report.max_n_checked == 5);
  CHECK(report.cases_checked == 20);
}

TEST_CASE("a perturbed formula trips the check") {
  const auto broken_linear = [](int n, int k) { return count_linear(n, k) + 1; };
  const auto broken_modular = [](int n, int k) { return count_modular(n, k) - 1; };
  const auto good_linear = [](int n, int k) { return count_linear(n, k); };
  const auto good_modular = [](int n, int k) { return count_modular(n, k); };

  const VerifyReport linear_broken = verify_counts(5, 11, broken_linear, good_modular);
  REQUIRE_FALSE(linear_broken.ok());
  CHECK(linear_broken.mismatches.size() == 10);  // every linear case
  for (const auto& mismatch : linear_broken.mismatches) {
    CHECK(mismatch.variant == Variant::linear);
    CHECK(mismatch.formula == mismatch.enumerated + 1);
  }

  const VerifyReport modular_broken = verify_counts(5, 11, good_linear, broken_modular);
  REQUIRE_FALSE(modular_broken.ok());
  CHECK(modular_broken.mismatches.size() == 10);
  for (const auto& mismatch : modular_broken.mismatches) {
    CHECK(mismatch.variant == Variant::modular);
  }
}
