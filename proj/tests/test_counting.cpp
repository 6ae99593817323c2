#include <doctest.h>

#include <bit>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "succession/counting.hpp"
#include "succession/problem.hpp"

using succession::alternating_derangement;
using succession::BigCount;
using succession::binomial;
using succession::count_linear;
using succession::count_modular;
using succession::count_modular_coprime;
using succession::derangement;
using succession::edge_subset_polynomial;
using succession::factorial;
using succession::forbidden_edges;
using succession::linear_triangle;
using succession::LinearTriangle;
using succession::ShiftProblem;
using succession::SubsetPolynomial;
using succession::Variant;

namespace {

// Published values (OEIS A000166 / A000255-adjacent triangle): rows n = 1..8,
// columns Der, k=1..5 where defined.
struct LinearRow {
  int n;
  long long der;
  std::vector<long long> shifts;  // k = 1, 2, ... while defined and published
};
const std::vector<LinearRow> kLinearTable = {
    {1, 0, {}},
    {2, 1, {1}},
    {3, 2, {3, 4}},
    {4, 9, {11, 14, 18}},
    {5, 44, {53, 64, 78, 96}},
    {6, 265, {309, 362, 426, 504, 600}},
    {7, 1854, {2119, 2428, 2790, 3216, 3720}},
    {8, 14833, {16687, 18806, 21234, 24024, 27240}},
};

// Published modular counts, rows n = 2..9, columns k = 1..6 where defined.
const std::vector<std::vector<long long>> kModularTable = {
    {0},
    {3, 3},
    {8, 8, 8},
    {45, 45, 45, 45},
    {264, 270, 240, 270, 264},
    {1855, 1855, 1855, 1855, 1855, 1855},
    {14832, 14816, 14832, 13824, 14832, 14816},
    {133497, 133497, 134298, 133497, 133497, 134298},
};

// Independent derangement oracle: Der_n = sum_k (-1)^k n!/k!, with the
// falling factorial n!/k! built by direct multiplication.
BigCount derangement_by_sum(int n) {
  BigCount total = 0;
  for (int k = 0; k <= n; ++k) {
    BigCount term = 1;
    for (int i = k + 1; i <= n; ++i) term *= i;
    if (k % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

// Independent oracle for the inclusion-exclusion weights: enumerate every
// subset of the modular edge list and keep those whose edges close no loop
// (plain graph walk, no gcd reasoning).
std::vector<long long> cycle_free_subset_counts(int n, int k) {
  const auto edges = forbidden_edges(ShiftProblem(n, k, Variant::modular)).edges();
  const int m = static_cast<int>(edges.size());
  std::vector<long long> counts(static_cast<std::size_t>(n) + 1, 0);
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> succ(static_cast<std::size_t>(n) + 1, 0);
    for (int e = 0; e < m; ++e) {
      if (mask >> e & 1u) succ[edges[e].first] = edges[e].second;
    }
    bool closes_loop = false;
    for (int start = 1; start <= n && !closes_loop; ++start) {
      int cur = succ[start];
      for (int step = 0; cur != 0 && cur != start && step < n; ++step) cur = succ[cur];
      closes_loop = cur == start && succ[start] != 0;
    }
    if (!closes_loop) ++counts[std::popcount(mask)];
  }
  return counts;
}

}  // namespace

TEST_CASE("factorial memo and binomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == BigCount("2432902008176640000"));
  CHECK(factorial(25) == BigCount("15511210043330985984000000"));
  CHECK_THROWS_AS(factorial(-1), std::domain_error);

  CHECK(binomial(8, 4) == 70);
  CHECK(binomial(8, 0) == 1);
  CHECK(binomial(8, 8) == 1);
  CHECK(binomial(8, 9) == 0);
  CHECK(binomial(8, -1) == 0);
  CHECK(binomial(60, 30) == BigCount("118264581564861424"));

  // Pascal identity as a spot property
  for (int n = 1; n <= 40; ++n) {
    for (int j = 1; j <= n; ++j) {
      REQUIRE(binomial(n, j) == binomial(n - 1, j - 1) + binomial(n - 1, j));
    }
  }
}

TEST_CASE("derangement numbers") {
  CHECK(derangement(0) == 1);
  CHECK(derangement(1) == 0);
  CHECK(derangement(5) == 44);
  CHECK(derangement(8) == 14833);
  CHECK_THROWS_AS(derangement(-2), std::domain_error);
  for (int n = 0; n <= 50; ++n) REQUIRE(derangement(n) == derangement_by_sum(n));
}

TEST_CASE("alternating derangement numbers (A000240)") {
  const std::vector<long long> expected = {0, 1, 0, 3, 8, 45, 264, 1855, 14832, 133497};
  for (int n = 0; n < static_cast<int>(expected.size()); ++n) {
    REQUIRE(alternating_derangement(n) == expected[n]);
  }
  // equals n * Der_{n-1} (both count permutations with exactly one fixed point)
  for (int n = 1; n <= 40; ++n) {
    REQUIRE(alternating_derangement(n) == n * derangement(n - 1));
  }
}

TEST_CASE("linear counts: worked values and bounds") {
  CHECK(count_linear(5, 3) == 78);
  CHECK(count_linear(8, 5) == 27240);
  CHECK(count_linear(6, 5) == 600);
  CHECK_THROWS_AS(count_linear(5, 0), std::domain_error);
  CHECK_THROWS_AS(count_linear(5, 5), std::domain_error);
  CHECK_THROWS_AS(count_linear(5, 6), std::domain_error);
}

TEST_CASE("linear counts reproduce the published table") {
  for (const LinearRow& row : kLinearTable) {
    REQUIRE(derangement(row.n) == row.der);
    for (int k = 1; k <= static_cast<int>(row.shifts.size()); ++k) {
      REQUIRE(count_linear(row.n, k) == row.shifts[static_cast<std::size_t>(k - 1)]);
    }
  }
}

TEST_CASE("addition triangle") {
  const LinearTriangle triangle = linear_triangle(8);
  CHECK(triangle.at(8, 2) == 18806);
  CHECK(triangle.at(3, 0) == 2);
  CHECK(triangle.at(6, 3) == 426);
  CHECK_THROWS_AS(triangle.at(9, 1), std::domain_error);
  CHECK_THROWS_AS(triangle.at(3, 3), std::domain_error);
  CHECK_THROWS_AS(triangle.at(3, -1), std::domain_error);
  CHECK_THROWS_AS(linear_triangle(0), std::domain_error);

  const LinearTriangle big = linear_triangle(30);
  for (int n = 1; n <= 30; ++n) {
    REQUIRE(big.at(n, 0) == derangement(n));
    for (int k = 1; k < n; ++k) REQUIRE(big.at(n, k) == count_linear(n, k));
  }
}

TEST_CASE("edge subset polynomial: frozen coefficient vectors") {
  const auto coefficients = [](int n, int k) { return edge_subset_polynomial(n, k).coefficients; };
  CHECK(coefficients(6, 2) == std::vector<BigCount>{1, 6, 15, 18, 9, 0, 0});
  CHECK(coefficients(8, 5) == std::vector<BigCount>{1, 8, 28, 56, 70, 56, 28, 8, 0});
  CHECK(coefficients(4, 2) == std::vector<BigCount>{1, 4, 4, 0, 0});
  CHECK_THROWS_AS(edge_subset_polynomial(4, 4), std::domain_error);
}

TEST_CASE("edge subset polynomial equals the brute-force subset census, n <= 12") {
  for (int n = 2; n <= 12; ++n) {
    for (int k = 1; k < n; ++k) {
      const SubsetPolynomial poly = edge_subset_polynomial(n, k);
      const std::vector<long long> census = cycle_free_subset_counts(n, k);
      REQUIRE(poly.coefficients.size() == static_cast<std::size_t>(n) + 1);
      for (int j = 0; j <= n; ++j) {
        REQUIRE(poly.coefficients[static_cast<std::size_t>(j)] ==
                census[static_cast<std::size_t>(j)]);
      }
    }
  }
}

TEST_CASE("polynomial sanity: binomial prefix and total mass") {
  for (int n = 2; n <= 30; ++n) {
    for (int k = 1; k < n; ++k) {
      const int d = std::gcd(n, k);
      const int m = n / d;
      const SubsetPolynomial poly = edge_subset_polynomial(n, k);
      for (int j = 0; j < m; ++j) {
        REQUIRE(poly.coefficients[static_cast<std::size_t>(j)] == binomial(n, j));
      }
      BigCount mass = 0;
      for (const BigCount& c : poly.coefficients) mass += c;
      BigCount expected = 1;
      const BigCount per_cycle = (BigCount(1) << m) - 1;
      for (int i = 0; i < d; ++i) expected *= per_cycle;
      REQUIRE(mass == expected);
    }
  }
}

TEST_CASE("modular counts: worked values") {
  CHECK(count_modular(8, 5) == 14832);
  CHECK(count_modular(6, 3) == 240);
  CHECK(count_modular(8, 4) == 13824);
  CHECK(count_modular(9, 3) == 134298);
  CHECK_THROWS_AS(count_modular(2, 2), std::domain_error);
  CHECK_THROWS_AS(count_modular(2, 0), std::domain_error);
}

TEST_CASE("modular counts reproduce the published table") {
  for (int n = 2; n <= 9; ++n) {
    const auto& row = kModularTable[static_cast<std::size_t>(n - 2)];
    for (int k = 1; k <= static_cast<int>(row.size()); ++k) {
      REQUIRE(count_modular(n, k) == row[static_cast<std::size_t>(k - 1)]);
    }
  }
}

TEST_CASE("coprime modular count") {
  for (int k = 1; k <= 4; ++k) REQUIRE(count_modular_coprime(5, k) == 45);
  CHECK(count_modular_coprime(2, 1) == 0);
  CHECK(count_modular_coprime(9, 2) == 133497);
  CHECK_THROWS_AS(count_modular_coprime(6, 2), std::domain_error);
  CHECK_THROWS_AS(count_modular_coprime(6, 3), std::domain_error);

  for (int n = 2; n <= 20; ++n) {
    for (int k = 1; k < n; ++k) {
      if (std::gcd(n, k) != 1) continue;
      REQUIRE(count_modular_coprime(n, k) == count_modular(n, k));
      REQUIRE(count_modular_coprime(n, k) == alternating_derangement(n));
    }
  }
}

TEST_CASE("identity suite, exhaustive to n = 30") {
  const LinearTriangle triangle = linear_triangle(30);
  for (int n = 2; n <= 30; ++n) {
    REQUIRE(count_linear(n, 1) == derangement(n) + derangement(n - 1));
    REQUIRE(count_linear(n, n - 1) == factorial(n) - factorial(n - 1));
    REQUIRE(count_modular(n, 1) == alternating_derangement(n));
    for (int k = 1; k < n; ++k) {
      if (k + 1 < n) {
        REQUIRE(count_linear(n, k + 1) == count_linear(n, k) + count_linear(n - 1, k));
      }
      REQUIRE(triangle.at(n, k) == count_linear(n, k));
      REQUIRE(count_modular(n, k) == count_modular(n, n - k));
      REQUIRE(count_modular(n, k) <= count_linear(n, k));
      for (int k2 = k + 1; k2 < n; ++k2) {
        if (std::gcd(n, k) == std::gcd(n, k2)) {
          REQUIRE(count_modular(n, k) == count_modular(n, k2));
        }
      }
    }
  }
}

TEST_CASE("counts stay exact past 64 bits") {
  const BigCount two64 = BigCount(1) << 64;
  const BigCount linear = count_linear(25, 3);
  const BigCount modular = count_modular(25, 3);
  CHECK(linear > two64);
  CHECK(modular > two64);
  CHECK(linear == BigCount("6419950689722261228431758"));
  CHECK(modular == BigCount("5706255282633466762357225"));
  CHECK(modular == alternating_derangement(25));  // gcd(25, 3) = 1
}
