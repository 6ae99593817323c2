#include "succession/counting.hpp"

#include <cassert>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "succession/problem.hpp"

namespace succession {

namespace {

void check_nonnegative(int n, const char* what) {
  if (n < 0) {
    throw std::domain_error(std::string(what) + " requires n >= 0 (got n=" +
                            std::to_string(n) + ")");
  }
}

// Bounds shared with the rest of the library: constructing the problem
// performs the 1 <= k < n validation and yields its error messages.
void check_linear(int n, int k) { ShiftProblem probe(n, k, Variant::linear); (void)probe; }
void check_modular(int n, int k) { ShiftProblem probe(n, k, Variant::modular); (void)probe; }

std::vector<BigCount> poly_mul(const std::vector<BigCount>& a, const std::vector<BigCount>& b) {
  std::vector<BigCount> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

BigCount factorial(int n) {
  check_nonnegative(n, "factorial");
  static std::mutex mu;
  static std::vector<BigCount> memo{1};  // 0! = 1; append-only
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(memo.size()) <= n) {
    memo.push_back(memo.back() * static_cast<int>(memo.size()));
  }
  return memo[static_cast<std::size_t>(n)];
}

BigCount binomial(int n, int j) {
  if (j < 0 || j > n) return 0;
  if (j > n - j) j = n - j;
  BigCount result = 1;
  for (int i = 1; i <= j; ++i) {
    result *= n - j + i;
    result /= i;  // exact: result is C(n-j+i, i) at each step
  }
  return result;
}

BigCount derangement(int n) {
  check_nonnegative(n, "derangement");
  BigCount der = 1;
  for (int i = 1; i <= n; ++i) {
    der *= i;
    if (i % 2 == 0) {
      der += 1;
    } else {
      der -= 1;
    }
  }
  return der;
}

BigCount alternating_derangement(int n) {
  check_nonnegative(n, "alternating_derangement");
  BigCount result = derangement(n);
  if (n % 2 == 1) {
    result += 1;
  } else {
    result -= 1;
  }
  assert(result >= 0);
  return result;
}

BigCount count_linear(int n, int k) {
  check_linear(n, k);
  BigCount total = 0;
  for (int j = 0; j <= n - k; ++j) {
    const BigCount term = binomial(n - k, j) * factorial(n - j);
    if (j % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  assert(total >= 0);
  return total;
}

LinearTriangle::LinearTriangle(int max_n) : max_n_(max_n) {
  if (max_n < 1) {
    throw std::domain_error("max_n must be at least 1 (got max_n=" + std::to_string(max_n) + ")");
  }
  rows_.reserve(static_cast<std::size_t>(max_n));
  for (int n = 1; n <= max_n; ++n) {
    std::vector<BigCount> row;
    row.reserve(static_cast<std::size_t>(n));
    row.push_back(derangement(n));
    for (int k = 1; k < n; ++k) {
      // d(n, k) = d(n, k-1) + d(n-1, k-1)
      row.push_back(row[static_cast<std::size_t>(k - 1)] +
                    rows_[static_cast<std::size_t>(n - 2)][static_cast<std::size_t>(k - 1)]);
    }
    rows_.push_back(std::move(row));
  }
}

const BigCount& LinearTriangle::at(int n, int k) const {
  if (n < 1 || n > max_n_ || k < 0 || k >= n) {
    throw std::domain_error("triangle entry requires 0 <= k < n <= max_n (got n=" +
                            std::to_string(n) + ", k=" + std::to_string(k) +
                            ", max_n=" + std::to_string(max_n_) + ")");
  }
  return rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)];
}

LinearTriangle linear_triangle(int max_n) { return LinearTriangle(max_n); }

SubsetPolynomial edge_subset_polynomial(int n, int k) {
  check_modular(n, k);
  const int d = std::gcd(n, k);
  const int m = n / d;
  // One cycle of length m contributes (1+x)^m - x^m: any of its edge subsets
  // except the full cycle.
  std::vector<BigCount> cycle(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) cycle[static_cast<std::size_t>(j)] = binomial(m, j);
  std::vector<BigCount> acc{1};
  for (int i = 0; i < d; ++i) acc = poly_mul(acc, cycle);
  acc.resize(static_cast<std::size_t>(n) + 1);  // degree d(m-1) = n-d; pad through j = n
  return SubsetPolynomial{std::move(acc)};
}

BigCount count_modular(int n, int k) {
  const SubsetPolynomial poly = edge_subset_polynomial(n, k);
  BigCount total = 0;
  for (int j = 0; j <= n; ++j) {
    const BigCount term = poly.coefficients[static_cast<std::size_t>(j)] * factorial(n - j);
    if (j % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  assert(total >= 0);
  return total;
}

BigCount count_modular_coprime(int n, int k) {
  check_modular(n, k);
  if (std::gcd(n, k) != 1) {
    throw std::domain_error("count_modular_coprime requires gcd(n, k) = 1 (got n=" +
                            std::to_string(n) + ", k=" + std::to_string(k) + ", gcd=" +
                            std::to_string(std::gcd(n, k)) + "); use count_modular");
  }
  BigCount total = 0;
  for (int j = 0; j < n; ++j) {
    const BigCount term = binomial(n, j) * factorial(n - j);
    if (j % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  assert(total >= 0);
  return total;
}

}  // namespace succession
