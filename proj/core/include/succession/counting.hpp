#pragma once

#include <vector>

#include "succession/big_count.hpp"

namespace succession {

/// n!, memoized for the life of the process (the memo only ever grows).
BigCount factorial(int n);

/// C(n, j); 0 outside 0 <= j <= n.
BigCount binomial(int n, int j);

/// Number of fixed-point-free permutations of [n]. Computed by the integer
/// recurrence Der_n = n * Der_{n-1} + (-1)^n, Der_0 = 1; no rational
/// arithmetic anywhere.
BigCount derangement(int n);

/// Der_n + (-1)^(n-1): the count of permutations avoiding all n modular
/// 1-shift successions 12, 23, ..., n1 (OEIS A000240). Defined for n >= 0;
/// equals n * Der_{n-1} for n >= 1 and 0 at n = 0.
BigCount alternating_derangement(int n);

/// Permutations of [n] avoiding the n-k linear forbidden pairs j(j+k):
///
///   sum_{j=0}^{n-k} (-1)^j C(n-k, j) (n-j)!
///
/// Each j-subset of forbidden pairs glues into blocks, leaving (n-j)! orders.
BigCount count_linear(int n, int k);

/// The addition triangle d(n, k+1) = d(n, k) + d(n-1, k) seeded with the
/// derangement column d(n, 0) = Der_n. Entries agree with count_linear for
/// every k >= 1; the k = 0 column is the convention that a 0-shift board is
/// the derangement board.
class LinearTriangle {
public:
  explicit LinearTriangle(int max_n);

  int max_n() const noexcept { return max_n_; }

  /// Entry for 0 <= k < n <= max_n; anything else is a domain error.
  const BigCount& at(int n, int k) const;

private:
  int max_n_;
  std::vector<std::vector<BigCount>> rows_;  // rows_[n-1] holds k = 0..n-1
};

LinearTriangle linear_triangle(int max_n);

/// Inclusion-exclusion weights for the modular count. coefficients[j] is the
/// number of j-subsets of the n forbidden edges that some permutation can
/// realize simultaneously.
///
/// The modular edges split into d = gcd(n,k) cycles of length m = n/d. A
/// subset of edges is realizable iff it closes none of those cycles (any
/// cycle-free subset is a union of disjoint paths, which glue into blocks),
/// so per cycle the admissible subsets have generating polynomial
/// (1+x)^m - x^m and the whole board gives ((1+x)^m - x^m)^d.
struct SubsetPolynomial {
  std::vector<BigCount> coefficients;  // index j = 0..n

  friend bool operator==(const SubsetPolynomial&, const SubsetPolynomial&) = default;
};

SubsetPolynomial edge_subset_polynomial(int n, int k);

/// Permutations of [n] avoiding all n modular forbidden pairs j(j+k) mod n:
///
///   sum_{j=0}^{n} (-1)^j A_j (n-j)!
///
/// with A from edge_subset_polynomial. Depends on (n, k) only through
/// gcd(n, k); reduces to count_modular_coprime when the gcd is 1.
BigCount count_modular(int n, int k);

/// The coprime case evaluated directly as sum_{j=0}^{n-1} (-1)^j C(n,j)(n-j)!.
/// Demands gcd(n, k) = 1 (use count_modular otherwise). Equals
/// alternating_derangement(n).
BigCount count_modular_coprime(int n, int k);

}  // namespace succession
