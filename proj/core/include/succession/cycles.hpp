#pragma once

#include <vector>

namespace succession {

/// Cycle structure of the k-th power of the n-cycle (1 2 ... n). The modular
/// forbidden edges j -> j+k (mod n) trace exactly these cycles, so the
/// structure decides how long a run of forbidden successions can get.
struct CycleDecomposition {
  std::vector<int> cycle_lengths;  // gcd(n,k) entries, each n/gcd(n,k)
  int gcd_nk = 0;

  friend bool operator==(const CycleDecomposition&, const CycleDecomposition&) = default;
};

/// gcd(n,k) cycles of length n/gcd(n,k).
CycleDecomposition cycle_decomposition(int n, int k);

/// n / gcd(n,k): the longest cycle (all cycles are this long).
int max_cycle_length(int n, int k);

/// The cycles themselves, obtained by walking j -> j+k (mod n). Each cycle
/// starts at its smallest element; cycles are ordered by smallest element.
std::vector<std::vector<int>> power_cycles(int n, int k);

/// A maximal run of modular forbidden successions. The length counts edges,
/// one less than the number of elements in the witness.
struct ForbiddenChain {
  int length = 0;                // = n/gcd(n,k) - 1
  std::vector<int> witness;      // length+1 distinct elements, starting at 1

  friend bool operator==(const ForbiddenChain&, const ForbiddenChain&) = default;
};

/// Longest chain of modular forbidden edges, with a deterministic witness:
/// start at element 1 and follow banned successors around its cycle.
ForbiddenChain longest_forbidden_chain(int n, int k);

}  // namespace succession
