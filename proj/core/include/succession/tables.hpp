#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "succession/big_count.hpp"

namespace succession {

enum class TableKind { linear_triangle, modular_grid, cycle_summary };
enum class TableFormat { text, csv, json };
enum class OeisSequence { a000240, a277609 };

/// A populated count table. Cells that the kind leaves undefined are absent
/// from the map, never zero:
///   LinearTriangle: (n, k) for 0 <= k < n <= max_n, k = 0 being the
///                   derangement column;
///   ModularGrid:    (n, k) for 1 <= k < n, 2 <= n <= max_n;
///   CycleSummary:   (max_n, k) for 1 <= k < max_n, the value being the
///                   maximum cycle length (edge lists and cycles are derived
///                   from (n, k) at render time).
class CountTable {
public:
  CountTable(TableKind kind, int max_n) : kind_(kind), max_n_(max_n) {}

  TableKind kind() const noexcept { return kind_; }
  int max_n() const noexcept { return max_n_; }

  const std::map<std::pair<int, int>, BigCount>& cells() const noexcept { return cells_; }
  std::optional<BigCount> value(int n, int k) const;
  void set(int n, int k, BigCount value);

  friend bool operator==(const CountTable&, const CountTable&) = default;

private:
  TableKind kind_;
  int max_n_;
  std::map<std::pair<int, int>, BigCount> cells_;
};

CountTable build_table(TableKind kind, int max_n);

/// Text mirrors the published layouts (blank cells stay blank); csv uses
/// empty fields for absent cells; json is a single object
/// {kind, max_n, rows: [{n, k, value|null}]} with values as decimal strings
/// so they stay exact past 2^64. Lines end with LF in every format.
std::string render(const CountTable& table, TableFormat format);

/// Inverse of render for the machine formats (csv, json).
CountTable parse_table(const std::string& data, TableFormat format);

/// OEIS b-file ("index value" per line, LF):
///   A000240 - alternating derangement numbers Der_n + (-1)^(n-1), the
///             modular 1-shift avoider counts; indices start at the entry's
///             offset 0.
///   A277609 - linear 3-shift avoider counts; indices start at offset 1
///             (entries below n = 4 have no forbidden pair and count n!).
std::string oeis_bfile(OeisSequence sequence, int max_n);

}  // namespace succession
