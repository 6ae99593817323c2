#include "succession/tables.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "succession/counting.hpp"
#include "succession/cycles.hpp"
#include "succession/problem.hpp"

namespace succession {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string kind_name(TableKind kind) {
  switch (kind) {
    case TableKind::linear_triangle: return "LinearTriangle";
    case TableKind::modular_grid: return "ModularGrid";
    case TableKind::cycle_summary: return "CycleSummary";
  }
  throw std::logic_error("unreachable table kind");
}

TableKind kind_from_name(const std::string& name) {
  if (name == "LinearTriangle") return TableKind::linear_triangle;
  if (name == "ModularGrid") return TableKind::modular_grid;
  if (name == "CycleSummary") return TableKind::cycle_summary;
  throw std::invalid_argument("unknown table kind \"" + name + "\"");
}

void check_max_n(TableKind kind, int max_n) {
  const int least = kind == TableKind::linear_triangle ? 1 : 2;
  if (max_n < least) {
    throw std::domain_error("max_n must be at least " + std::to_string(least) + " for " +
                            kind_name(kind) + " (got max_n=" + std::to_string(max_n) + ")");
  }
}

// Compact pair rendering while single digits suffice, "a-b" beyond.
std::string edge_token(int a, int b, int n) {
  if (n <= 9) return std::to_string(a) + std::to_string(b);
  return std::to_string(a) + "-" + std::to_string(b);
}

// "13, 24, 35, 46; 51, 62": the pairs that wrap past n go after the semicolon.
std::string edges_with_wrap_split(int n, int k) {
  const ForbiddenEdgeSet set = forbidden_edges(ShiftProblem(n, k, Variant::modular));
  std::string out;
  for (const auto& [a, b] : set.edges()) {
    if (a == 1) {
      // first element of the straight diagonal
    } else if (a == n - k + 1) {
      out += "; ";
    } else {
      out += ", ";
    }
    out += edge_token(a, b, n);
  }
  return out;
}

std::string cycle_notation(int n, int k) {
  std::string out;
  for (const auto& cycle : power_cycles(n, k)) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (n > 9 && i > 0) out += ' ';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out;
}

std::string cycle_lengths_token(int n, int k) {
  std::string out;
  for (int len : cycle_decomposition(n, k).cycle_lengths) {
    if (!out.empty()) out += ' ';
    out += std::to_string(len);
  }
  return out;
}

// Edges listed uniformly (no wrap split) for the machine formats.
std::string edges_uniform(int n, int k) {
  const ForbiddenEdgeSet set = forbidden_edges(ShiftProblem(n, k, Variant::modular));
  std::string out;
  for (const auto& [a, b] : set.edges()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(a) + "-" + std::to_string(b);
  }
  return out;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

std::vector<std::string> split_lines(const std::string& data) {
  std::vector<std::string> lines;
  std::string line;
  for (char c : data) {
    if (c == '\n') {
      lines.push_back(std::move(line));
      line.clear();
    } else {
      line += c;
    }
  }
  if (!line.empty()) lines.push_back(std::move(line));
  return lines;
}

// --- text -------------------------------------------------------------

std::string pad_table(const std::vector<std::vector<std::string>>& grid,
                      const std::vector<bool>& right_align) {
  std::vector<std::size_t> width(right_align.size(), 0);
  for (const auto& row : grid) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : grid) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += "  ";
      const std::size_t pad = width[c] - row[c].size();
      if (right_align[c]) {
        line += std::string(pad, ' ') + row[c];
      } else {
        line += row[c] + std::string(pad, ' ');
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  return out;
}

std::string render_text(const CountTable& table) {
  const int max_n = table.max_n();
  std::vector<std::vector<std::string>> grid;
  std::vector<bool> right_align;

  switch (table.kind()) {
    case TableKind::linear_triangle: {
      std::vector<std::string> header{"n", "Der"};
      for (int k = 1; k < max_n; ++k) header.push_back("k" + std::to_string(k));
      right_align.assign(header.size(), true);
      grid.push_back(std::move(header));
      for (int n = 1; n <= max_n; ++n) {
        std::vector<std::string> row{std::to_string(n)};
        for (int k = 0; k < max_n; ++k) {
          const auto v = table.value(n, k);
          row.push_back(v ? v->str() : "");
        }
        grid.push_back(std::move(row));
      }
      break;
    }
    case TableKind::modular_grid: {
      std::vector<std::string> header{""};
      for (int k = 1; k < max_n; ++k) header.push_back("k=" + std::to_string(k));
      right_align.assign(header.size(), true);
      right_align[0] = false;
      grid.push_back(std::move(header));
      for (int n = 2; n <= max_n; ++n) {
        std::vector<std::string> row{"n = " + std::to_string(n)};
        for (int k = 1; k < max_n; ++k) {
          const auto v = table.value(n, k);
          row.push_back(v ? v->str() : "");
        }
        grid.push_back(std::move(row));
      }
      break;
    }
    case TableKind::cycle_summary: {
      grid.push_back({"k", "forbidden successions", "k-th power", "max cycle length"});
      right_align = {true, false, false, true};
      for (int k = 1; k < max_n; ++k) {
        const auto v = table.value(max_n, k);
        grid.push_back({std::to_string(k), edges_with_wrap_split(max_n, k),
                        cycle_notation(max_n, k), v ? v->str() : ""});
      }
      break;
    }
  }
  return pad_table(grid, right_align);
}

// --- csv --------------------------------------------------------------

std::string render_csv(const CountTable& table) {
  const int max_n = table.max_n();
  std::string out;
  switch (table.kind()) {
    case TableKind::linear_triangle: {
      out = "n,Der";
      for (int k = 1; k < max_n; ++k) out += ",k" + std::to_string(k);
      out += '\n';
      for (int n = 1; n <= max_n; ++n) {
        out += std::to_string(n);
        for (int k = 0; k < max_n; ++k) {
          const auto v = table.value(n, k);
          out += ',' + (v ? v->str() : "");
        }
        out += '\n';
      }
      break;
    }
    case TableKind::modular_grid: {
      out = "n";
      for (int k = 1; k < max_n; ++k) out += ",k" + std::to_string(k);
      out += '\n';
      for (int n = 2; n <= max_n; ++n) {
        out += std::to_string(n);
        for (int k = 1; k < max_n; ++k) {
          const auto v = table.value(n, k);
          out += ',' + (v ? v->str() : "");
        }
        out += '\n';
      }
      break;
    }
    case TableKind::cycle_summary: {
      out = "n,k,forbidden_edges,cycle_lengths,max_cycle_length\n";
      for (int k = 1; k < max_n; ++k) {
        const auto v = table.value(max_n, k);
        out += std::to_string(max_n) + ',' + std::to_string(k) + ',' + edges_uniform(max_n, k) +
               ',' + cycle_lengths_token(max_n, k) + ',' + (v ? v->str() : "") + '\n';
      }
      break;
    }
  }
  return out;
}

CountTable parse_csv(const std::string& data) {
  const std::vector<std::string> lines = split_lines(data);
  if (lines.empty()) throw std::invalid_argument("empty csv table");
  const std::vector<std::string> header = split_fields(lines[0]);

  if (header.size() >= 2 && header[1] == "Der") {
    const int max_n = static_cast<int>(lines.size()) - 1;
    CountTable table(TableKind::linear_triangle, max_n);
    for (std::size_t r = 1; r < lines.size(); ++r) {
      const std::vector<std::string> fields = split_fields(lines[r]);
      const int n = std::stoi(fields[0]);
      for (std::size_t c = 1; c < fields.size(); ++c) {
        if (!fields[c].empty()) table.set(n, static_cast<int>(c) - 1, BigCount(fields[c]));
      }
    }
    return table;
  }
  if (header.size() >= 2 && header[1] == "k") {
    // cycle summary: n,k,forbidden_edges,cycle_lengths,max_cycle_length
    int max_n = 0;
    for (std::size_t r = 1; r < lines.size(); ++r) {
      max_n = std::max(max_n, std::stoi(split_fields(lines[r])[0]));
    }
    CountTable table(TableKind::cycle_summary, max_n);
    for (std::size_t r = 1; r < lines.size(); ++r) {
      const std::vector<std::string> fields = split_fields(lines[r]);
      table.set(std::stoi(fields[0]), std::stoi(fields[1]), BigCount(fields[4]));
    }
    return table;
  }
  // modular grid: n,k1,k2,...
  const int max_n = static_cast<int>(lines.size());  // rows n = 2..max_n
  CountTable table(TableKind::modular_grid, max_n);
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const std::vector<std::string> fields = split_fields(lines[r]);
    const int n = std::stoi(fields[0]);
    for (std::size_t c = 1; c < fields.size(); ++c) {
      if (!fields[c].empty()) table.set(n, static_cast<int>(c), BigCount(fields[c]));
    }
  }
  return table;
}

// --- json -------------------------------------------------------------

std::string render_json(const CountTable& table) {
  ordered_json doc;
  doc["kind"] = kind_name(table.kind());
  doc["max_n"] = table.max_n();
  doc["rows"] = ordered_json::array();
  const auto add_row = [&doc, &table](int n, int k) {
    ordered_json row;
    row["n"] = n;
    row["k"] = k;
    const auto v = table.value(n, k);
    if (v) {
      row["value"] = v->str();
    } else {
      row["value"] = nullptr;
    }
    doc["rows"].push_back(std::move(row));
  };
  switch (table.kind()) {
    case TableKind::linear_triangle:
      for (int n = 1; n <= table.max_n(); ++n)
        for (int k = 0; k < n; ++k) add_row(n, k);
      break;
    case TableKind::modular_grid:
      for (int n = 2; n <= table.max_n(); ++n)
        for (int k = 1; k < n; ++k) add_row(n, k);
      break;
    case TableKind::cycle_summary:
      for (int k = 1; k < table.max_n(); ++k) add_row(table.max_n(), k);
      break;
  }
  return doc.dump(2) + "\n";
}

CountTable parse_json(const std::string& data) {
  const ordered_json doc = ordered_json::parse(data);
  CountTable table(kind_from_name(doc.at("kind").get<std::string>()),
                   doc.at("max_n").get<int>());
  for (const auto& row : doc.at("rows")) {
    const auto& value = row.at("value");
    if (value.is_null()) continue;
    BigCount count = value.is_string() ? BigCount(value.get<std::string>())
                                       : BigCount(value.get<std::int64_t>());
    table.set(row.at("n").get<int>(), row.at("k").get<int>(), std::move(count));
  }
  return table;
}

}  // namespace

std::optional<BigCount> CountTable::value(int n, int k) const {
  const auto it = cells_.find({n, k});
  if (it == cells_.end()) return std::nullopt;
  return it->second;
}

void CountTable::set(int n, int k, BigCount value) { cells_[{n, k}] = std::move(value); }

CountTable build_table(TableKind kind, int max_n) {
  check_max_n(kind, max_n);
  CountTable table(kind, max_n);
  switch (kind) {
    case TableKind::linear_triangle: {
      const LinearTriangle triangle(max_n);
      for (int n = 1; n <= max_n; ++n)
        for (int k = 0; k < n; ++k) table.set(n, k, triangle.at(n, k));
      break;
    }
    case TableKind::modular_grid:
      for (int n = 2; n <= max_n; ++n)
        for (int k = 1; k < n; ++k) table.set(n, k, count_modular(n, k));
      break;
    case TableKind::cycle_summary:
      for (int k = 1; k < max_n; ++k) table.set(max_n, k, max_cycle_length(max_n, k));
      break;
  }
  return table;
}

std::string render(const CountTable& table, TableFormat format) {
  switch (format) {
    case TableFormat::text: return render_text(table);
    case TableFormat::csv: return render_csv(table);
    case TableFormat::json: return render_json(table);
  }
  throw std::logic_error("unreachable table format");
}

CountTable parse_table(const std::string& data, TableFormat format) {
  switch (format) {
    case TableFormat::csv: return parse_csv(data);
    case TableFormat::json: return parse_json(data);
    case TableFormat::text:
      throw std::invalid_argument("text tables are for reading, not parsing; use csv or json");
  }
  throw std::logic_error("unreachable table format");
}

std::string oeis_bfile(OeisSequence sequence, int max_n) {
  std::string out;
  switch (sequence) {
    case OeisSequence::a000240:
      if (max_n < 0) throw std::domain_error("max_n must be >= 0 for A000240");
      for (int n = 0; n <= max_n; ++n) {
        out += std::to_string(n) + ' ' + alternating_derangement(n).str() + '\n';
      }
      break;
    case OeisSequence::a277609:
      if (max_n < 1) throw std::domain_error("max_n must be >= 1 for A277609");
      for (int n = 1; n <= max_n; ++n) {
        const BigCount value = n <= 3 ? factorial(n) : count_linear(n, 3);
        out += std::to_string(n) + ' ' + value.str() + '\n';
      }
      break;
  }
  return out;
}

}  // namespace succession
