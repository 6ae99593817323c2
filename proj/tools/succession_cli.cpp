// succession: exact counts, enumeration, and cycle analysis of permutations
// avoiding k-shift successions, in the linear and modular variants.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or domain error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "succession/succession.hpp"

namespace {

using namespace succession;

int guard_from_environment() {
  const char* raw = std::getenv("SUCCESSION_MAX_GUARD");
  if (raw == nullptr) return 11;
  try {
    std::size_t used = 0;
    const int value = std::stoi(raw, &used);
    if (used != std::string(raw).size() || value < 1) throw std::invalid_argument(raw);
    return value;
  } catch (const std::exception&) {
    throw std::domain_error("SUCCESSION_MAX_GUARD must be a positive integer (got \"" +
                            std::string(raw) + "\")");
  }
}

Variant variant_of(bool modular) { return modular ? Variant::modular : Variant::linear; }

int run_count(int n, int k, bool modular) {
  const BigCount result =
      modular ? count_modular(n, k) : count_linear(n, k);
  std::cout << result << '\n';
  return 0;
}

int run_enumerate(int n, int k, bool modular, std::optional<std::uint64_t> limit, int guard) {
  EnumerationConfig config{ShiftProblem(n, k, variant_of(modular)), guard, limit};
  AvoiderStream stream = enumerate_avoiders(config);
  while (auto perm = stream.next()) {
    std::string line;
    for (std::size_t i = 0; i < perm->size(); ++i) {
      if (i > 0) line += ' ';
      line += std::to_string((*perm)[i]);
    }
    std::cout << line << '\n';
  }
  return 0;
}

int run_cycles(int n, int k) {
  const CycleDecomposition decomposition = cycle_decomposition(n, k);
  std::cout << "n = " << n << ", k = " << k << ", gcd = " << decomposition.gcd_nk << '\n';
  std::cout << "cycle lengths:";
  for (int len : decomposition.cycle_lengths) std::cout << ' ' << len;
  std::cout << '\n';
  std::cout << "max cycle length: " << max_cycle_length(n, k) << '\n';
  std::cout << "k-th power cycles:";
  for (const auto& cycle : power_cycles(n, k)) {
    std::cout << " (";
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) std::cout << ' ';
      std::cout << cycle[i];
    }
    std::cout << ')';
  }
  std::cout << '\n';
  const ForbiddenChain chain = longest_forbidden_chain(n, k);
  std::cout << "longest forbidden chain: length " << chain.length << ", witness";
  for (int element : chain.witness) std::cout << ' ' << element;
  std::cout << '\n';
  return 0;
}

int run_table(const std::string& kind_name, int max_n, const std::string& format_name) {
  const TableKind kind = kind_name == "linear"    ? TableKind::linear_triangle
                         : kind_name == "modular" ? TableKind::modular_grid
                                                  : TableKind::cycle_summary;
  const TableFormat format = format_name == "csv"    ? TableFormat::csv
                             : format_name == "json" ? TableFormat::json
                                                     : TableFormat::text;
  std::cout << render(build_table(kind, max_n), format);
  return 0;
}

int run_verify(int max_n, int guard) {
  const VerifyReport report = verify_counts(max_n, guard);
  if (report.max_n_checked < max_n) {
    std::cout << "note: clamped to the enumeration guard, checking n <= "
              << report.max_n_checked << " (set SUCCESSION_MAX_GUARD to raise)\n";
  }
  for (const VerifyMismatch& mismatch : report.mismatches) {
    std::cout << "MISMATCH " << (mismatch.variant == Variant::modular ? "modular" : "linear")
              << " n=" << mismatch.n << " k=" << mismatch.k << ": formula " << mismatch.formula
              << ", enumeration " << mismatch.enumerated << '\n';
  }
  if (!report.ok()) {
    std::cout << report.mismatches.size() << " of " << report.cases_checked
              << " cases disagree\n";
    return 1;
  }
  std::cout << "verified n = 2.." << report.max_n_checked << ", all k, both variants: "
            << report.cases_checked << " cases agree\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact counting and enumeration of permutations avoiding k-shift successions"};
  app.require_subcommand(1);

  int n = 0;
  int k = 0;
  int max_n = 0;
  bool modular = false;
  std::optional<std::uint64_t> limit;
  std::string kind = "linear";
  std::string format = "text";

  CLI::App* count = app.add_subcommand("count", "count the avoiding permutations exactly");
  count->add_option("--n", n, "permutation length")->required();
  count->add_option("--k", k, "shift")->required();
  count->add_flag("--modular", modular, "forbid j(j+k) mod n for every j (default: linear)");

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "list the avoiding permutations in lexicographic order");
  enumerate->add_option("--n", n, "permutation length")->required();
  enumerate->add_option("--k", k, "shift")->required();
  enumerate->add_flag("--modular", modular, "use the modular edge set");
  enumerate->add_option("--limit", limit, "stop after this many permutations");

  CLI::App* cycles =
      app.add_subcommand("cycles", "cycle structure of the k-th power of the n-cycle");
  cycles->add_option("--n", n, "permutation length")->required();
  cycles->add_option("--k", k, "shift")->required();

  CLI::App* table = app.add_subcommand("table", "print a count or cycle table");
  table->add_option("--kind", kind, "linear | modular | cycles")
      ->required()
      ->check(CLI::IsMember({"linear", "modular", "cycles"}));
  table->add_option("--max-n", max_n, "largest n")->required();
  table->add_option("--format", format, "text | csv | json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  CLI::App* verify =
      app.add_subcommand("verify", "cross-check formulas against brute-force enumeration");
  verify->add_option("--max-n", max_n, "largest n to sweep (clamped to the guard)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return 2;
  }

  try {
    if (count->parsed()) return run_count(n, k, modular);
    if (enumerate->parsed()) return run_enumerate(n, k, modular, limit, guard_from_environment());
    if (cycles->parsed()) return run_cycles(n, k);
    if (table->parsed()) return run_table(kind, max_n, format);
    if (verify->parsed()) return run_verify(max_n, guard_from_environment());
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << '\n';
    return 2;
  }
  return 0;
}
