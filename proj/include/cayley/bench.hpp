#pragma once

// Doubling-ladder timing of find_subgroup.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace cayley::bench {

enum class Family { cyclic, mixed };

std::string_view to_string(Family family);
std::optional<Family> parse_family(std::string_view name);

struct Options {
  std::size_t min_n = 256;
  std::size_t max_n = 2048;
  Family family = Family::mixed;
  unsigned repeats = 1;
  /// Ladder points whose table would exceed this many entries are refused.
  std::size_t max_table_entries = std::size_t{1} << 26;
  /// Each timing sample repeats the call until at least this much time has
  /// passed and reports the mean per call.
  double min_sample_seconds = 0.02;
};

struct Row {
  std::size_t n = 0;
  std::uint64_t m = 0;
  double wall_time = 0;         // seconds per find_subgroup call (median)
  double table_build_time = 0;  // seconds
};

struct Report {
  Family family = Family::mixed;
  std::vector<Row> rows;
  /// Least-squares slope of log(wall_time) against log(n); absent with
  /// fewer than two rows.
  std::optional<double> fitted_exponent;
};

/// Invariant factors for the mixed family: for each prime p^e of n, up to
/// three factors p followed by the remaining p-power.
std::vector<std::uint64_t> mixed_invariants(std::uint64_t n);

/// Throws ParameterOutOfRange (min_n < 64, empty ladder, repeats == 0) and
/// OutOfMemoryBudget before timing anything.
Report run(const Options& options);

std::optional<double> fit_exponent(std::span<const Row> rows);

/// Columns: n, wall_time_s, family, m.
void write_csv(std::ostream& out, const Report& report);

}  // namespace cayley::bench
