#include "cayley/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <string>

#include "cayley/find_subgroup.hpp"
#include "cayley/testkit.hpp"

namespace cayley::bench {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double median(std::vector<double> v) {
  std::nth_element(v.begin(), v.begin() + v.size() / 2, v.end());
  return v[v.size() / 2];
}

// Median single-call time over as many calls as fit in min_seconds.
double time_find(const CayleyTable& t, std::uint64_t m, double min_seconds) {
  std::vector<double> calls;
  const auto start = Clock::now();
  do {
    const auto call_start = Clock::now();
    const auto size = find_subgroup(t, m).size();
    calls.push_back(seconds_since(call_start));
    if (size != m) {
      throw GroupError(ErrorKind::InternalExhaustion,
                       "benchmark produced a subgroup of the wrong order");
    }
  } while (seconds_since(start) < min_seconds);
  return median(std::move(calls));
}

}  // namespace

std::string_view to_string(Family family) {
  return family == Family::cyclic ? "cyclic" : "mixed";
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "cyclic") return Family::cyclic;
  if (name == "mixed") return Family::mixed;
  return std::nullopt;
}

std::vector<std::uint64_t> mixed_invariants(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (const auto& [p, e] : factorize(n).factors) {
    unsigned left = e;
    for (int i = 0; i < 3 && left > 1; ++i, --left) out.push_back(p);
    std::uint64_t rest = 1;
    for (unsigned i = 0; i < left; ++i) rest *= p;
    out.push_back(rest);
  }
  return out;
}

std::optional<double> fit_exponent(std::span<const Row> rows) {
  if (rows.size() < 2) return std::nullopt;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& r : rows) {
    const double x = std::log(static_cast<double>(r.n));
    const double y = std::log(r.wall_time);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double k = static_cast<double>(rows.size());
  const double denom = k * sxx - sx * sx;
  if (denom == 0) return std::nullopt;
  return (k * sxy - sx * sy) / denom;
}

Report run(const Options& options) {
  if (options.min_n < 64) {
    throw GroupError(ErrorKind::ParameterOutOfRange, "min-n must be >= 64");
  }
  if (options.max_n < options.min_n) {
    throw GroupError(ErrorKind::ParameterOutOfRange,
                     "max-n must be >= min-n");
  }
  if (options.repeats == 0) {
    throw GroupError(ErrorKind::ParameterOutOfRange, "repeats must be >= 1");
  }
  std::vector<std::size_t> ladder;
  for (std::size_t n = options.min_n; n <= options.max_n; n *= 2) {
    if (n * n > options.max_table_entries) {
      throw GroupError(ErrorKind::OutOfMemoryBudget,
                       "n = " + std::to_string(n) + " needs " +
                           std::to_string(n * n) + " table entries, cap is " +
                           std::to_string(options.max_table_entries));
    }
    ladder.push_back(n);
  }

  Report report;
  report.family = options.family;
  for (std::size_t n : ladder) {
    Row row;
    row.n = n;
    const auto build_start = Clock::now();
    const CayleyTable t =
        options.family == Family::cyclic
            ? testkit::build_cyclic(n)
            : testkit::build_abelian(mixed_invariants(n));
    row.table_build_time = seconds_since(build_start);
    // Largest proper divisor.
    row.m = n / factorize(n).factors.begin()->first;

    std::vector<double> samples;
    for (unsigned i = 0; i < options.repeats; ++i)
      samples.push_back(time_find(t, row.m, options.min_sample_seconds));
    row.wall_time = median(std::move(samples));
    report.rows.push_back(row);
  }
  report.fitted_exponent = fit_exponent(report.rows);
  return report;
}

void write_csv(std::ostream& out, const Report& report) {
  out << "n,wall_time_s,family,m\n";
  for (const auto& r : report.rows) {
    out << r.n << ',' << r.wall_time << ',' << to_string(report.family) << ','
        << r.m << '\n';
  }
}

}  // namespace cayley::bench
