// cayley: validate Cayley tables, find subgroups of a given order,
// enumerate subgroups, generate test groups, and time the search.
//
// Exit codes for `find`: 0 success, 1 invalid table, 2 not abelian,
// 3 m does not divide n, 4 internal failure.

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cayley/abelian.hpp"
#include "cayley/bench.hpp"
#include "cayley/find_subgroup.hpp"
#include "cayley/report.hpp"
#include "cayley/table.hpp"
#include "cayley/testkit.hpp"

namespace {

using namespace cayley;

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kNotAbelian = 2;
constexpr int kNotDivisor = 3;
constexpr int kInternal = 4;

std::optional<CayleyTable> load(const std::string& path) {
  try {
    if (path == "-") return parse_table(std::cin);
    std::ifstream in(path);
    if (!in) {
      std::cerr << "error: cannot open " << path << '\n';
      return std::nullopt;
    }
    return parse_table(in);
  } catch (const GroupError& e) {
    std::cerr << "invalid table: " << e.what() << '\n';
    return std::nullopt;
  }
}

AssociativityMode assoc_mode(const std::string& name) {
  return name == "full" ? AssociativityMode::full : AssociativityMode::light;
}

void print_list(std::ostream& out, const std::vector<ElementId>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? " " : "") << xs[i];
}

int cmd_validate(const std::string& path, const std::string& assoc) {
  const auto t = load(path);
  if (!t) return kInvalid;
  std::cout << "n: " << t->order() << '\n'
            << "identity: " << t->identity() << '\n'
            << "abelian: " << (t->abelian() ? "yes" : "no") << '\n';
  if (auto defect = check_associativity(*t, assoc_mode(assoc))) {
    std::cout << "associative: no (" << assoc << ")\n";
    std::cerr << "invalid table: " << defect->message() << '\n';
    return kInvalid;
  }
  std::cout << "associative: yes (" << assoc << ")\n";
  return kOk;
}

int cmd_find(const std::string& path, std::uint64_t m, bool want_trace,
             bool want_json, const std::string& assoc) {
  const auto t = load(path);
  if (!t) return kInvalid;
  if (auto defect = check_associativity(*t, assoc_mode(assoc))) {
    std::cerr << "invalid table: " << defect->message() << '\n';
    return kInvalid;
  }

  Subgroup h;
  AlgorithmTrace trace;
  try {
    std::tie(h, trace) = find_subgroup_traced(*t, m);
  } catch (const GroupError& e) {
    switch (e.kind()) {
      case ErrorKind::NotAbelianInput:
        std::cerr << "error: find requires an abelian group; this table is "
                     "not commutative\n";
        return kNotAbelian;
      case ErrorKind::NonDivisorOrder:
        std::cerr << "error: " << m << " does not divide the group order "
                  << t->order() << '\n';
        return kNotDivisor;
      default:
        std::cerr << "internal failure: " << e.what() << '\n';
        return kInternal;
    }
  }

  if (auto defect = testkit::verify_subgroup(*t, h, m)) {
    std::cerr << "internal failure: result did not verify: "
              << defect->message() << '\n';
    return kInternal;
  }

  if (want_json) {
    std::cout << find_result_json(t->order(), m, h,
                                  want_trace ? &trace : nullptr)
                     .dump()
              << '\n';
    return kOk;
  }
  std::cout << "subgroup: ";
  print_list(std::cout, h.elements);
  std::cout << "\ngenerators: ";
  print_list(std::cout, h.generators);
  std::cout << '\n';
  if (want_trace) {
    std::cout << "trace:\n";
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
      const auto& s = trace.steps[i];
      std::cout << "  " << i + 1 << ": chose " << s.chosen << ", order "
                << s.cyclic_order << ", " << to_string(s.branch);
      if (s.running_generated_order) {
        std::cout << ", generated order " << *s.running_generated_order;
      }
      std::cout << '\n';
    }
  }
  return kOk;
}

int cmd_enumerate(const std::string& path, bool allow_large) {
  const auto t = load(path);
  if (!t) return kInvalid;
  try {
    for (const auto& h : testkit::enumerate_subgroups(*t, allow_large)) {
      std::cout << h.size() << ": ";
      print_list(std::cout, h.elements);
      std::cout << '\n';
    }
  } catch (const GroupError& e) {
    std::cerr << "error: " << e.what() << " (use --allow-large)\n";
    return kInvalid;
  }
  return kOk;
}

int cmd_gen(const std::string& kind, const std::vector<std::uint64_t>& params,
            std::uint64_t seed) {
  static const std::map<std::string, testkit::GroupKind> kinds = {
      {"cyclic", testkit::GroupKind::cyclic},
      {"product", testkit::GroupKind::direct_product},
      {"abelian", testkit::GroupKind::abelian_invariants},
      {"dihedral", testkit::GroupKind::dihedral},
      {"quaternion", testkit::GroupKind::quaternion},
      {"symmetric", testkit::GroupKind::symmetric},
      {"alternating", testkit::GroupKind::alternating},
      {"random", testkit::GroupKind::random_abelian},
  };
  const auto it = kinds.find(kind);
  if (it == kinds.end()) {
    std::cerr << "error: unknown group kind '" << kind << "'\n";
    return kInvalid;
  }
  try {
    write_table(std::cout, testkit::build({it->second, params, seed}));
  } catch (const GroupError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kOk;
}

int cmd_bench(const bench::Options& options, bool csv) {
  bench::Report report;
  try {
    report = bench::run(options);
  } catch (const GroupError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
  if (csv) {
    bench::write_csv(std::cout, report);
    return kOk;
  }
  std::cout << "family: " << to_string(report.family) << '\n';
  for (const auto& r : report.rows) {
    std::cout << "n=" << r.n << " m=" << r.m << " wall_time_s=" << r.wall_time
              << " table_build_time_s=" << r.table_build_time << '\n';
  }
  std::cout << "fitted_exponent: ";
  if (report.fitted_exponent) {
    std::cout << *report.fitted_exponent << '\n';
  } else {
    std::cout << "absent\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subgroups of prescribed order in Cayley-table groups"};
  app.require_subcommand(1);

  std::string path;
  std::string assoc = "light";
  const auto assoc_check = CLI::IsMember({"full", "light"});

  auto* validate = app.add_subcommand("validate", "Check group axioms");
  validate->add_option("file", path, "Table file ('-' for stdin)")
      ->required();
  validate->add_option("--assoc", assoc, "Associativity check")
      ->check(assoc_check);

  std::uint64_t m = 0;
  bool want_trace = false;
  bool want_json = false;
  auto* find = app.add_subcommand("find", "Find a subgroup of order m");
  find->add_option("file", path, "Table file ('-' for stdin)")->required();
  find->add_option("m", m, "Subgroup order")->required();
  find->add_flag("--trace", want_trace, "Print the decision trace");
  find->add_flag("--json", want_json, "JSON output");
  find->add_option("--assoc", assoc, "Associativity check")
      ->check(assoc_check);

  bool allow_large = false;
  auto* enumerate = app.add_subcommand("enumerate", "List all subgroups");
  enumerate->add_option("file", path, "Table file ('-' for stdin)")
      ->required();
  enumerate->add_flag("--allow-large", allow_large,
                      "Lift the oracle order limit");

  std::string kind;
  std::vector<std::uint64_t> params;
  std::uint64_t seed = 0;
  auto* gen = app.add_subcommand("gen", "Write a group table to stdout");
  gen->add_option("kind", kind,
                  "cyclic | product | abelian | dihedral | quaternion | "
                  "symmetric | alternating | random")
      ->required();
  gen->add_option("params", params, "Group parameters");
  gen->add_option("--seed", seed, "Seed for 'random'");

  bench::Options bench_options;
  std::string family = "mixed";
  bool csv = false;
  auto* bench_cmd = app.add_subcommand("bench", "Time find on a doubling ladder");
  bench_cmd->add_option("--min-n", bench_options.min_n);
  bench_cmd->add_option("--max-n", bench_options.max_n);
  bench_cmd->add_option("--family", family)
      ->check(CLI::IsMember({"cyclic", "mixed"}));
  bench_cmd->add_option("--repeats", bench_options.repeats);
  bench_cmd->add_option("--max-entries", bench_options.max_table_entries,
                        "Refuse tables with more entries");
  bench_cmd->add_option("--min-sample", bench_options.min_sample_seconds,
                        "Minimum seconds per timing sample");
  bench_cmd->add_flag("--csv", csv, "CSV output");

  CLI11_PARSE(app, argc, argv);

  if (*validate) return cmd_validate(path, assoc);
  if (*find) return cmd_find(path, m, want_trace, want_json, assoc);
  if (*enumerate) return cmd_enumerate(path, allow_large);
  if (*gen) return cmd_gen(kind, params, seed);
  bench_options.family = *bench::parse_family(family);
  return cmd_bench(bench_options, csv);
}
