// compact64 — design lookup-table schemes, verify the built-in catalogue,
// generate benchmark data, and time the streaming kernels.

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "compact64/adaptive.hpp"
#include "compact64/bench.hpp"
#include "compact64/codec.hpp"
#include "compact64/kernels.hpp"

namespace c64 = compact64;

namespace {

// Exit codes: 0 success, 1 verification/domain failure, 2 usage error.
constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::string shortest_text(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void print_stats(const c64::SchemeStats& s) {
  std::cout << "table entries:  " << s.table_entries << "\n";
  if (s.used_entries)
    std::cout << "used entries:   " << *s.used_entries << "\n";
  std::cout << "distinct words: " << s.distinct_entries << "\n"
            << "direct bytes:   " << s.direct_bytes << "\n"
            << "indirect bytes: " << s.indirect_bytes << "\n";
}

struct DesignArgs {
  std::string patterns_file;
  std::string output;
  int m = -1, e = -1, f = -1;
  int negations = -1, na = -1;
  bool indirect = false;
  bool search = false;
  bool allow_large = false;
};

int run_design(const DesignArgs& args) {
  c64::PatternSpec spec = c64::load_pattern_spec(args.patterns_file);
  // Command-line flags override file directives.
  if (args.m >= 0) spec.m = args.m;
  if (args.e >= 0) spec.e = args.e;
  if (args.f >= 0) spec.f = args.f;
  if (args.negations >= 0) spec.negations = args.negations != 0;
  if (args.na >= 0) spec.with_na = args.na != 0;
  if (spec.patterns.empty()) {
    std::cerr << "error: no patterns in " << args.patterns_file << "\n";
    return kExitFailure;
  }

  const c64::ValueSet set = c64::expand_patterns(
      spec.patterns, {.negations = spec.negations, .with_na = spec.with_na});
  std::cout << "set members:    " << set.size() << "\n";

  c64::SchemeConfig config{spec.m.value_or(0), spec.e.value_or(0),
                           spec.f.value_or(0)};
  if (args.search) {
    const auto found = c64::search_min_m(set, config.e, config.f, 20,
                                         args.allow_large);
    if (!found) {
      std::cerr << "error: no m in 0..20 designs this set at e=" << config.e
                << ", f=" << config.f << "\n";
      return kExitFailure;
    }
    config = *found;
    std::cout << "smallest m:     " << config.m << "\n";
  } else if (!spec.m) {
    std::cerr << "error: no m given (flag, file directive, or --search)\n";
    return kExitUsage;
  }

  const c64::DirectTable table =
      c64::design_table(config, set, args.allow_large);
  print_stats(c64::stats_of(table));

  if (!args.output.empty()) {
    if (args.indirect) {
      c64::save_table(args.output, c64::build_indirect(table));
    } else {
      c64::save_table(args.output, table);
    }
    std::cout << "wrote " << args.output << " ("
              << std::filesystem::file_size(args.output) << " bytes)\n";
  }
  return kExitOk;
}

struct BenchArgs {
  std::string schemes = "none";
  std::string path = "direct";
  std::string ops = "sum";
  std::string format = "table";
  int dist = 1;
  std::size_t n = 3'000'000;
  int reps = 100;
  std::uint64_t seed = 1;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string::npos ? text.size() : comma;
    if (end > start) out.push_back(text.substr(start, end - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

c64::Representation parse_representation(const std::string& name,
                                         const std::string& path) {
  c64::Representation rep;
  if (name == "none" || name == "plain") {
    rep.kind = c64::Representation::Kind::plain;
    return rep;
  }
  if (name == "decimal") {
    rep.kind = c64::Representation::Kind::decimal;
    return rep;
  }
  rep.kind = c64::Representation::Kind::compact;
  if (path == "direct") {
    rep.path = c64::DecodePath::direct;
  } else if (path == "indirect") {
    rep.path = c64::DecodePath::indirect;
  } else {
    throw c64::Error("unknown decode path \"" + path +
                     "\" (expected direct or indirect)");
  }
  if (name.size() == 1) {
    rep.scheme = c64::builtin_scheme(name);
  } else {
    rep.scheme = c64::scheme_from_file(name);
  }
  return rep;
}

int run_bench_cmd(const BenchArgs& args) {
  const auto fmt = c64::parse_format(args.format);
  if (!fmt) {
    std::cerr << "error: unknown format \"" << args.format << "\"\n";
    return kExitUsage;
  }
  std::vector<c64::Op> ops;
  if (args.ops == "all") {
    ops = {c64::Op::copy, c64::Op::sum, c64::Op::scale, c64::Op::add,
           c64::Op::lincomb};
  } else {
    for (const std::string& name : split_list(args.ops)) {
      const auto op = c64::parse_op(name);
      if (!op) {
        std::cerr << "error: unknown op \"" << name << "\"\n";
        return kExitUsage;
      }
      ops.push_back(*op);
    }
  }

  std::vector<c64::BenchReport> reports;
  for (const std::string& scheme : split_list(args.schemes)) {
    const c64::Representation rep = parse_representation(scheme, args.path);
    for (const c64::Op op : ops) {
      c64::BenchSpec spec;
      spec.op = op;
      spec.dist = args.dist;
      spec.n = args.n;
      spec.reps = args.reps;
      spec.seed = args.seed;
      spec.rep = rep;
      reports.push_back(c64::run_bench(spec));
    }
  }
  std::cout << c64::format_bench_reports(reports, *fmt);
  for (const c64::BenchReport& report : reports) {
    if (!report.checksum_ok) {
      std::cerr << "error: checksum mismatch against the plain path\n";
      return kExitFailure;
    }
  }
  return kExitOk;
}

int run_verify(const std::string& format) {
  const auto fmt = c64::parse_format(format);
  if (!fmt) {
    std::cerr << "error: unknown format \"" << format << "\"\n";
    return kExitUsage;
  }
  const std::vector<c64::RowCheck> rows = c64::verify_tables();
  std::cout << c64::format_row_checks(rows, *fmt);
  if (!c64::verify_ok(rows)) {
    std::cerr << "error: table statistics deviate from the reference "
                 "catalogue beyond the documented flags\n";
    return kExitFailure;
  }
  return kExitOk;
}

int run_info(const std::string& file) {
  const c64::AnyTable loaded = c64::load_table(file);
  if (const auto* direct = std::get_if<c64::DirectTable>(&loaded)) {
    const auto& c = direct->config;
    std::cout << "kind:           direct\n"
              << "m, e, f:        " << c.m << ", " << c.e << ", " << c.f
              << "\n";
    print_stats(c64::stats_of(*direct));
  } else {
    const auto& ind = std::get<c64::IndirectTable>(loaded);
    const auto& c = ind.config;
    std::cout << "kind:           indirect\n"
              << "m, e, f:        " << c.m << ", " << c.e << ", " << c.f
              << "\n"
              << "table entries:  " << ind.index16.size() << "\n"
              << "distinct words: " << ind.values.size() << "\n"
              << "indirect bytes: "
              << 2 * ind.index16.size() + 4 * ind.values.size() << "\n";
  }
  return kExitOk;
}

int run_gen(int dist, std::size_t n, std::uint64_t seed) {
  const std::vector<double> data = c64::gen_data(dist, n, seed);
  std::string out;
  for (const double v : data) {
    out += shortest_text(v);
    out += '\n';
  }
  std::fwrite(out.data(), 1, out.size(), stdout);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"32-bit table-compacted storage of 64-bit floats"};
  app.require_subcommand(1);

  DesignArgs design;
  auto* cmd_design =
      app.add_subcommand("design", "design a table from a pattern file");
  cmd_design->add_option("patterns", design.patterns_file, "pattern-spec file")
      ->required();
  cmd_design->add_option("-m", design.m, "mantissa index bits (0..20)");
  cmd_design->add_option("-e", design.e, "exponent index bits");
  cmd_design->add_option("-f", design.f, "exponent bit offset");
  cmd_design->add_option("--negations", design.negations,
                         "include negations (0|1, overrides file)");
  cmd_design->add_option("--na", design.na,
                         "include the NA value (0|1, overrides file)");
  cmd_design->add_option("-o,--output", design.output, "write a CFT1 file");
  cmd_design->add_flag("--indirect", design.indirect,
                       "write the indirect form");
  cmd_design->add_flag("--search", design.search,
                       "find the smallest feasible m");
  cmd_design->add_flag("--allow-large", design.allow_large,
                       "permit m+e beyond 26 index bits");

  BenchArgs bench;
  auto* cmd_bench = app.add_subcommand("bench", "time kernels");
  cmd_bench->add_option("--scheme", bench.schemes,
                        "comma list: A..Z names, CFT1 paths, none, decimal");
  cmd_bench->add_option("--path", bench.path, "direct|indirect");
  cmd_bench->add_option("--op", bench.ops,
                        "comma list of copy,sum,scale,add,lincomb or 'all'");
  cmd_bench->add_option("--dist", bench.dist, "distribution 1|2");
  cmd_bench->add_option("-n", bench.n, "elements per vector");
  cmd_bench->add_option("--reps", bench.reps, "kernel repetitions");
  cmd_bench->add_option("--seed", bench.seed, "RNG seed");
  cmd_bench->add_option("--format", bench.format, "table|csv|md");

  std::string verify_format = "table";
  auto* cmd_verify = app.add_subcommand(
      "verify", "re-design the built-ins and check catalogue statistics");
  cmd_verify->add_option("--format", verify_format, "table|csv|md");

  std::string info_file;
  auto* cmd_info = app.add_subcommand("info", "describe a CFT1 table file");
  cmd_info->add_option("file", info_file, "table file")->required();

  int gen_dist = 1;
  std::size_t gen_n = 10;
  std::uint64_t gen_seed = 1;
  auto* cmd_gen =
      app.add_subcommand("gen", "print generated data, one number per line");
  cmd_gen->add_option("--dist", gen_dist, "distribution 1|2");
  cmd_gen->add_option("-n", gen_n, "element count");
  cmd_gen->add_option("--seed", gen_seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cmd_design->parsed()) return run_design(design);
    if (cmd_bench->parsed()) return run_bench_cmd(bench);
    if (cmd_verify->parsed()) return run_verify(verify_format);
    if (cmd_info->parsed()) return run_info(info_file);
    if (cmd_gen->parsed()) return run_gen(gen_dist, gen_n, gen_seed);
  } catch (const c64::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
