#include "compact64/bench.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include "compact64/kernels.hpp"

namespace compact64 {

std::vector<double> gen_data(int dist, std::size_t n, std::uint64_t seed) {
  if (dist != 1 && dist != 2)
    throw Error("distribution must be 1 or 2, got " + std::to_string(dist));
  // Fractional digit counts: dist 1 is ddd.ddd; dist 2 cycles
  // dd.dddd, ddd.ddd, dddd.dd. Six digits either way, filled in text order.
  static constexpr int kFrac2[3] = {4, 3, 2};
  std::vector<double> out;
  out.reserve(n);
  SplitMix64 rng{seed};
  for (std::size_t k = 0; k < n; ++k) {
    std::uint64_t digits = 0;
    for (int i = 0; i < 6; ++i) digits = digits * 10 + rng.next() % 10;
    const int frac = dist == 1 ? 3 : kFrac2[k % 3];
    out.push_back(decimal_value(digits, frac));
  }
  return out;
}

const char* op_name(Op op) {
  switch (op) {
    case Op::copy: return "copy";
    case Op::sum: return "sum";
    case Op::scale: return "scale";
    case Op::add: return "add";
    case Op::lincomb: return "lincomb";
  }
  return "?";
}

std::optional<Op> parse_op(std::string_view name) {
  for (const Op op : {Op::copy, Op::sum, Op::scale, Op::add, Op::lincomb})
    if (name == op_name(op)) return op;
  return std::nullopt;
}

std::string Representation::label() const {
  switch (kind) {
    case Kind::plain: return "plain";
    case Kind::decimal: return "decimal";
    case Kind::compact:
      return (scheme ? scheme->name() : std::string("?")) +
             (path == DecodePath::direct ? "/direct" : "/indirect");
  }
  return "?";
}

namespace {

int operand_count(Op op) {
  switch (op) {
    case Op::add: return 2;
    case Op::lincomb: return 3;
    default: return 1;
  }
}

std::uint64_t xor_bits(std::span<const double> values) {
  std::uint64_t x = 0;
  for (const double v : values) x ^= bits_of(v);
  return x;
}

// Runs the kernel `reps` times over encoded operands; returns the XOR
// checksum of the final outputs, or nullopt when reps == 0.
std::optional<std::uint64_t> run_kernel(Op op,
                                        std::span<const NumericVector> in,
                                        int reps, std::size_t n,
                                        std::vector<double>& out,
                                        double* seconds) {
  if (op != Op::sum) out.assign(n, 0.0);
  if (reps == 0) {
    // Nothing ran: exactly zero seconds, no checksum.
    if (seconds != nullptr) *seconds = 0.0;
    return std::nullopt;
  }
  double sum = 0.0;
  const auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) {
    switch (op) {
      case Op::copy: nv_copy(in[0], out); break;
      case Op::sum: sum = nv_sum(in[0]); break;
      case Op::scale: nv_scale(in[0], out); break;
      case Op::add: nv_add(in[0], in[1], out); break;
      case Op::lincomb: nv_lincomb(in[0], in[1], in[2], out); break;
    }
  }
  const auto t1 = std::chrono::steady_clock::now();
  if (seconds != nullptr)
    *seconds = std::chrono::duration<double>(t1 - t0).count();
  if (reps == 0) return std::nullopt;
  if (op == Op::sum) return bits_of(sum);
  return xor_bits(out);
}

}  // namespace

BenchReport run_bench(const BenchSpec& spec) {
  if (spec.reps < 0) throw Error("reps must be >= 0");
  if (spec.rep.kind == Representation::Kind::compact && !spec.rep.scheme)
    throw Error("compact representation needs a scheme");

  // The catalogued exclusion: scheme C cannot represent all dist-2 values,
  // so that combination is rejected up front rather than left to chance on
  // whichever elements a particular seed draws.
  if (spec.dist == 2 && spec.rep.kind == Representation::Kind::compact &&
      spec.rep.scheme->name() == "C")
    throw Error(
        "scheme C cannot represent distribution 2 values; use dist 1");

  // Generation and encoding happen before anything is timed. Operand j of a
  // multi-input kernel is seeded seed + j.
  const int nin = operand_count(spec.op);
  std::vector<std::vector<double>> data;
  data.reserve(nin);
  for (int j = 0; j < nin; ++j)
    data.push_back(gen_data(spec.dist, spec.n, spec.seed + j));

  std::vector<NumericVector> plain_in, bench_in;
  for (int j = 0; j < nin; ++j) {
    plain_in.push_back(NumericVector::plain(data[j]));
    switch (spec.rep.kind) {
      case Representation::Kind::plain:
        bench_in.push_back(NumericVector::plain(std::move(data[j])));
        break;
      case Representation::Kind::compact:
        bench_in.push_back(NumericVector::compact(data[j], spec.rep.scheme,
                                                  spec.rep.path));
        break;
      case Representation::Kind::decimal:
        bench_in.push_back(NumericVector::decimal(data[j]));
        break;
    }
  }

  BenchReport report;
  report.spec = spec;
  std::vector<double> out;
  report.checksum =
      run_kernel(spec.op, bench_in, spec.reps, spec.n, out, &report.seconds);
  if (spec.rep.kind == Representation::Kind::plain) {
    report.plain_checksum = report.checksum;
  } else {
    std::vector<double> ref_out;
    report.plain_checksum = run_kernel(spec.op, plain_in,
                                       spec.reps == 0 ? 0 : 1, spec.n,
                                       ref_out, nullptr);
  }
  report.checksum_ok = report.checksum == report.plain_checksum;
  return report;
}

namespace {

struct ReferenceRow {
  std::string_view name;
  std::size_t entries;
  std::size_t distinct;
  std::size_t direct_bytes;
  std::size_t indirect_bytes;  // 0 = not catalogued (mantissa-only rows)
};

// The catalogue's printed statistics for the ten built-in rows.
constexpr ReferenceRow kReferenceRows[] = {
    {"A", 8, 6, 32, 0},
    {"B", 32, 26, 128, 0},
    {"C", 128, 126, 512, 0},
    {"D", 1024, 626, 4096, 0},
    {"E", 4096, 3126, 16384, 0},
    {"F", 16384, 15626, 65536, 0},
    {"W", 16384, 626, 65536, 35272},
    {"X", 32768, 9435, 131072, 69172},
    {"Y", 131072, 5926, 524288, 285848},
    {"Z", 524288, 15626, 2097152, 1111080},
};

// Documented errata in the reference catalogue (see RowCheck in the
// header). A row is only flagged when the measured table matches the
// erratum's diagnosis exactly; any other deviation is a failure.
struct Erratum {
  std::string_view name;
  std::size_t true_distinct;
  std::size_t true_used;
  std::string_view note;
};

constexpr Erratum kErrata[] = {
    {"X", 909, 9435,
     "reference distinct count 9435 is the used-slot count; measured "
     "distinct is 909, and the reference indirect bytes 69172 equal "
     "2*2^15 + 4*909"},
    {"Z", 18029, 160619,
     "reference counts 15626/1111080 describe the six-significant-digit "
     "subfamily of Z's forms; the full form list measures 18029 distinct "
     "(indirect 1120692)"},
};

}  // namespace

std::vector<RowCheck> verify_tables() {
  std::vector<RowCheck> rows;
  rows.reserve(std::size(kReferenceRows));
  for (const ReferenceRow& ref : kReferenceRows) {
    const BuiltinRow& row = builtin_row(ref.name);
    // Verification designs fresh tables; the memoized/cached handles are
    // deliberately not trusted here.
    const DirectTable table =
        design_table(SchemeConfig{row.m, row.e, row.f}, builtin_set(ref.name));
    RowCheck check;
    check.name = ref.name;
    check.measured = stats_of(table);
    check.ref_entries = ref.entries;
    check.ref_distinct = ref.distinct;
    check.ref_direct_bytes = ref.direct_bytes;
    if (ref.indirect_bytes != 0) check.ref_indirect_bytes = ref.indirect_bytes;

    const bool base_ok = check.measured.table_entries == ref.entries &&
                         check.measured.direct_bytes == ref.direct_bytes;
    const bool distinct_ok = check.measured.distinct_entries == ref.distinct;
    const bool indirect_ok =
        ref.indirect_bytes == 0 ||
        check.measured.indirect_bytes == ref.indirect_bytes;

    check.ok = base_ok && distinct_ok && indirect_ok;
    if (!check.ok && base_ok) {
      for (const Erratum& erratum : kErrata) {
        if (erratum.name != ref.name) continue;
        if (check.measured.distinct_entries == erratum.true_distinct &&
            check.measured.used_entries == erratum.true_used) {
          check.flagged = true;
          check.note = erratum.note;
        }
      }
    }
    rows.push_back(std::move(check));
  }
  return rows;
}

bool verify_ok(const std::vector<RowCheck>& rows) {
  for (const RowCheck& row : rows)
    if (!row.ok && !row.flagged) return false;
  return true;
}

std::optional<ReportFormat> parse_format(std::string_view name) {
  if (name == "table") return ReportFormat::table;
  if (name == "csv") return ReportFormat::csv;
  if (name == "md") return ReportFormat::md;
  return std::nullopt;
}

namespace {

std::string checksum_text(const std::optional<std::uint64_t>& checksum) {
  if (!checksum) return "-";
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << *checksum;
  return os.str();
}

std::string seconds_text(double seconds) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << seconds;
  return os.str();
}

using Cells = std::vector<std::vector<std::string>>;

std::string render(const Cells& cells, ReportFormat fmt) {
  std::ostringstream os;
  if (fmt == ReportFormat::csv) {
    for (const auto& row : cells) {
      for (std::size_t i = 0; i < row.size(); ++i)
        os << (i ? "," : "") << row[i];
      os << '\n';
    }
    return os.str();
  }
  std::vector<std::size_t> width;
  for (const auto& row : cells) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], row[i].size());
  }
  const bool md = fmt == ReportFormat::md;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    const auto& row = cells[r];
    if (md) os << "|";
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << (md ? " " : i ? "  " : "") << std::left
         << std::setw(static_cast<int>(width[i])) << row[i];
      if (md) os << " |";
    }
    os << '\n';
    if (r == 0 && md) {
      os << "|";
      for (const std::size_t w : width)
        os << " " << std::string(w, '-') << " |";
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace

std::string format_bench_reports(const std::vector<BenchReport>& reports,
                                 ReportFormat fmt) {
  Cells cells;
  cells.push_back({"op", "repr", "dist", "n", "reps", "seed", "seconds",
                   "checksum", "match"});
  for (const BenchReport& r : reports) {
    cells.push_back({op_name(r.spec.op), r.spec.rep.label(),
                     std::to_string(r.spec.dist), std::to_string(r.spec.n),
                     std::to_string(r.spec.reps), std::to_string(r.spec.seed),
                     seconds_text(r.seconds), checksum_text(r.checksum),
                     r.checksum_ok ? "ok" : "MISMATCH"});
  }
  return render(cells, fmt);
}

std::string format_row_checks(const std::vector<RowCheck>& rows,
                              ReportFormat fmt) {
  Cells cells;
  cells.push_back({"scheme", "entries", "ref", "distinct", "ref", "direct",
                   "ref", "indirect", "ref", "status"});
  auto opt = [](const std::optional<std::size_t>& v) {
    return v ? std::to_string(*v) : std::string("-");
  };
  for (const RowCheck& row : rows) {
    cells.push_back({row.name, std::to_string(row.measured.table_entries),
                     std::to_string(row.ref_entries),
                     std::to_string(row.measured.distinct_entries),
                     std::to_string(row.ref_distinct),
                     std::to_string(row.measured.direct_bytes),
                     std::to_string(row.ref_direct_bytes),
                     std::to_string(row.measured.indirect_bytes),
                     opt(row.ref_indirect_bytes),
                     row.ok ? "ok" : row.flagged ? "FLAG" : "FAIL"});
  }
  std::string out = render(cells, fmt);
  for (const RowCheck& row : rows) {
    if (!row.note.empty())
      out += (fmt == ReportFormat::csv ? "# " : "") + row.name + ": " +
             row.note + "\n";
  }
  return out;
}

}  // namespace compact64
