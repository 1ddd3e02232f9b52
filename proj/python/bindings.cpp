// Python bindings for the compact64 library: scheme design and lookup-table
// codecs, the 32-bit decimal baseline, the streaming kernels, the adaptive
// vector, and the catalogue verification and benchmark entry points.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "compact64/adaptive.hpp"
#include "compact64/bench.hpp"
#include "compact64/codec.hpp"
#include "compact64/decfloat.hpp"
#include "compact64/designer.hpp"
#include "compact64/kernels.hpp"
#include "compact64/valueset.hpp"

namespace py = pybind11;
namespace c64 = compact64;

namespace {

// Value wrapper: SchemeHandle lives behind shared_ptr<const ...>, which the
// default holder cannot own, so the Python class carries the pointer.
struct Scheme {
  c64::SchemePtr p;
};

std::vector<c64::DigitPattern> parse_patterns(
    const std::vector<std::string>& texts) {
  std::vector<c64::DigitPattern> out;
  out.reserve(texts.size());
  for (const std::string& t : texts) out.emplace_back(t);
  return out;
}

Scheme design(const std::vector<std::string>& patterns, int m, int e, int f,
              bool negations, bool na, bool allow_large, std::string name) {
  const auto ps = parse_patterns(patterns);
  c64::DirectTable table;
  {
    py::gil_scoped_release release;
    const c64::ValueSet set =
        c64::expand_patterns(ps, {.negations = negations, .with_na = na});
    table = c64::design_table({m, e, f}, set, allow_large);
  }
  return {c64::SchemeHandle::make(std::move(name), std::move(table))};
}

std::optional<int> search_min_m(const std::vector<std::string>& patterns,
                                int e, int f, int m_max, bool negations,
                                bool na, bool allow_large) {
  const auto ps = parse_patterns(patterns);
  py::gil_scoped_release release;
  const c64::ValueSet set =
      c64::expand_patterns(ps, {.negations = negations, .with_na = na});
  const auto found = c64::search_min_m(set, e, f, m_max, allow_large);
  if (!found) return std::nullopt;
  return found->m;
}

py::dict stats_dict(const c64::SchemeStats& s) {
  py::dict d;
  d["table_entries"] = s.table_entries;
  d["used_entries"] = s.used_entries;
  d["distinct_entries"] = s.distinct_entries;
  d["direct_bytes"] = s.direct_bytes;
  d["indirect_bytes"] = s.indirect_bytes;
  return d;
}

c64::DecodePath parse_path(const std::string& path) {
  if (path == "direct") return c64::DecodePath::direct;
  if (path == "indirect") return c64::DecodePath::indirect;
  throw c64::Error("unknown decode path \"" + path +
                   "\" (expected direct or indirect)");
}

py::dict bench(const std::string& op, const py::object& scheme,
               const std::string& path, int dist, std::size_t n, int reps,
               std::uint64_t seed) {
  c64::BenchSpec spec;
  const auto parsed = c64::parse_op(op);
  if (!parsed) throw c64::Error("unknown op \"" + op + "\"");
  spec.op = *parsed;
  spec.dist = dist;
  spec.n = n;
  spec.reps = reps;
  spec.seed = seed;
  if (scheme.is_none()) {
    spec.rep.kind = c64::Representation::Kind::plain;
  } else if (py::isinstance<py::str>(scheme)) {
    const auto name = scheme.cast<std::string>();
    if (name == "plain" || name == "none") {
      spec.rep.kind = c64::Representation::Kind::plain;
    } else if (name == "decimal") {
      spec.rep.kind = c64::Representation::Kind::decimal;
    } else {
      spec.rep = {c64::Representation::Kind::compact,
                  c64::builtin_scheme(name), parse_path(path)};
    }
  } else {
    spec.rep = {c64::Representation::Kind::compact,
                scheme.cast<const Scheme&>().p, parse_path(path)};
  }

  c64::BenchReport report;
  {
    py::gil_scoped_release release;
    report = c64::run_bench(spec);
  }
  py::dict d;
  d["op"] = c64::op_name(report.spec.op);
  d["repr"] = report.spec.rep.label();
  d["dist"] = report.spec.dist;
  d["n"] = report.spec.n;
  d["reps"] = report.spec.reps;
  d["seed"] = report.spec.seed;
  d["seconds"] = report.seconds;
  d["checksum"] = report.checksum;
  d["checksum_ok"] = report.checksum_ok;
  return d;
}

py::list verify_tables_py() {
  std::vector<c64::RowCheck> rows;
  {
    py::gil_scoped_release release;
    rows = c64::verify_tables();
  }
  py::list out;
  for (const c64::RowCheck& row : rows) {
    py::dict d;
    d["scheme"] = row.name;
    d["measured"] = stats_dict(row.measured);
    d["ref_entries"] = row.ref_entries;
    d["ref_distinct"] = row.ref_distinct;
    d["ref_direct_bytes"] = row.ref_direct_bytes;
    d["ref_indirect_bytes"] = row.ref_indirect_bytes;
    d["ok"] = row.ok;
    d["flagged"] = row.flagged;
    d["note"] = row.note;
    out.append(d);
  }
  return out;
}

template <class Kernel>
std::vector<double> run_into(std::size_t n, Kernel&& k) {
  std::vector<double> out(n);
  k(std::span<double>(out));
  return out;
}

}  // namespace

PYBIND11_MODULE(_compact64, m) {
  m.doc() =
      "Table-compacted 32-bit storage for binary64 subsets: scheme design, "
      "encode/decode, a decimal baseline, bit-reproducible streaming "
      "kernels, and catalogue verification.";

  // Exception hierarchy. Specific types registered after the base so their
  // translators are tried first.
  auto error = py::register_exception<c64::Error>(m, "Error");
  py::register_exception<c64::PatternError>(m, "PatternError", error);
  py::register_exception<c64::ConflictError>(m, "ConflictError", error);
  py::register_exception<c64::TooManyDistinctError>(m, "TooManyDistinctError",
                                                    error);
  py::register_exception<c64::TableTooLargeError>(m, "TableTooLargeError",
                                                  error);
  py::register_exception<c64::TableFormatError>(m, "TableFormatError", error);
  py::register_exception<c64::EncodeError>(m, "EncodeError", error);

  // --- bit-level helpers ---------------------------------------------------
  m.def("na_value", &c64::na_value, "The NA sentinel (a tagged NaN).");
  m.def("is_na", &c64::is_na, py::arg("v"),
        "True exactly for the NA bit pattern.");
  m.def("bits_of", &c64::bits_of, py::arg("v"),
        "The 64-bit pattern of a double.");
  m.def("value_of", py::overload_cast<std::uint64_t>(&c64::value_of),
        py::arg("bits"), "The double with the given 64-bit pattern.");
  m.def("upper32", &c64::upper32, py::arg("v"),
        "Upper half of the bit pattern — the compact word.");
  m.def("lower32", &c64::lower32, py::arg("v"),
        "Lower half of the bit pattern — what the tables reconstruct.");
  m.def("recompose", &c64::recompose, py::arg("upper"), py::arg("lower"),
        "The double whose halves are (upper, lower).");

  // --- schemes ---------------------------------------------------------------
  py::class_<Scheme>(m, "Scheme",
                     "A designed lookup-table codec: 32-bit words are the "
                     "upper halves of doubles; the table restores the rest.")
      .def_property_readonly("name",
                             [](const Scheme& s) { return s.p->name(); })
      .def_property_readonly("m",
                             [](const Scheme& s) { return s.p->config().m; })
      .def_property_readonly("e",
                             [](const Scheme& s) { return s.p->config().e; })
      .def_property_readonly("f",
                             [](const Scheme& s) { return s.p->config().f; })
      .def_property_readonly(
          "has_indirect", [](const Scheme& s) { return s.p->has_indirect(); })
      .def("stats", [](const Scheme& s) { return stats_dict(s.p->stats()); })
      .def(
          "encode_checked",
          [](const Scheme& s, double v) { return s.p->encode_checked(v); },
          py::arg("v"),
          "The word for v, or None when the scheme cannot restore v.")
      .def(
          "encode_unchecked",
          [](const Scheme& s, double v) { return s.p->encode_unchecked(v); },
          py::arg("v"), "The upper half of v, unverified.")
      .def(
          "decode",
          [](const Scheme& s, std::uint32_t w, const std::string& path) {
            return s.p->decode(w, parse_path(path));
          },
          py::arg("word"), py::arg("path") = "direct",
          "The double the word denotes under this scheme (total: every "
          "32-bit word decodes to something).")
      .def(
          "contains",
          [](const Scheme& s, double v) {
            return s.p->encode_checked(v).has_value();
          },
          py::arg("v"), "Whether v survives an encode/decode round trip.")
      .def("__repr__", [](const Scheme& s) {
        const auto& c = s.p->config();
        return "<Scheme " + s.p->name() + " (m=" + std::to_string(c.m) +
               ", e=" + std::to_string(c.e) + ", f=" + std::to_string(c.f) +
               ")>";
      });

  m.def("builtin_names", [] {
    std::vector<std::string> out;
    for (const auto name : c64::builtin_names()) out.emplace_back(name);
    return out;
  });
  m.def(
      "builtin_scheme",
      [](const std::string& name) { return Scheme{c64::builtin_scheme(name)}; },
      py::arg("name"), "One of the ten catalogued schemes, A-F or W-Z.");
  m.def("design", &design, py::arg("patterns"), py::arg("m"),
        py::arg("e") = 0, py::arg("f") = 0, py::arg("negations") = true,
        py::arg("na") = true, py::arg("allow_large") = false,
        py::arg("name") = "custom",
        "Expand digit patterns and design a table at (m, e, f); raises "
        "ConflictError when two members need different words in one slot.");
  m.def("search_min_m", &search_min_m, py::arg("patterns"), py::arg("e") = 0,
        py::arg("f") = 0, py::arg("m_max") = 20, py::arg("negations") = true,
        py::arg("na") = true, py::arg("allow_large") = false,
        "Smallest feasible m for the patterns, or None.");
  m.def(
      "load_scheme",
      [](const std::string& path) { return Scheme{c64::scheme_from_file(path)}; },
      py::arg("path"), "Load a table file (direct or indirect) as a scheme.");
  m.def(
      "save_scheme",
      [](const Scheme& s, const std::string& path, bool indirect) {
        if (indirect) {
          c64::save_table(path, s.p->indirect());
        } else {
          c64::save_table(path, s.p->direct());
        }
      },
      py::arg("scheme"), py::arg("path"), py::arg("indirect") = false,
      "Write the scheme's table to a file.");

  // --- decimal baseline ---------------------------------------------------
  m.def("dec_encode", &c64::dec_encode, py::arg("v"),
        "Canonical 32-bit decimal word for v, or None.");
  m.def("dec_decode", &c64::dec_decode, py::arg("word"),
        "The double a decimal word denotes (mantissa / 10**p).");
  m.attr("DEC_NA_WORD") = c64::kDecNaWord;

  // --- vectors and kernels --------------------------------------------------
  py::class_<c64::NumericVector>(
      m, "NumericVector",
      "An immutable vector in one representation: plain doubles, compact "
      "scheme words, or decimal words.")
      .def_static(
          "plain",
          [](std::vector<double> values) {
            return c64::NumericVector::plain(std::move(values));
          },
          py::arg("values"))
      .def_static(
          "compact",
          [](const std::vector<double>& values, const Scheme& s,
             const std::string& path) {
            return c64::NumericVector::compact(values, s.p, parse_path(path));
          },
          py::arg("values"), py::arg("scheme"), py::arg("path") = "direct",
          "Encode under the scheme; raises EncodeError naming the first "
          "element that does not round-trip.")
      .def_static(
          "decimal",
          [](const std::vector<double>& values) {
            return c64::NumericVector::decimal(values);
          },
          py::arg("values"))
      .def("__len__", &c64::NumericVector::size)
      .def("__getitem__",
           [](const c64::NumericVector& v, std::size_t i) {
             if (i >= v.size()) throw py::index_error();
             return v.get(i);
           })
      .def_property_readonly("payload_bytes",
                             &c64::NumericVector::payload_bytes)
      .def_property_readonly("repr_name", &c64::NumericVector::repr_name);

  m.def(
      "copy",
      [](const c64::NumericVector& a) {
        return run_into(a.size(), [&](auto out) { c64::nv_copy(a, out); });
      },
      py::arg("a"), "Decode every element.");
  m.def(
      "sum", [](const c64::NumericVector& a) { return c64::nv_sum(a); },
      py::arg("a"), "Left-to-right sum (fixed order: bit-reproducible).");
  m.def(
      "scale",
      [](const c64::NumericVector& a) {
        return run_into(a.size(), [&](auto out) { c64::nv_scale(a, out); });
      },
      py::arg("a"), "Multiply each element by the pinned scale factor.");
  m.def(
      "add",
      [](const c64::NumericVector& a, const c64::NumericVector& b) {
        return run_into(a.size(),
                        [&](auto out) { c64::nv_add(a, b, out); });
      },
      py::arg("a"), py::arg("b"), "Elementwise a + b.");
  m.def(
      "lincomb",
      [](const c64::NumericVector& a, const c64::NumericVector& b,
         const c64::NumericVector& c) {
        return run_into(a.size(),
                        [&](auto out) { c64::nv_lincomb(a, b, c, out); });
      },
      py::arg("a"), py::arg("b"), py::arg("c"),
      "Fixed-coefficient linear combination with pinned evaluation order.");
  m.attr("SCALE_FACTOR") = c64::kScaleFactor;
  m.attr("LIN_COEF") =
      py::make_tuple(c64::kLinCoef[0], c64::kLinCoef[1], c64::kLinCoef[2]);

  // --- adaptive vector ---------------------------------------------------
  py::class_<c64::AdaptiveVector>(
      m, "AdaptiveVector",
      "Mutable vector that stores 32-bit words while any candidate scheme "
      "still decodes every element, then decays to plain doubles for good.")
      .def(py::init<>())
      .def(py::init([](const std::vector<Scheme>& registry) {
             std::vector<c64::SchemePtr> ptrs;
             ptrs.reserve(registry.size());
             for (const Scheme& s : registry) ptrs.push_back(s.p);
             return c64::AdaptiveVector(std::move(ptrs));
           }),
           py::arg("registry"))
      .def("push", &c64::AdaptiveVector::push, py::arg("v"))
      .def("set", &c64::AdaptiveVector::set, py::arg("i"), py::arg("v"))
      .def("get", &c64::AdaptiveVector::get, py::arg("i"))
      .def("__len__", &c64::AdaptiveVector::size)
      .def("__getitem__",
           [](const c64::AdaptiveVector& v, std::size_t i) {
             return v.get(i);  // throws std::out_of_range -> IndexError
           })
      .def_property_readonly("compressed", &c64::AdaptiveVector::compressed)
      .def_property_readonly("payload_bytes",
                             &c64::AdaptiveVector::payload_bytes)
      .def("candidates",
           [](const c64::AdaptiveVector& v) {
             std::vector<Scheme> out;
             for (const c64::SchemePtr& p : v.candidates())
               out.push_back(Scheme{p});
             return out;
           })
      .def("active",
           [](const c64::AdaptiveVector& v) { return Scheme{v.active()}; });

  // --- benchmark protocol ---------------------------------------------------
  m.def("gen_data", &c64::gen_data, py::arg("dist"), py::arg("n"),
        py::arg("seed"),
        py::call_guard<py::gil_scoped_release>(),
        "Seeded six-digit decimal test data (dist 1 or 2).");
  m.def("bench", &bench, py::arg("op") = "sum", py::arg("scheme") = py::none(),
        py::arg("path") = "direct", py::arg("dist") = 1,
        py::arg("n") = std::size_t{3'000'000}, py::arg("reps") = 100,
        py::arg("seed") = std::uint64_t{1},
        "Time one kernel under one representation; the checksum is compared "
        "against the plain path.");
  m.def("verify_tables", &verify_tables_py,
        "Re-design the ten built-ins and compare against the reference "
        "catalogue; the two documented errata report as flagged, not ok.");
  m.def(
      "verify_ok",
      [] {
        std::vector<c64::RowCheck> rows;
        py::gil_scoped_release release;
        rows = c64::verify_tables();
        return c64::verify_ok(rows);
      },
      "True when every catalogue row is ok or a verified documented flag.");
  m.def(
      "verify_report",
      [](const std::string& format) {
        const auto fmt = c64::parse_format(format);
        if (!fmt) throw c64::Error("unknown format \"" + format + "\"");
        std::vector<c64::RowCheck> rows;
        {
          py::gil_scoped_release release;
          rows = c64::verify_tables();
        }
        return c64::format_row_checks(rows, *fmt);
      },
      py::arg("format") = "table", "The verification table as text.");
}
