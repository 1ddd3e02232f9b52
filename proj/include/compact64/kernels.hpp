#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "compact64/codec.hpp"
#include "compact64/decfloat.hpp"
#include "compact64/errors.hpp"
#include "compact64/floatbits.hpp"

// The five streaming benchmark kernels, each runnable over plain doubles,
// scheme-compressed words (direct or indirect decode), or decimal words.
// Evaluation order is fixed — left-to-right sums, fixed parenthesization,
// one rounding per operation, no FMA — so outputs are bit-identical across
// representations of the same values.

namespace compact64 {

inline constexpr double kScaleFactor = 123.456789;
inline constexpr double kLinCoef[3] = {1.1, 2.2, 3.3};

// A source is anything with `double load(std::size_t) const`. The kernels
// read each input element exactly once per repetition.

struct PlainSource {
  const double* p;
  double load(std::size_t i) const noexcept { return p[i]; }
};

struct DirectSource {
  const std::uint32_t* words;
  IndexExtractor ix;
  const std::uint32_t* entries;
  double load(std::size_t i) const noexcept {
    const std::uint32_t w = words[i];
    return recompose(w, entries[ix(w)]);
  }
};

struct IndirectSource {
  const std::uint32_t* words;
  IndexExtractor ix;
  const std::uint16_t* index16;
  const std::uint32_t* values;
  double load(std::size_t i) const noexcept {
    const std::uint32_t w = words[i];
    return recompose(w, values[index16[ix(w)]]);
  }
};

struct DecimalSource {
  const std::uint32_t* words;
  double load(std::size_t i) const noexcept { return dec_decode(words[i]); }
};

template <class Src>
void k_copy(Src a, std::size_t n, double* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a.load(i);
}

template <class Src>
double k_sum(Src a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a.load(i);
  return s;
}

template <class Src>
void k_scale(Src a, std::size_t n, double* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = kScaleFactor * a.load(i);
}

template <class A, class B>
void k_add(A a, B b, std::size_t n, double* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a.load(i) + b.load(i);
}

template <class A, class B, class C>
void k_lincomb(A a, B b, C c, std::size_t n, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    double t = kLinCoef[0] * a.load(i);
    t += kLinCoef[1] * b.load(i);
    t += kLinCoef[2] * c.load(i);
    out[i] = t;
  }
}

// A vector in one of the three representations. Compact and decimal vectors
// are built by checked encoding; EncodeError reports the first offending
// element, signalling it must stay uncompressed.
class NumericVector {
 public:
  struct Plain {
    std::vector<double> values;
  };
  struct Compact {
    std::vector<std::uint32_t> words;
    SchemePtr scheme;
    DecodePath path = DecodePath::direct;
  };
  struct Decimal {
    std::vector<std::uint32_t> words;
  };

  static NumericVector plain(std::vector<double> values);
  static NumericVector compact(std::span<const double> values, SchemePtr s,
                               DecodePath path = DecodePath::direct);
  static NumericVector decimal(std::span<const double> values);

  std::size_t size() const noexcept;
  double get(std::size_t i) const;  // decoded element
  std::size_t payload_bytes() const noexcept;
  const char* repr_name() const noexcept;  // "plain", "compact", "decimal"
  const Compact* as_compact() const noexcept;

  template <class Visitor>
  decltype(auto) visit_source(Visitor&& vis) const;

 private:
  std::variant<Plain, Compact, Decimal> repr_;
};

namespace detail {
inline PlainSource source_of(const NumericVector::Plain& r) noexcept {
  return {r.values.data()};
}
inline DecimalSource source_of(const NumericVector::Decimal& r) noexcept {
  return {r.words.data()};
}
// Compact resolves to direct or indirect at the call site (two source
// types), so it is handled inside visit_source.
}  // namespace detail

template <class Visitor>
decltype(auto) NumericVector::visit_source(Visitor&& vis) const {
  return std::visit(
      [&](const auto& r) -> decltype(auto) {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, Compact>) {
          const auto& t = r.scheme->direct();
          if (r.path == DecodePath::direct) {
            return vis(DirectSource{r.words.data(), r.scheme->extractor(),
                                    t.entries.data()});
          }
          const auto& it = r.scheme->indirect();
          return vis(IndirectSource{r.words.data(), r.scheme->extractor(),
                                    it.index16.data(), it.values.data()});
        } else {
          return vis(detail::source_of(r));
        }
      },
      repr_);
}

// Kernel entry points over NumericVector; outputs go to caller-provided
// buffers sized to the input length. Lengths must match for add/lincomb.
void nv_copy(const NumericVector& a, std::span<double> out);
double nv_sum(const NumericVector& a);
void nv_scale(const NumericVector& a, std::span<double> out);
void nv_add(const NumericVector& a, const NumericVector& b,
            std::span<double> out);
void nv_lincomb(const NumericVector& a, const NumericVector& b,
                const NumericVector& c, std::span<double> out);

}  // namespace compact64
