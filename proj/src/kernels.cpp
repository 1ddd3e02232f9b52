#include "compact64/kernels.hpp"

namespace compact64 {

NumericVector NumericVector::plain(std::vector<double> values) {
  NumericVector v;
  v.repr_ = Plain{std::move(values)};
  return v;
}

NumericVector NumericVector::compact(std::span<const double> values,
                                     SchemePtr s, DecodePath path) {
  if (!s) throw Error("compact vector needs a scheme");
  if (path == DecodePath::indirect && !s->has_indirect())
    throw Error("scheme " + s->name() + " has no indirect table");
  Compact r;
  r.words.reserve(values.size());
  r.scheme = std::move(s);
  r.path = path;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto w = r.scheme->encode_checked(values[i]);
    if (!w) throw EncodeError(i, bits_of(values[i]),
                              "scheme " + r.scheme->name());
    r.words.push_back(*w);
  }
  NumericVector v;
  v.repr_ = std::move(r);
  return v;
}

NumericVector NumericVector::decimal(std::span<const double> values) {
  Decimal r;
  r.words.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto w = dec_encode(values[i]);
    if (!w) throw EncodeError(i, bits_of(values[i]), "decimal");
    r.words.push_back(*w);
  }
  NumericVector v;
  v.repr_ = std::move(r);
  return v;
}

std::size_t NumericVector::size() const noexcept {
  return std::visit(
      [](const auto& r) -> std::size_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(r)>, Plain>)
          return r.values.size();
        else
          return r.words.size();
      },
      repr_);
}

double NumericVector::get(std::size_t i) const {
  if (i >= size()) throw std::out_of_range("NumericVector::get");
  return visit_source([i](auto src) { return src.load(i); });
}

std::size_t NumericVector::payload_bytes() const noexcept {
  return std::visit(
      [](const auto& r) -> std::size_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(r)>, Plain>)
          return 8 * r.values.size();
        else
          return 4 * r.words.size();
      },
      repr_);
}

const char* NumericVector::repr_name() const noexcept {
  switch (repr_.index()) {
    case 0: return "plain";
    case 1: return "compact";
    default: return "decimal";
  }
}

const NumericVector::Compact* NumericVector::as_compact() const noexcept {
  return std::get_if<Compact>(&repr_);
}

void nv_copy(const NumericVector& a, std::span<double> out) {
  if (out.size() != a.size()) throw Error("output length mismatch");
  a.visit_source([&](auto src) { k_copy(src, out.size(), out.data()); });
}

double nv_sum(const NumericVector& a) {
  return a.visit_source([&](auto src) { return k_sum(src, a.size()); });
}

void nv_scale(const NumericVector& a, std::span<double> out) {
  if (out.size() != a.size()) throw Error("output length mismatch");
  a.visit_source([&](auto src) { k_scale(src, out.size(), out.data()); });
}

void nv_add(const NumericVector& a, const NumericVector& b,
            std::span<double> out) {
  if (a.size() != b.size()) throw Error("input length mismatch");
  if (out.size() != a.size()) throw Error("output length mismatch");
  a.visit_source([&](auto sa) {
    b.visit_source(
        [&](auto sb) { k_add(sa, sb, out.size(), out.data()); });
  });
}

void nv_lincomb(const NumericVector& a, const NumericVector& b,
                const NumericVector& c, std::span<double> out) {
  if (a.size() != b.size() || b.size() != c.size())
    throw Error("input length mismatch");
  if (out.size() != a.size()) throw Error("output length mismatch");
  a.visit_source([&](auto sa) {
    b.visit_source([&](auto sb) {
      c.visit_source(
          [&](auto sc) { k_lincomb(sa, sb, sc, out.size(), out.data()); });
    });
  });
}

}  // namespace compact64
