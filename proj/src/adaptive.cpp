#include "compact64/adaptive.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace compact64 {

namespace {

std::vector<SchemePtr> all_builtins() {
  std::vector<SchemePtr> v;
  v.reserve(builtin_names().size());
  for (const auto name : builtin_names()) v.push_back(builtin_scheme(name));
  return v;
}

}  // namespace

AdaptiveVector::AdaptiveVector() : AdaptiveVector(all_builtins()) {}

AdaptiveVector::AdaptiveVector(std::vector<SchemePtr> registry)
    : candidates_(std::move(registry)) {
  // Active scheme = front; smallest direct table reads fastest (it is the
  // one most likely to stay cache-resident).
  std::sort(candidates_.begin(), candidates_.end(),
            [](const SchemePtr& a, const SchemePtr& b) {
              const auto ab = a->stats().direct_bytes;
              const auto bb = b->stats().direct_bytes;
              return ab != bb ? ab < bb : a->name() < b->name();
            });
  compressed_ = !candidates_.empty();
}

std::vector<SchemePtr> AdaptiveVector::surviving(double v) const {
  std::vector<SchemePtr> keep;
  keep.reserve(candidates_.size());
  for (const auto& s : candidates_)
    if (s->encode_checked(v)) keep.push_back(s);
  return keep;
}

void AdaptiveVector::decay() {
  doubles_.reserve(words_.size());
  const SchemePtr& prev = candidates_.front();
  for (const std::uint32_t w : words_) doubles_.push_back(prev->decode(w));
  words_.clear();
  words_.shrink_to_fit();
  candidates_.clear();
  compressed_ = false;
}

void AdaptiveVector::push(double v) {
  if (compressed_) {
    std::vector<SchemePtr> keep = surviving(v);
    if (!keep.empty()) {
      candidates_ = std::move(keep);
      words_.push_back(upper32(v));
#ifndef NDEBUG
      for (const auto& s : candidates_)
        assert(same_bits(s->decode(words_.back()), v));
#endif
      return;
    }
    decay();
  }
  doubles_.push_back(v);
}

void AdaptiveVector::set(std::size_t i, double v) {
  if (i >= size()) throw std::out_of_range("AdaptiveVector::set");
  if (compressed_) {
    std::vector<SchemePtr> keep = surviving(v);
    if (!keep.empty()) {
      candidates_ = std::move(keep);
      words_[i] = upper32(v);
      return;
    }
    decay();
  }
  doubles_[i] = v;
}

double AdaptiveVector::get(std::size_t i) const {
  if (i >= size()) throw std::out_of_range("AdaptiveVector::get");
  if (compressed_) return candidates_.front()->decode(words_[i]);
  return doubles_[i];
}

std::size_t AdaptiveVector::size() const noexcept {
  return compressed_ ? words_.size() : doubles_.size();
}

std::size_t AdaptiveVector::payload_bytes() const noexcept {
  return compressed_ ? 4 * words_.size() : 8 * doubles_.size();
}

const SchemePtr& AdaptiveVector::active() const {
  if (!compressed_) throw Error("vector has decayed to plain doubles");
  return candidates_.front();
}

}  // namespace compact64
