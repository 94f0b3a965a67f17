#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "mmslab/transport.hpp"

namespace mmscli {

/// 64-bit FNV-1a.
class Fnv1a {
 public:
  void add(const void* data, std::size_t n);
  void add(double v) { add(&v, sizeof v); }
  void add(std::string_view s) { add(s.data(), s.size()); }
  std::uint64_t value() const { return h_; }

 private:
  std::uint64_t h_ = 14695981039346656037ULL;
};

/// Memoized exact W2 solutions in the directory named by MMS_LAB_CACHE,
/// keyed by a hash of the support distances and both measures. No-ops when
/// the variable is unset.
class W2Cache {
 public:
  W2Cache();
  bool enabled() const { return !dir_.empty(); }
  std::string key(const mms::FiniteSpace& space, const mms::Measure& mu0, const mms::Measure& mu1) const;
  std::optional<mms::W2Result> load(const std::string& key, std::size_t points) const;
  void store(const std::string& key, const mms::W2Result& result) const;

 private:
  std::string dir_;
};

}  // namespace mmscli
