#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace roaddiv {

/// Deterministic 64-bit generator (splitmix64 core).
///
/// The standard library distributions are implementation-defined, so every
/// draw that must reproduce byte-identically across toolchains goes through
/// this class instead. Child streams are derived with `child(tag)`:
/// child_seed = mix(state_seed ^ fnv1a64(tag)), which keeps independent
/// experiment stages decoupled while everything flows from one master seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t uniform(std::uint64_t bound) { return next_u64() % bound; }

  /// Uniform double in [0, 1).
  double uniform_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double uniform_double(double lo, double hi) { return lo + (hi - lo) * uniform_double(); }

  /// Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform(i));
      std::swap(items[i - 1], items[j]);
    }
  }

  /// k distinct indices drawn without replacement from [0, n).
  std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k);

  /// Derived generator for an independent stream.
  Rng child(std::string_view tag) const;

  static std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    return h;
  }

 private:
  std::uint64_t state_;
};

inline std::vector<std::size_t> Rng::sample_without_replacement(std::size_t n, std::size_t k) {
  // Partial Fisher-Yates over an index vector.
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::vector<std::size_t> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k && i < n; ++i) {
    std::size_t j = i + static_cast<std::size_t>(uniform(n - i));
    std::swap(idx[i], idx[j]);
    out.push_back(idx[i]);
  }
  return out;
}

inline Rng Rng::child(std::string_view tag) const {
  Rng derived(state_ ^ fnv1a64(tag));
  derived.next_u64();  // burn one output so a zero xor does not mirror the parent
  return derived;
}

}  // namespace roaddiv
