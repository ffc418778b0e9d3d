#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace miue {

// Counter-based seeded PRNG (splitmix64 core). Equal seed plus equal call
// sequence gives a bit-identical stream on every platform. split() derives
// an independent child stream from a label or index, so sub-experiments
// (dataset, poison, training, slices) stay reproducible in isolation.
class RngState {
 public:
  explicit RngState(std::uint64_t seed) : state_(mix(seed ^ 0x2545F4914F6CDD1DULL)) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    return mix(z);
  }

  RngState split(std::string_view label) const {
    std::uint64_t h = 0xCBF29CE484222325ULL;  // FNV-1a
    for (char c : label) {
      h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(c));
      h *= 0x100000001B3ULL;
    }
    return RngState(mix(state_ ^ h));
  }

  RngState split(std::uint64_t index) const {
    return RngState(mix(state_ ^ (0x9E3779B97F4A7C15ULL * (index + 1))));
  }

  // Uniform on [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller; the paired value is cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    // u1 in (0, 1] so the log is finite.
    double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  // Fisher-Yates index permutation of size n, written into out.
  template <typename IndexT>
  void permutation(std::size_t n, IndexT* out) {
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<IndexT>(i);
    for (std::size_t i = n; i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(next_u64() % i);
      IndexT tmp = out[i - 1];
      out[i - 1] = out[j];
      out[j] = tmp;
    }
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace miue
