#pragma once

#include <cstdint>
#include <vector>

#include "chaoscover/errors.hpp"

namespace chaoscover {

// All randomness in the project flows through this generator so that results
// are bit-identical across platforms, compilers and thread counts.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

inline std::uint64_t splitmix64_hash(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Public mix function deriving independent streams from a master seed.
// Trial i of a Monte Carlo run is seeded with mix_seed(master, i); row r of a
// sweep uses mix_seed(master, r) as its own per-row master seed.
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64_hash(master ^ splitmix64_hash(stream + 0x2545f4914f6cdd1dULL));
}

// Inverse-CDF sampler over symbols 1..N for a fixed probability vector.
class SymbolSampler {
 public:
  explicit SymbolSampler(const std::vector<double>& probs) {
    if (probs.empty()) throw InvalidInputError("SymbolSampler: empty probability vector");
    cumulative_.resize(probs.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
      acc += probs[i];
      cumulative_[i] = acc;
    }
  }

  int symbol_count() const { return static_cast<int>(cumulative_.size()); }

  // unit in [0,1) -> symbol in 1..N
  int sample(double unit) const {
    const int n = symbol_count();
    for (int k = 0; k < n - 1; ++k) {
      if (unit < cumulative_[k]) return k + 1;
    }
    return n;
  }

  int operator()(SplitMix64& rng) const { return sample(rng.next_unit()); }

 private:
  std::vector<double> cumulative_;
};

}  // namespace chaoscover
