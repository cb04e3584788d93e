#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "wmb/algebra.hpp"

namespace wmb {

// Deterministic tuple source for sampled law evaluation on lazy algebras.
// The same (seed, count) always yields the same tuples; dense instances are
// quantified exhaustively and never consult the sampler.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed = 0, int count = 200, int window = 48)
      : seed_(seed), count_(count), window_(window) {}

  std::uint64_t seed() const { return seed_; }
  int count() const { return count_; }
  int window() const { return window_; }

  // count tuples of K basis keys drawn from the first `window` enumerated
  // basis elements.
  template <int K>
  std::vector<std::array<Key, K>> tuples(const Algebra& A) const {
    std::mt19937_64 rng(seed_ ^ (0x9e3779b97f4a7c15ull * (K + 1)));
    std::vector<std::array<Key, K>> out;
    out.reserve(size_t(count_));
    for (int i = 0; i < count_; ++i) {
      std::array<Key, K> t;
      for (int j = 0; j < K; ++j) t[j] = A.key_at(std::int64_t(rng() % std::uint64_t(window_)));
      out.push_back(t);
    }
    return out;
  }

  // The first `n` enumerated keys (a deterministic finite slice).
  std::vector<Key> slice(const Algebra& A, int n) const {
    std::vector<Key> out;
    out.reserve(size_t(n));
    for (int i = 0; i < n; ++i) out.push_back(A.key_at(i));
    return out;
  }

 private:
  std::uint64_t seed_;
  int count_;
  int window_;
};

}  // namespace wmb
