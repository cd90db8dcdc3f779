#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <random>
#include <vector>

namespace maxecd {

// Deterministic RNG. All bounded draws go through an explicit rejection
// sampler instead of std::uniform_int_distribution, so a fixed seed yields
// the same stream on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform over [0, count). count must be positive.
  std::size_t uniform_index(std::size_t count) {
    const std::uint64_t bound = static_cast<std::uint64_t>(count);
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t r = next_u64();
    while (r >= limit) r = next_u64();
    return static_cast<std::size_t>(r % bound);
  }

  // Uniform over [lo, hi], inclusive.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(uniform_index(
                    static_cast<std::size_t>(hi - lo) + 1));
  }

  // Uniform in [0, 1).
  double uniform01() { return (next_u64() >> 11) * 0x1.0p-53; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = uniform_index(i);
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 eng_;
};

// splitmix64 finalizer; used to derive independent stream seeds.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL + b;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Independent stream for a (seed, path) pair. Streams with different paths
// never share state, so parallel and serial generation agree.
inline Rng derive_rng(std::uint64_t seed,
                      std::initializer_list<std::uint64_t> path) {
  std::uint64_t s = mix_seed(seed, 0x5eedULL);
  for (std::uint64_t p : path) s = mix_seed(s, p);
  return Rng(s);
}

}  // namespace maxecd
