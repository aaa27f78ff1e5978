#ifndef REVGEN_RNG_HPP
#define REVGEN_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace revgen {

// Seeded RNG wrapper. All derived values (uniforms, bounded ints, shuffles)
// are computed from the raw mt19937 stream with fixed arithmetic, so results
// are identical across platforms and standard library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed)
      : seed_(seed), gen_(static_cast<std::uint32_t>(seed ^ (seed >> 32))) {}

  std::uint32_t next_u32() { return gen_(); }

  // [0, 1) with 24 bits of resolution
  double uniform() { return (next_u32() >> 8) * (1.0 / 16777216.0); }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // unbiased integer in [0, n)
  std::uint32_t below(std::uint32_t n) {
    if (n == 0) return 0;
    std::uint32_t limit = UINT32_MAX - UINT32_MAX % n;
    std::uint32_t v;
    do {
      v = next_u32();
    } while (v >= limit);
    return v % n;
  }

  bool bernoulli(double p) { return uniform() < p; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = below(static_cast<std::uint32_t>(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  // Derive an independent stream, e.g. one per model or per epoch.
  Rng fork(std::uint64_t stream) const {
    std::uint64_t x = seed_ ^ (stream + 0x9e3779b97f4a7c15ULL + (seed_ << 6));
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return Rng(x);
  }

 private:
  std::uint64_t seed_;
  std::mt19937 gen_;
};

}  // namespace revgen

#endif  // REVGEN_RNG_HPP
