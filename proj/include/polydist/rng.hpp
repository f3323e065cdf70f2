#ifndef POLYDIST_RNG_HPP
#define POLYDIST_RNG_HPP

#include <cstdint>
#include <random>

namespace polydist {

// Deterministic seeded generator. mt19937_64 has a fully specified output
// sequence; the bounded draw below uses rejection instead of
// std::uniform_int_distribution, whose mapping is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, n), unbiased via rejection.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      std::uint64_t r = engine_();
      if (r >= threshold) return r % n;
    }
  }

  // Uniform in [lo, hi] inclusive.
  std::uint64_t range(std::uint64_t lo, std::uint64_t hi) {
    return lo + below(hi - lo + 1);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace polydist

#endif
