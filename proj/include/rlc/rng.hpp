#ifndef RLC_RNG_HPP
#define RLC_RNG_HPP

#include <cstdint>

namespace rlc {

// SplitMix64. Fixed algorithm so that every sampled object is bit-reproducible
// across platforms and compilers, independent of the standard library.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n) by rejection; n >= 1.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t state_;
};

// Per-trial seed derivation: trials are independent streams regardless of the
// worker that executes them, so parallel and serial runs sample identically.
inline std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
    Rng mix(master_seed ^ (0xA3EC647659359ACDULL * (trial_index + 1)));
    return mix.next();
}

} // namespace rlc

#endif
