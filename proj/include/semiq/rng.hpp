#pragma once

#include <cstdint>
#include <random>

namespace semiq {

// splitmix64 finalizer; used to derive independent child seeds.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic RNG. std::mt19937_64 has a standard-specified output
// sequence; the std::* distributions do not, so draws are derived from raw
// engine output to keep seeded runs byte-identical across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

    // Uniform on [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer on [0, n), unbiased via rejection.
    std::uint64_t uniform_int(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x = gen_();
        while (x >= limit) x = gen_();
        return x % n;
    }

    std::uint64_t raw() { return gen_(); }

    std::uint64_t seed() const { return seed_; }

    // Independent stream derived from this generator's seed, not its state.
    Rng child(std::uint64_t stream) const { return Rng(mix_seed(seed_, stream)); }

  private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

}  // namespace semiq
