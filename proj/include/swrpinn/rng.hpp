#pragma once

#include <cstdint>
#include <random>

namespace swrpinn {

/// splitmix64 step; used to derive independent stream seeds from a run seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Deterministic seed for a (run, subdomain, schwarz-iteration) worker stream.
inline std::uint64_t stream_seed(std::uint64_t run_seed, std::uint64_t subdomain_id,
                                 std::uint64_t schwarz_iter) {
    std::uint64_t s = run_seed;
    splitmix64(s);
    s ^= 0x632be59bd9b4e019ull * (subdomain_id + 1);
    splitmix64(s);
    s ^= 0x9e6c63d0876a9a47ull * (schwarz_iter + 1);
    return splitmix64(s);
}

/// mt19937_64 wrapper producing platform-independent uniform doubles.
/// std::uniform_real_distribution is implementation-defined, so draws are
/// built directly from the generator's bits.
class UniformRng {
  public:
    explicit UniformRng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform in [0, 1) with 53-bit resolution.
    double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double in(double lo, double hi) { return lo + (hi - lo) * unit(); }

    /// Uniform integer in [0, n).
    std::uint64_t index(std::uint64_t n) {
        // Rejection-free modulo is fine here: n is tiny relative to 2^64.
        return gen_() % n;
    }

    std::uint64_t raw() { return gen_(); }

  private:
    std::mt19937_64 gen_;
};

} // namespace swrpinn
