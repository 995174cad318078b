#ifndef POLYDIST_RNG_HPP
#define POLYDIST_RNG_HPP

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace polydist {

// Generator identifier, bumped if the underlying scheme ever changes.
// Every random result in the library is a pure function of a 64-bit seed
// fed through this scheme, so outputs are stable across platforms.
inline constexpr const char* kRngScheme = "mt19937_64+splitmix64/u53/v1";

// SplitMix64 finalizer (Steele, Lea & Vigna). Used only for seed mixing.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Derives a sub-stream seed from a master seed and a path of indices, e.g.
// derive_seed(master, {n_index, replicate}). Different paths give unrelated
// streams; the same path always gives the same stream.
inline std::uint64_t derive_seed(std::uint64_t master,
                                 std::initializer_list<std::uint64_t> path) {
    std::uint64_t s = splitmix64(master);
    for (std::uint64_t p : path) s = splitmix64(s ^ splitmix64(p + 0x9e3779b97f4a7c15ULL));
    return s;
}

// Reproducible uniform generator. std::mt19937_64 output is fully specified
// by the standard; uniforms are built from the top 53 bits directly instead
// of std::uniform_real_distribution, whose mapping is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform on [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform on (0, 1): midpoints of the 53-bit lattice, never 0 or 1.
    double uniform_open() {
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard exponential via inversion.
    double exponential();

    // Index i with probability weights[i] / sum(weights). Weights must be
    // nonnegative with positive sum.
    std::size_t categorical(const std::vector<double>& weights);

    // A point on the flat simplex of the given dimension.
    std::vector<double> simplex_flat(std::size_t dim);

    std::uint64_t next_u64() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace polydist

#endif
