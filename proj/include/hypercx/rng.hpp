#ifndef HYPERCX_RNG_HPP
#define HYPERCX_RNG_HPP

#include <cstdint>

namespace hypercx {

/// splitmix64; chosen over std distributions so that runs are reproducible
/// across standard libraries given the same seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [lo, hi] inclusive.
    long long uniform_int(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// Independent stream for a named sub-experiment.
    Rng fork(std::uint64_t tag) {
        Rng copy(state_ ^ (tag * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL));
        copy.next();
        return copy;
    }

private:
    std::uint64_t state_;
};

} // namespace hypercx

#endif
