#pragma once

#include <cstdint>
#include <vector>

namespace ttsupp {

// Deterministic generator (splitmix64). std::uniform_int_distribution is
// implementation-defined, so bounded draws are done by hand to keep reports
// byte-identical across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n). n must be > 0.
    std::uint64_t below(std::uint64_t n) {
        // rejection sampling keeps the draw unbiased
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t v = next_u64();
        while (v >= limit) v = next_u64();
        return v % n;
    }

    std::int64_t range(std::int64_t lo, std::int64_t hi) { // inclusive
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next_u64() & 1u) != 0; }

    template <class T>
    const T& pick(const std::vector<T>& xs) {
        return xs[below(xs.size())];
    }

    // Derived stream for case index i: parallel-safe partitioning of the
    // case space that does not depend on evaluation order.
    Rng fork(std::uint64_t i) const {
        return Rng(state_ ^ (0x2545f4914f6cdd1dULL * (i + 1)));
    }

private:
    std::uint64_t state_;
};

} // namespace ttsupp
