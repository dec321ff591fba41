#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace bkplan {

// Seeded RNG with platform-independent derived draws. std::mt19937_64 has a
// fixed output sequence by the standard; the distributions below are
// hand-rolled because the std:: distribution algorithms are not pinned.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform integer in [0, n), n > 0. Rejection sampling on the top bits.
    std::uint64_t uniform_index(std::uint64_t n);

    // Uniform double in [0, 1) with 53 bits of randomness.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Standard normal via Box-Muller (one value per call, cache discarded
    // to keep the draw count per sample fixed).
    double gaussian();

    template <typename T>
    void shuffle(std::vector<T> &items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform_index(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace bkplan
