#include "bkplan/util/rng.h"

#include <cassert>
#include <cmath>

namespace bkplan {

std::uint64_t Rng::uniform_index(std::uint64_t n) {
    assert(n > 0);
    if (n == 1) return 0;
    // Reject draws above the largest multiple of n to avoid modulo bias.
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = next_u64();
    } while (x >= limit);
    return x % n;
}

double Rng::gaussian() {
    double u1 = uniform01();
    double u2 = uniform01();
    while (u1 <= 1e-300) u1 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

} // namespace bkplan
