#include "bifrac/rng.hpp"

#include <cmath>

namespace bifrac {

namespace {

// splitmix64 finalizer
std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

CounterRng::CounterRng(std::uint64_t base_seed, std::uint64_t replicate_index)
    : key_(mix(mix(base_seed) ^ mix(replicate_index * 0xda942042e4dd58b5ULL + 1))) {}

double CounterRng::uniform(std::uint64_t counter) const {
    const std::uint64_t bits = mix(key_ ^ (counter * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
    return ((bits >> 11) + 1.0) * (1.0 / 9007199254740992.0);  // (0,1]
}

double CounterRng::normal(std::uint64_t draw_index) const {
    const double u1 = uniform(2 * draw_index);
    const double u2 = uniform(2 * draw_index + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

} // namespace bifrac
