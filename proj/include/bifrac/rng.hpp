#pragma once

#include <cstdint>

namespace bifrac {

/// Counter-based Gaussian stream keyed by (base_seed, replicate_index).
/// Every draw is a pure function of (key, draw_index), so results do not
/// depend on evaluation order or parallel scheduling.
class CounterRng {
public:
    CounterRng(std::uint64_t base_seed, std::uint64_t replicate_index);

    /// Uniform on (0,1].
    double uniform(std::uint64_t counter) const;

    /// Standard normal draw (Box-Muller; consumes counters 2k and 2k+1).
    double normal(std::uint64_t draw_index) const;

private:
    std::uint64_t key_;
};

} // namespace bifrac
