#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "visagg/series.hpp"

namespace visagg {

/// Deterministic 64-bit generator (splitmix64). Used instead of <random>
/// distributions so that seeded output is identical across platforms.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) with 53 significant bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound).
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

  private:
    std::uint64_t state_;
};

enum class SeriesKind { periodic, conway, spiked_periodic, uniform_random };

/// Recipe for a deterministic test series on ordinal abscissas 1..length.
struct GeneratorSpec {
    SeriesKind kind = SeriesKind::periodic;
    std::size_t length = 0;
    std::vector<double> pattern;             // periodic / spiked_periodic
    std::size_t spike_position = 0;          // 0-based, spiked_periodic
    double spike_height = 0.0;               // spiked_periodic
    std::optional<std::uint64_t> seed;       // required for uniform_random
};

/// periodic:        the pattern repeated cyclically to `length`.
/// conway:          a(1)=a(2)=1, a(n)=a(a(n-1)) + a(n-a(n-1)).
/// spiked_periodic: periodic fill with the sample at spike_position
///                  replaced by spike_height (cycle phase preserved).
/// uniform_random:  seeded splitmix64 stream, values in [0, 1).
TimeSeries generate(const GeneratorSpec& spec);

} // namespace visagg
