#pragma once

#include <cmath>
#include <vector>

#include "visagg/generators.hpp"
#include "visagg/series.hpp"

namespace testsupport {

// December 1st row of the shipped panel (its nine present values, in
// column order) -- used as a realistic short series in several suites.
inline const std::vector<double>& dec1_values() {
    static const std::vector<double> v{5342.06, 5870.17, 5798.62, 6179.82, 7613.57,
                                       4518.43, 7649.23, 8520.11, 7178.69};
    return v;
}

inline visagg::TimeSeries random_series(std::uint64_t seed, std::size_t length) {
    if (length == 0) return visagg::TimeSeries{};
    visagg::GeneratorSpec spec;
    spec.kind = visagg::SeriesKind::uniform_random;
    spec.length = length;
    spec.seed = seed;
    return visagg::generate(spec);
}

// Random values snapped to a 2^-20 grid. Differences and chord cross
// products of such values (with small integer abscissas) are exact in
// doubles, which makes graph-equality assertions under affine maps exact
// rather than probabilistic.
inline visagg::TimeSeries dyadic_random_series(std::uint64_t seed, std::size_t length) {
    visagg::SplitMix64 rng(seed);
    std::vector<double> v(length);
    for (double& x : v) x = static_cast<double>(rng.next() >> 44) * 0x1.0p-20;
    return visagg::TimeSeries(std::move(v));
}

} // namespace testsupport
