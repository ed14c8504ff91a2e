#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "visagg/aggregate.hpp"

namespace visagg {

/// VGA weight of a lone spike as the series extends past it.
struct SpikeInfluencePoint {
    std::size_t periods_after;
    double spike_weight;
};

/// For each trailing-period count in [periods_after_min, periods_after_max],
/// builds `periods_before` pattern repetitions, one spike sample, then that
/// many trailing repetitions, and records the spike's VGA weight.
/// The spike height must strictly exceed the pattern maximum.
std::vector<SpikeInfluencePoint> spike_influence_profile(std::span<const double> pattern,
                                                         double spike_height,
                                                         std::size_t periods_before,
                                                         std::size_t periods_after_min,
                                                         std::size_t periods_after_max);

/// VGA weights of a pattern repeated `repetitions` times, annotated with the
/// per-period degree rows. Interior periods (all but the first and last)
/// carry identical degree patterns for a true periodic series.
struct PeriodicWeightProfile {
    std::size_t period = 0;
    std::size_t repetitions = 0;
    WeightVector weights;
    std::vector<std::vector<std::size_t>> period_degrees; // repetitions rows of `period`
    bool interior_periodic = false;
};

/// Requires repetitions >= 4 so at least two interior periods exist.
PeriodicWeightProfile periodic_weight_profile(std::span<const double> pattern,
                                              std::size_t repetitions);

} // namespace visagg
