#include "visagg/profiles.hpp"

#include <algorithm>
#include <string>

#include "visagg/errors.hpp"
#include "visagg/generators.hpp"
#include "visagg/visibility.hpp"

namespace visagg {

std::vector<SpikeInfluencePoint> spike_influence_profile(std::span<const double> pattern,
                                                         double spike_height,
                                                         std::size_t periods_before,
                                                         std::size_t periods_after_min,
                                                         std::size_t periods_after_max) {
    if (pattern.empty()) throw contract_error("spike_influence_profile: empty pattern");
    if (periods_before < 1)
        throw contract_error("spike_influence_profile: need at least one leading period");
    if (periods_after_min > periods_after_max)
        throw contract_error("spike_influence_profile: empty trailing-period range");
    const double pattern_max = *std::max_element(pattern.begin(), pattern.end());
    if (!(spike_height > pattern_max))
        throw contract_error("spike_influence_profile: spike height must strictly exceed "
                             "the pattern maximum");

    const std::size_t period = pattern.size();
    std::vector<SpikeInfluencePoint> profile;
    profile.reserve(periods_after_max - periods_after_min + 1);

    for (std::size_t after = periods_after_min; after <= periods_after_max; ++after) {
        GeneratorSpec spec;
        spec.kind = SeriesKind::spiked_periodic;
        spec.pattern.assign(pattern.begin(), pattern.end());
        spec.length = (periods_before + after) * period + 1;
        spec.spike_position = periods_before * period;
        spec.spike_height = spike_height;

        const WeightVector w = vga_weights(build_graph_fast(generate(spec)));
        profile.push_back({after, w[spec.spike_position]});
    }
    return profile;
}

PeriodicWeightProfile periodic_weight_profile(std::span<const double> pattern,
                                              std::size_t repetitions) {
    if (pattern.empty()) throw contract_error("periodic_weight_profile: empty pattern");
    if (repetitions < 4)
        throw contract_error("periodic_weight_profile: need >= 4 repetitions, got " +
                             std::to_string(repetitions));

    GeneratorSpec spec;
    spec.kind = SeriesKind::periodic;
    spec.pattern.assign(pattern.begin(), pattern.end());
    spec.length = pattern.size() * repetitions;

    const VisibilityGraph graph = build_graph_fast(generate(spec));

    PeriodicWeightProfile profile;
    profile.period = pattern.size();
    profile.repetitions = repetitions;
    profile.weights = vga_weights(graph);
    profile.period_degrees.reserve(repetitions);
    for (std::size_t r = 0; r < repetitions; ++r) {
        const auto begin = graph.degrees().begin() + static_cast<std::ptrdiff_t>(r * profile.period);
        profile.period_degrees.emplace_back(begin, begin + static_cast<std::ptrdiff_t>(profile.period));
    }

    profile.interior_periodic = true;
    for (std::size_t r = 2; r + 1 < repetitions; ++r)
        if (profile.period_degrees[r] != profile.period_degrees[1])
            profile.interior_periodic = false;
    return profile;
}

} // namespace visagg
