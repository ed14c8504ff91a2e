#include "visagg/generators.hpp"

#include <string>

#include "visagg/errors.hpp"

namespace visagg {

namespace {

std::vector<double> periodic_fill(const std::vector<double>& pattern, std::size_t length) {
    if (pattern.empty()) throw contract_error("generate: empty pattern");
    std::vector<double> v(length);
    for (std::size_t i = 0; i < length; ++i) v[i] = pattern[i % pattern.size()];
    return v;
}

std::vector<double> conway_values(std::size_t length) {
    // a(1) = a(2) = 1, a(n) = a(a(n-1)) + a(n - a(n-1)), 1-based.
    std::vector<std::size_t> a(length + 1, 0);
    if (length >= 1) a[1] = 1;
    if (length >= 2) a[2] = 1;
    for (std::size_t i = 3; i <= length; ++i) a[i] = a[a[i - 1]] + a[i - a[i - 1]];

    std::vector<double> v(length);
    for (std::size_t i = 1; i <= length; ++i) v[i - 1] = static_cast<double>(a[i]);
    return v;
}

} // namespace

TimeSeries generate(const GeneratorSpec& spec) {
    if (spec.length < 1) throw contract_error("generate: length must be >= 1");

    switch (spec.kind) {
        case SeriesKind::periodic:
            return TimeSeries(periodic_fill(spec.pattern, spec.length));

        case SeriesKind::conway:
            return TimeSeries(conway_values(spec.length));

        case SeriesKind::spiked_periodic: {
            std::vector<double> v = periodic_fill(spec.pattern, spec.length);
            if (spec.spike_position >= spec.length)
                throw contract_error("generate: spike position " +
                                     std::to_string(spec.spike_position) +
                                     " out of range for length " + std::to_string(spec.length));
            v[spec.spike_position] = spec.spike_height;
            return TimeSeries(std::move(v));
        }

        case SeriesKind::uniform_random: {
            if (!spec.seed)
                throw contract_error("generate: uniform_random requires a seed");
            SplitMix64 rng(*spec.seed);
            std::vector<double> v(spec.length);
            for (double& x : v) x = rng.next_unit();
            return TimeSeries(std::move(v));
        }
    }
    throw contract_error("generate: unknown series kind");
}

} // namespace visagg
