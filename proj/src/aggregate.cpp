#include "visagg/aggregate.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "visagg/errors.hpp"

namespace visagg {

WeightVector::WeightVector(std::vector<double> weights, double sum_tolerance)
    : w_(std::move(weights)) {
    double sum = 0.0;
    for (std::size_t i = 0; i < w_.size(); ++i) {
        if (!std::isfinite(w_[i]) || w_[i] < 0.0 || w_[i] > 1.0)
            throw contract_error("weight out of [0,1] at index " + std::to_string(i));
        sum += w_[i];
    }
    if (!w_.empty() && std::abs(sum - 1.0) > sum_tolerance)
        throw contract_error("weights sum to " + std::to_string(sum) + ", expected 1");
}

std::string to_string(Method method) {
    switch (method) {
        case Method::vga: return "vga";
        case Method::owa: return "owa";
        case Method::mean: return "mean";
    }
    return "?";
}

WeightVector vga_weights(const VisibilityGraph& graph) {
    const std::size_t n = graph.vertex_count();
    if (n == 0) throw contract_error("vga_weights: empty graph");
    if (n == 1) return WeightVector({1.0}); // lone vertex has degree 0; weight revised to 1

    double total = 0.0;
    for (std::size_t d : graph.degrees()) total += static_cast<double>(d);
    std::vector<double> w;
    w.reserve(n);
    for (std::size_t d : graph.degrees()) w.push_back(static_cast<double>(d) / total);
    return WeightVector(std::move(w));
}

AggregationResult vga_aggregate(const TimeSeries& series) {
    if (series.empty()) throw contract_error("vga_aggregate: empty series");
    WeightVector w = vga_weights(build_graph_fast(series));
    double value = 0.0;
    for (std::size_t i = 0; i < series.size(); ++i) value += w[i] * series.value(i);
    return {value, std::move(w), Method::vga};
}

double arithmetic_mean(std::span<const double> values) {
    if (values.empty()) throw contract_error("arithmetic_mean: empty input");
    double sum = std::accumulate(values.begin(), values.end(), 0.0);
    return sum / static_cast<double>(values.size());
}

} // namespace visagg
