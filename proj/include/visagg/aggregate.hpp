#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "visagg/series.hpp"
#include "visagg/visibility.hpp"

namespace visagg {

/// Normalized nonnegative weights over series positions.
class WeightVector {
  public:
    WeightVector() = default;

    /// Validates each entry in [0, 1] and the sum against 1 within
    /// `sum_tolerance`. Table-replication paths that round weights to four
    /// decimals pass a looser tolerance; everything else uses the default.
    explicit WeightVector(std::vector<double> weights, double sum_tolerance = 1e-9);

    std::size_t size() const { return w_.size(); }
    bool empty() const { return w_.empty(); }
    double operator[](std::size_t i) const { return w_[i]; }
    const std::vector<double>& values() const { return w_; }

    auto begin() const { return w_.begin(); }
    auto end() const { return w_.end(); }

  private:
    std::vector<double> w_;
};

enum class Method { vga, owa, mean };

std::string to_string(Method method);

/// Aggregated value with the weights that produced it.
struct AggregationResult {
    double value = 0.0;
    WeightVector weights;
    Method method = Method::vga;
};

/// Degree-proportional weights w_i = d_i / sum(d). A single vertex has
/// degree zero, so its weight is revised to one. Empty graph is an error.
WeightVector vga_weights(const VisibilityGraph& graph);

/// Weighted mean of the series values under vga_weights of the series'
/// visibility graph (fast construction). Empty series is an error.
AggregationResult vga_aggregate(const TimeSeries& series);

/// Plain average; empty input is an error.
double arithmetic_mean(std::span<const double> values);

} // namespace visagg
