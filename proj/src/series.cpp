#include "visagg/series.hpp"

#include <cmath>
#include <string>

#include "visagg/errors.hpp"

namespace visagg {

namespace {

void validate(const std::vector<TimePoint>& points) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!std::isfinite(points[i].t) || !std::isfinite(points[i].y))
            throw contract_error("non-finite coordinate at index " + std::to_string(i));
        if (i > 0 && !(points[i - 1].t < points[i].t))
            throw contract_error("abscissas not strictly increasing at index " +
                                 std::to_string(i));
    }
}

} // namespace

TimeSeries::TimeSeries(std::vector<double> values) {
    points_.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        points_.push_back({static_cast<double>(i + 1), values[i]});
    validate(points_);
}

TimeSeries::TimeSeries(std::vector<TimePoint> points) : points_(std::move(points)) {
    validate(points_);
}

std::vector<double> TimeSeries::values() const {
    std::vector<double> out;
    out.reserve(points_.size());
    for (const TimePoint& p : points_) out.push_back(p.y);
    return out;
}

} // namespace visagg
