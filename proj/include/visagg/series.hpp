#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace visagg {

/// One observation: abscissa t (ordinal position or calendar coordinate) and value y.
struct TimePoint {
    double t;
    double y;
};

/// Ordered sequence of finite points with strictly increasing abscissas.
///
/// A bare value sequence is placed on ordinal abscissas 1..n. Construction
/// rejects NaN/infinite coordinates and non-increasing abscissas; everything
/// downstream may rely on those invariants.
class TimeSeries {
  public:
    TimeSeries() = default;

    /// Values on ordinal abscissas 1..n.
    explicit TimeSeries(std::vector<double> values);
    TimeSeries(std::initializer_list<double> values)
        : TimeSeries(std::vector<double>(values)) {}

    /// Explicit (t, y) points; abscissas must be strictly increasing.
    explicit TimeSeries(std::vector<TimePoint> points);

    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }

    const TimePoint& operator[](std::size_t i) const { return points_[i]; }
    double abscissa(std::size_t i) const { return points_[i].t; }
    double value(std::size_t i) const { return points_[i].y; }

    std::span<const TimePoint> points() const { return points_; }
    std::vector<double> values() const;

    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

  private:
    std::vector<TimePoint> points_;
};

} // namespace visagg
