#pragma once

#include <cstddef>
#include <span>

#include "visagg/aggregate.hpp"

namespace visagg {

/// Argument count and orness level for an ordered weighted average.
struct OwaSpec {
    std::size_t n = 0;
    double alpha = 0.5;
};

/// Whether OWA weights enter the dot product at full precision or rounded
/// to four decimals first (the mode that reproduces published tables).
enum class WeightRounding { exact, four_dp };

double round_4dp(double x);

/// Solves the maximal-entropy first-weight equation
///   w1 * ((n-1)a + 1 - n*w1)^n = ((n-1)a)^(n-1) * (((n-1)a - n)*w1 + 1)
/// for w1 in (0, 1). Requires n >= 3 and alpha in (0, 1) \ {0.5}.
///
/// w = 1/n solves the equation for every alpha but yields uniform weights
/// (orness 1/2), so that root is deflated out before scanning a 1024-cell
/// grid for sign changes; each bracket is bisected to machine precision and
/// the root whose derived weight vector matches the requested orness within
/// 1e-6 is returned. No such root raises solver_error.
double owa_solve_w1(const OwaSpec& spec);

/// Maximal-entropy OWA weights for the given spec:
///   n = 1          -> (1)
///   n = 2          -> (alpha, 1 - alpha)
///   alpha = 0 or 1 -> one-hot on the last / first position
///   alpha = 0.5    -> uniform 1/n
/// otherwise w1 from owa_solve_w1, w_n from the closed form, interior
/// weights geometric between them. The result sums to one within 1e-9.
WeightVector owa_weights(const OwaSpec& spec);

/// Sorts values descending and dot-products them with owa_weights(spec).
/// values.size() must equal spec.n.
AggregationResult owa_aggregate(std::span<const double> values, const OwaSpec& spec,
                                WeightRounding rounding = WeightRounding::exact);

/// Attitudinal character of a weight vector (n >= 2):
///   sum_j ((n - j) / (n - 1)) * w_j,  j = 1..n
/// 1 for a pure max, 0 for a pure min, 0.5 for the plain mean.
double orness(const WeightVector& weights);

} // namespace visagg
