#include "visagg/owa.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "visagg/errors.hpp"

namespace visagg {

double round_4dp(double x) { return std::round(x * 1e4) / 1e4; }

namespace {

constexpr double kOrnessMatchTol = 1e-6;
constexpr double kResidualTol = 1e-12;

void check_spec(const OwaSpec& spec) {
    if (spec.n < 1) throw contract_error("owa: n must be >= 1");
    if (!(spec.alpha >= 0.0 && spec.alpha <= 1.0))
        throw contract_error("owa: alpha must lie in [0, 1]");
}

// First-weight equation, normalized by ((n-1)a)^(n-1) so values stay O(1):
//   f(w) = w * c * ((c + 1 - n*w) / c)^n - ((c - n)*w + 1),  c = (n-1)*a.
double first_weight_residual(std::size_t n, double c, double w) {
    const double nn = static_cast<double>(n);
    return w * c * std::pow((c + 1.0 - nn * w) / c, nn) - ((c - nn) * w + 1.0);
}

// Last weight from the closed form given w1.
double last_weight(std::size_t n, double c, double w1) {
    const double nn = static_cast<double>(n);
    return ((c - nn) * w1 + 1.0) / (c + 1.0 - nn * w1);
}

// Interior weights are geometric between w1 and wn:
//   w_j = (w1^(n-j) * wn^(j-1))^(1/(n-1)),
// evaluated in log space for stability at extreme orness.
std::vector<double> weights_from_w1(std::size_t n, double c, double w1) {
    const double wn = last_weight(n, c, w1);
    std::vector<double> w(n);
    w.front() = w1;
    w.back() = wn;
    if (w1 > 0.0 && wn > 0.0) {
        const double log_w1 = std::log(w1);
        const double log_wn = std::log(wn);
        for (std::size_t j = 2; j < n; ++j) {
            const double e = (static_cast<double>(n - j) * log_w1 +
                              static_cast<double>(j - 1) * log_wn) /
                             static_cast<double>(n - 1);
            w[j - 1] = std::exp(e);
        }
    }
    return w;
}

bool plausible_weights(const std::vector<double>& w) {
    double sum = 0.0;
    for (double x : w) {
        if (!std::isfinite(x) || x < 0.0 || x > 1.0) return false;
        sum += x;
    }
    return std::abs(sum - 1.0) <= 1e-7;
}

double orness_of(const std::vector<double>& w) {
    const std::size_t n = w.size();
    double acc = 0.0;
    for (std::size_t j = 1; j <= n; ++j)
        acc += (static_cast<double>(n - j) / static_cast<double>(n - 1)) * w[j - 1];
    return acc;
}

// Bisection run until the bracket cannot shrink any further; the final
// interval is a couple of ulps wide, well inside the 1e-14 budget.
double bisect_to_limit(const std::function<double(double)>& f, double lo, double hi,
                       double f_lo) {
    bool lo_negative = f_lo < 0.0;
    while (true) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) return mid;
        const double f_mid = f(mid);
        if (f_mid == 0.0) return mid;
        if ((f_mid < 0.0) == lo_negative)
            lo = mid;
        else
            hi = mid;
    }
}

} // namespace

double owa_solve_w1(const OwaSpec& spec) {
    check_spec(spec);
    const std::size_t n = spec.n;
    const double alpha = spec.alpha;
    if (n < 3) throw contract_error("owa_solve_w1: requires n >= 3");
    if (alpha <= 0.0 || alpha >= 1.0 || alpha == 0.5)
        throw contract_error("owa_solve_w1: requires alpha in (0,1), alpha != 0.5");

    const double c = (static_cast<double>(n) - 1.0) * alpha;
    const double uniform_w = 1.0 / static_cast<double>(n);

    // w = 1/n solves the equation for every alpha but encodes orness 1/2;
    // dividing it out keeps the scan from bracketing that root, including
    // when alpha is close to 0.5 and the wanted root sits right next to it.
    const auto deflated = [&](double w) {
        return first_weight_residual(n, c, w) / (w - uniform_w);
    };

    constexpr int kGridCells = 1024;
    constexpr double kEdge = 1e-12;
    const double lo = kEdge;
    const double hi = 1.0 - kEdge;

    double best_w1 = -1.0;
    double best_gap = kOrnessMatchTol;

    double prev_w = lo;
    double prev_f = deflated(prev_w);
    for (int cell = 1; cell <= kGridCells; ++cell) {
        double w = lo + (hi - lo) * (static_cast<double>(cell) / kGridCells);
        if (w == uniform_w) w = std::nextafter(w, 1.0);
        const double f = deflated(w);

        double candidate = -1.0;
        if (f == 0.0)
            candidate = w;
        else if (prev_f == 0.0)
            candidate = prev_w;
        else if ((prev_f < 0.0) != (f < 0.0))
            candidate = bisect_to_limit(deflated, prev_w, w, prev_f);

        if (candidate > 0.0 && candidate < 1.0 &&
            std::abs(first_weight_residual(n, c, candidate)) < kResidualTol) {
            const std::vector<double> w_all = weights_from_w1(n, c, candidate);
            if (plausible_weights(w_all)) {
                const double gap = std::abs(orness_of(w_all) - alpha);
                if (gap < best_gap) {
                    best_gap = gap;
                    best_w1 = candidate;
                }
            }
        }
        prev_w = w;
        prev_f = f;
    }

    if (best_w1 < 0.0)
        throw solver_error("owa_solve_w1: no acceptable root for n=" + std::to_string(n) +
                           ", alpha=" + std::to_string(alpha));
    return best_w1;
}

WeightVector owa_weights(const OwaSpec& spec) {
    check_spec(spec);
    const std::size_t n = spec.n;
    const double alpha = spec.alpha;

    if (n == 1) return WeightVector({1.0});
    if (alpha == 1.0) {
        std::vector<double> w(n, 0.0);
        w.front() = 1.0;
        return WeightVector(std::move(w));
    }
    if (alpha == 0.0) {
        std::vector<double> w(n, 0.0);
        w.back() = 1.0;
        return WeightVector(std::move(w));
    }
    if (n == 2) return WeightVector({alpha, 1.0 - alpha});
    if (alpha == 0.5)
        return WeightVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));

    const double c = (static_cast<double>(n) - 1.0) * alpha;
    const double w1 = owa_solve_w1(spec);
    return WeightVector(weights_from_w1(n, c, w1));
}

AggregationResult owa_aggregate(std::span<const double> values, const OwaSpec& spec,
                                WeightRounding rounding) {
    check_spec(spec);
    if (values.size() != spec.n)
        throw contract_error("owa_aggregate: got " + std::to_string(values.size()) +
                             " values for n=" + std::to_string(spec.n));

    WeightVector w = owa_weights(spec);
    if (rounding == WeightRounding::four_dp) {
        std::vector<double> rounded(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) rounded[i] = round_4dp(w[i]);
        // 4-dp rounding moves the sum off one by up to n/2 * 1e-4.
        w = WeightVector(std::move(rounded), 1e-3);
    }

    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());

    double value = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) value += w[i] * sorted[i];
    return {value, std::move(w), Method::owa};
}

double orness(const WeightVector& weights) {
    if (weights.size() < 2) throw contract_error("orness: requires n >= 2");
    return orness_of(weights.values());
}

} // namespace visagg
