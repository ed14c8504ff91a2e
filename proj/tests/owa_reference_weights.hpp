#pragma once

#include <cstddef>
#include <vector>

namespace testsupport {

// Published 4-decimal reference weights for n = 8, 9, 10 at the four orness
// levels the panel study uses. Two n=8 cells (alpha 0.9 w2 / alpha 0.1 w7,
// printed 0.2421) are internally inconsistent with the defining equations:
// the maximal-entropy value is 0.2428404804 (independently verified; the
// printed row sums to 0.9994 and breaks the constant-ratio law). They are
// kept verbatim here so comparisons report the discrepancy instead of
// hiding it.
struct OwaReferenceRow {
    std::size_t n;
    double alpha;
    std::vector<double> weights;
};

inline const std::vector<OwaReferenceRow>& owa_reference_rows() {
    static const std::vector<OwaReferenceRow> rows = {
        {8, 0.1, {0.0012, 0.0030, 0.0071, 0.0173, 0.0417, 0.1006, 0.2421, 0.5864}},
        {8, 0.5, {0.1250, 0.1250, 0.1250, 0.1250, 0.1250, 0.1250, 0.1250, 0.1250}},
        {8, 0.6, {0.1917, 0.1674, 0.1461, 0.1275, 0.1113, 0.0972, 0.0848, 0.0740}},
        {8, 0.9, {0.5864, 0.2421, 0.1006, 0.0417, 0.0173, 0.0071, 0.0030, 0.0012}},
        {9, 0.1, {0.0009, 0.0020, 0.0044, 0.0098, 0.0220, 0.0493, 0.1104, 0.2473, 0.5540}},
        {9, 0.5, {0.1111, 0.1111, 0.1111, 0.1111, 0.1111, 0.1111, 0.1111, 0.1111, 0.1111}},
        {9, 0.6, {0.1726, 0.1527, 0.1350, 0.1195, 0.1057, 0.0936, 0.0828, 0.0732, 0.0648}},
        {9, 0.9, {0.5540, 0.2473, 0.1104, 0.0493, 0.0220, 0.0098, 0.0044, 0.0020, 0.0009}},
        {10, 0.1,
         {0.0007, 0.0014, 0.0029, 0.0061, 0.0127, 0.0268, 0.0564, 0.1186, 0.2495, 0.5250}},
        {10, 0.5,
         {0.1000, 0.1000, 0.1000, 0.1000, 0.1000, 0.1000, 0.1000, 0.1000, 0.1000, 0.1000}},
        {10, 0.6,
         {0.1569, 0.1404, 0.1256, 0.1123, 0.1005, 0.0899, 0.0804, 0.0720, 0.0644, 0.0576}},
        {10, 0.9,
         {0.5250, 0.2495, 0.1186, 0.0564, 0.0268, 0.0127, 0.0061, 0.0029, 0.0014, 0.0007}},
    };
    return rows;
}

// The two reference cells known to disagree with the defining equations,
// as (n, alpha, 0-based index, printed value, equation value).
struct KnownWeightDefect {
    std::size_t n;
    double alpha;
    std::size_t index;
    double printed;
    double actual;
};

inline const std::vector<KnownWeightDefect>& known_weight_defects() {
    static const std::vector<KnownWeightDefect> cells = {
        {8, 0.1, 6, 0.2421, 0.2428404804},
        {8, 0.9, 1, 0.2421, 0.2428404804},
    };
    return cells;
}

} // namespace testsupport
