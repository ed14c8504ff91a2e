#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "visagg/panel.hpp"

namespace visagg {

/// Outcome of checking one computed table against its reference values.
struct TableComparison {
    std::string name;
    std::size_t cells_compared = 0;
    std::size_t failures = 0;
    double max_abs_deviation = 0.0;
    std::vector<std::string> failure_notes;

    bool pass() const { return failures == 0 && cells_compared > 0; }
    void record(double computed, double expected, double tolerance, const std::string& where);
};

/// Replication of the TAIEX December study: VGA weights (4-dp rounded,
/// tolerance 1e-4), VGA aggregates (tolerance 0.05) and OWA aggregates
/// computed with 4-dp rounded weights (tolerance 0.02 at alpha = 0.5,
/// 2.0 elsewhere).
struct ReplicationReport {
    TableComparison vga_weights;
    TableComparison vga_aggregates;
    TableComparison owa_aggregates;

    bool pass() const {
        return vga_weights.pass() && vga_aggregates.pass() && owa_aggregates.pass();
    }
};

/// `expected_weights` mirrors the data panel's shape (weight under the year
/// column it belongs to); `expected_vga` has a single value column;
/// `expected_owa` has one column per alpha, labeled with the alpha value.
/// `alphas` restricts which expected_owa columns are checked.
ReplicationReport replicate_panel_study(const PanelTable& data,
                                        const PanelTable& expected_weights,
                                        const PanelTable& expected_vga,
                                        const PanelTable& expected_owa,
                                        std::span<const double> alphas);

void write_report(const ReplicationReport& report, std::ostream& out);

} // namespace visagg
