#include "visagg/replication.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "visagg/errors.hpp"
#include "visagg/owa.hpp"

namespace visagg {

void TableComparison::record(double computed, double expected, double tolerance,
                             const std::string& where) {
    ++cells_compared;
    const double deviation = std::abs(computed - expected);
    max_abs_deviation = std::max(max_abs_deviation, deviation);
    if (deviation > tolerance) {
        ++failures;
        std::ostringstream note;
        note << std::fixed << std::setprecision(4) << where << ": computed " << computed
             << ", expected " << expected << " (tolerance " << tolerance << ")";
        failure_notes.push_back(note.str());
    }
}

namespace {

constexpr double kWeightTol = 1e-4 + 1e-9; // one printed digit of slack
constexpr double kVgaTol = 0.05;
constexpr double kOwaTolHalf = 0.02; // alpha = 0.5 needs no root solve
constexpr double kOwaTolOther = 2.0;

void miss(TableComparison& table, const std::string& where, const std::string& what) {
    ++table.cells_compared;
    ++table.failures;
    table.failure_notes.push_back(where + ": " + what);
}

} // namespace

ReplicationReport replicate_panel_study(const PanelTable& data,
                                        const PanelTable& expected_weights,
                                        const PanelTable& expected_vga,
                                        const PanelTable& expected_owa,
                                        std::span<const double> alphas) {
    ReplicationReport report;
    report.vga_weights.name = "VGA weights";
    report.vga_aggregates.name = "VGA aggregates";
    report.owa_aggregates.name = "OWA aggregates";

    // Which expected OWA columns the alpha filter keeps.
    std::vector<std::pair<std::size_t, double>> owa_columns;
    for (std::size_t c = 0; c < expected_owa.cols(); ++c) {
        const double alpha = std::stod(expected_owa.col_labels[c]);
        for (double requested : alphas)
            if (std::abs(alpha - requested) < 1e-12) {
                owa_columns.emplace_back(c, alpha);
                break;
            }
    }

    const PanelAggregation agg =
        aggregate_panel(data, alphas, WeightRounding::four_dp, PanelAbscissa::column_label);

    for (const RowResult& row : agg.rows) {
        const std::string day = row.label;

        // Weights, cell by cell under the year column each value came from.
        const auto wr = expected_weights.row_index(day);
        if (!wr) {
            miss(report.vga_weights, "row " + day, "missing from expected weights");
        } else {
            for (std::size_t i = 0; i < row.values.size(); ++i) {
                const std::size_t c = row.col_indices[i];
                const std::string where =
                    "row " + day + " col " + data.col_labels[c];
                if (c >= expected_weights.cols() || !expected_weights.cells[*wr][c]) {
                    miss(report.vga_weights, where, "expected weight missing");
                    continue;
                }
                report.vga_weights.record(round_4dp(row.weights[i]),
                                          *expected_weights.cells[*wr][c], kWeightTol, where);
            }
        }

        const auto vr = expected_vga.row_index(day);
        if (!vr || expected_vga.cols() < 1 || !expected_vga.cells[*vr][0])
            miss(report.vga_aggregates, "row " + day, "missing from expected aggregates");
        else
            report.vga_aggregates.record(row.vga_value, *expected_vga.cells[*vr][0], kVgaTol,
                                         "row " + day);

        const auto orow = expected_owa.row_index(day);
        for (std::size_t a = 0; a < agg.alphas.size(); ++a) {
            // Find the expected column for this alpha, if the filter kept one.
            const double alpha = agg.alphas[a];
            const std::pair<std::size_t, double>* match = nullptr;
            for (const auto& col : owa_columns)
                if (std::abs(col.second - alpha) < 1e-12) match = &col;
            if (!match) continue;

            const std::string where = "row " + day + " alpha " +
                                      expected_owa.col_labels[match->first];
            if (!orow || !expected_owa.cells[*orow][match->first]) {
                miss(report.owa_aggregates, where, "expected value missing");
                continue;
            }
            const double tolerance = std::abs(alpha - 0.5) < 1e-12 ? kOwaTolHalf : kOwaTolOther;
            report.owa_aggregates.record(row.owa_values[a],
                                         *expected_owa.cells[*orow][match->first], tolerance,
                                         where);
        }
    }
    return report;
}

namespace {

void write_table(const TableComparison& table, std::ostream& out) {
    out << std::left << std::setw(16) << (table.name + ":")
        << (table.pass() ? "PASS" : "FAIL") << "  cells=" << table.cells_compared
        << "  max_abs_dev=" << std::fixed << std::setprecision(4) << table.max_abs_deviation
        << '\n';
    out.unsetf(std::ios_base::floatfield);
    for (const std::string& note : table.failure_notes) out << "  FAIL " << note << '\n';
}

} // namespace

void write_report(const ReplicationReport& report, std::ostream& out) {
    write_table(report.vga_weights, out);
    write_table(report.vga_aggregates, out);
    write_table(report.owa_aggregates, out);
    out << "result: " << (report.pass() ? "PASS" : "FAIL") << '\n';
}

} // namespace visagg
