#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "visagg/aggregate.hpp"
#include "visagg/owa.hpp"

namespace visagg {

/// Labeled grid of optional observations: rows are day labels, columns are
/// year labels, cells may be missing.
struct PanelTable {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::vector<std::vector<std::optional<double>>> cells; // rows x cols

    std::size_t rows() const { return row_labels.size(); }
    std::size_t cols() const { return col_labels.size(); }
    std::size_t present_in_row(std::size_t r) const;
    std::optional<std::size_t> row_index(const std::string& label) const;
};

struct PanelCsvOptions {
    char delimiter = ',';
    /// Stripped from numeric fields before parsing ("5,342.06" style values,
    /// which must be quoted when they contain the delimiter). 0 disables.
    char thousands_separator = ',';
};

/// Parses a panel CSV: header row of year labels (first field is a corner
/// label and is ignored), then one row per day. Blank cells are missing.
/// Ragged rows, unparsable numerals and duplicate row labels raise
/// ingestion_error with the offending line/column.
PanelTable parse_panel(std::istream& in, const PanelCsvOptions& options = {});
PanelTable parse_panel_file(const std::string& path, const PanelCsvOptions& options = {});

/// How a row's present values are placed on the time axis.
///
/// column_label keeps each value at its numeric column coordinate (the year
/// for calendar panels), so a gap widens the span an edge's chord must
/// clear; this is the placement under which the reference tables reproduce.
/// ordinal compacts the k present values onto abscissas 1..k.
enum class PanelAbscissa { column_label, ordinal };

/// Aggregates for one panel row. Present values are taken in column order;
/// their abscissas follow the PanelAbscissa mode.
struct RowResult {
    std::string label;
    std::vector<std::size_t> col_indices;   // columns holding the k present cells
    std::vector<double> values;             // the k present values
    std::vector<std::size_t> degrees;       // visibility degrees per position
    WeightVector weights;                   // VGA weights per position
    double vga_value = 0.0;
    std::vector<double> owa_values;         // parallel to the alpha list
};

struct PanelAggregation {
    std::vector<RowResult> rows;            // aggregable rows, input order
    std::vector<std::string> skipped_rows;  // labels of rows with no values
    std::vector<double> alphas;
    WeightRounding rounding = WeightRounding::exact;
    PanelAbscissa abscissa = PanelAbscissa::column_label;
};

/// column_label mode requires every column label to parse as a number.
PanelAggregation aggregate_panel(const PanelTable& table, std::span<const double> alphas,
                                 WeightRounding rounding = WeightRounding::exact,
                                 PanelAbscissa abscissa = PanelAbscissa::column_label);

/// results CSV: day, k, vga, one column per alpha. Aggregates at 2 decimals.
void write_results_csv(const PanelAggregation& agg, std::ostream& out);

/// long-format weights CSV: day, position, column, degree, weight (4 decimals).
void write_weights_csv(const PanelAggregation& agg, const PanelTable& table, std::ostream& out);

/// JSON mirror of both tables with full-precision values.
std::string to_json(const PanelAggregation& agg, const PanelTable& table);

} // namespace visagg
