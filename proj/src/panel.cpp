#include "visagg/panel.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "visagg/errors.hpp"
#include "visagg/visibility.hpp"

namespace visagg {

std::size_t PanelTable::present_in_row(std::size_t r) const {
    std::size_t k = 0;
    for (const auto& cell : cells[r]) k += cell.has_value() ? 1 : 0;
    return k;
}

std::optional<std::size_t> PanelTable::row_index(const std::string& label) const {
    for (std::size_t r = 0; r < row_labels.size(); ++r)
        if (row_labels[r] == label) return r;
    return std::nullopt;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// One CSV record. Fields may be double-quoted; a quoted field can contain
// the delimiter and doubled quotes.
std::vector<std::string> split_record(const std::string& line, char delimiter,
                                      std::size_t line_no) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += ch;
            }
        } else if (ch == '"' && trim(field).empty()) {
            quoted = true;
            field.clear();
        } else if (ch == delimiter) {
            fields.push_back(trim(field));
            field.clear();
        } else {
            field += ch;
        }
    }
    if (quoted) throw ingestion_error("unterminated quote", line_no, fields.size() + 1);
    fields.push_back(trim(field));
    return fields;
}

std::optional<double> parse_cell(std::string text, const PanelCsvOptions& options,
                                 std::size_t line_no, std::size_t column_no) {
    if (options.thousands_separator != 0) {
        std::string cleaned;
        cleaned.reserve(text.size());
        for (char ch : text)
            if (ch != options.thousands_separator) cleaned += ch;
        text = std::move(cleaned);
    }
    text = trim(text);
    if (text.empty()) return std::nullopt;

    std::size_t consumed = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &consumed);
    } catch (const std::exception&) {
        throw ingestion_error("unparsable numeral '" + text + "'", line_no, column_no);
    }
    if (consumed != text.size() || !std::isfinite(value))
        throw ingestion_error("unparsable numeral '" + text + "'", line_no, column_no);
    return value;
}

} // namespace

PanelTable parse_panel(std::istream& in, const PanelCsvOptions& options) {
    PanelTable table;
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(in, line)) throw ingestion_error("empty input: missing header row");
    ++line_no;
    std::vector<std::string> header = split_record(line, options.delimiter, line_no);
    if (header.size() < 2)
        throw ingestion_error("header must name at least one column", line_no, 1);
    table.col_labels.assign(header.begin() + 1, header.end());

    std::set<std::string> seen;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        std::vector<std::string> fields = split_record(line, options.delimiter, line_no);
        if (fields.size() != header.size())
            throw ingestion_error("ragged row: expected " + std::to_string(header.size()) +
                                      " fields, got " + std::to_string(fields.size()),
                                  line_no, fields.size());
        const std::string label = fields[0];
        if (label.empty()) throw ingestion_error("missing row label", line_no, 1);
        if (!seen.insert(label).second)
            throw ingestion_error("duplicate row label '" + label + "'", line_no, 1);

        std::vector<std::optional<double>> row;
        row.reserve(table.col_labels.size());
        for (std::size_t c = 1; c < fields.size(); ++c)
            row.push_back(parse_cell(fields[c], options, line_no, c + 1));
        table.row_labels.push_back(label);
        table.cells.push_back(std::move(row));
    }
    return table;
}

PanelTable parse_panel_file(const std::string& path, const PanelCsvOptions& options) {
    std::ifstream in(path);
    if (!in) throw ingestion_error("cannot open '" + path + "'");
    return parse_panel(in, options);
}

namespace {

std::vector<double> column_abscissas(const PanelTable& table) {
    std::vector<double> t(table.cols());
    for (std::size_t c = 0; c < table.cols(); ++c) {
        const std::string& label = table.col_labels[c];
        std::size_t consumed = 0;
        try {
            t[c] = std::stod(label, &consumed);
        } catch (const std::exception&) {
            consumed = 0;
        }
        if (consumed != label.size())
            throw contract_error("column label '" + label +
                                 "' is not numeric; use ordinal abscissas");
    }
    return t;
}

} // namespace

PanelAggregation aggregate_panel(const PanelTable& table, std::span<const double> alphas,
                                 WeightRounding rounding, PanelAbscissa abscissa) {
    PanelAggregation out;
    out.alphas.assign(alphas.begin(), alphas.end());
    out.rounding = rounding;
    out.abscissa = abscissa;

    std::vector<double> col_t;
    if (abscissa == PanelAbscissa::column_label) col_t = column_abscissas(table);

    for (std::size_t r = 0; r < table.rows(); ++r) {
        RowResult row;
        row.label = table.row_labels[r];
        for (std::size_t c = 0; c < table.cols(); ++c) {
            if (table.cells[r][c].has_value()) {
                row.col_indices.push_back(c);
                row.values.push_back(*table.cells[r][c]);
            }
        }
        if (row.values.empty()) {
            out.skipped_rows.push_back(row.label);
            continue;
        }

        std::vector<TimePoint> points;
        points.reserve(row.values.size());
        for (std::size_t i = 0; i < row.values.size(); ++i) {
            const double t = abscissa == PanelAbscissa::column_label
                                 ? col_t[row.col_indices[i]]
                                 : static_cast<double>(i + 1);
            points.push_back({t, row.values[i]});
        }
        const TimeSeries series(std::move(points));
        const VisibilityGraph graph = build_graph_fast(series);
        row.degrees = graph.degrees();
        row.weights = vga_weights(graph);
        row.vga_value = 0.0;
        for (std::size_t i = 0; i < row.values.size(); ++i)
            row.vga_value += row.weights[i] * row.values[i];

        row.owa_values.reserve(out.alphas.size());
        for (double alpha : out.alphas) {
            const OwaSpec spec{row.values.size(), alpha};
            row.owa_values.push_back(owa_aggregate(row.values, spec, rounding).value);
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

namespace {

std::string alpha_label(double alpha) {
    std::ostringstream s;
    s << alpha; // default precision trims trailing zeros: 0.1, 0.5, ...
    return s.str();
}

} // namespace

void write_results_csv(const PanelAggregation& agg, std::ostream& out) {
    out << "day,k,vga";
    for (double alpha : agg.alphas) out << ",owa@" << alpha_label(alpha);
    out << '\n';
    out << std::fixed << std::setprecision(2);
    for (const RowResult& row : agg.rows) {
        out << row.label << ',' << row.values.size() << ',' << row.vga_value;
        for (double v : row.owa_values) out << ',' << v;
        out << '\n';
    }
    out.unsetf(std::ios_base::floatfield);
}

void write_weights_csv(const PanelAggregation& agg, const PanelTable& table,
                       std::ostream& out) {
    out << "day,position,column,degree,weight\n";
    for (const RowResult& row : agg.rows) {
        for (std::size_t i = 0; i < row.values.size(); ++i) {
            out << row.label << ',' << (i + 1) << ',' << table.col_labels[row.col_indices[i]]
                << ',' << row.degrees[i] << ',' << std::fixed << std::setprecision(4)
                << row.weights[i] << '\n';
            out.unsetf(std::ios_base::floatfield);
        }
    }
}

std::string to_json(const PanelAggregation& agg, const PanelTable& table) {
    nlohmann::json j;
    j["alphas"] = agg.alphas;
    j["rounding"] = agg.rounding == WeightRounding::exact ? "exact" : "4dp";
    j["abscissa"] = agg.abscissa == PanelAbscissa::column_label ? "calendar" : "ordinal";
    j["rows"] = nlohmann::json::array();
    for (const RowResult& row : agg.rows) {
        nlohmann::json jr;
        jr["day"] = row.label;
        jr["k"] = row.values.size();
        nlohmann::json columns = nlohmann::json::array();
        for (std::size_t c : row.col_indices) columns.push_back(table.col_labels[c]);
        jr["columns"] = std::move(columns);
        jr["values"] = row.values;
        jr["degrees"] = row.degrees;
        jr["weights"] = row.weights.values();
        jr["vga"] = row.vga_value;
        nlohmann::json owa = nlohmann::json::object();
        for (std::size_t a = 0; a < agg.alphas.size(); ++a)
            owa[alpha_label(agg.alphas[a])] = row.owa_values[a];
        jr["owa"] = std::move(owa);
        j["rows"].push_back(std::move(jr));
    }
    j["skipped"] = agg.skipped_rows;
    return j.dump(2);
}

} // namespace visagg
