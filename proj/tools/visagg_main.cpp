#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "visagg/aggregate.hpp"
#include "visagg/errors.hpp"
#include "visagg/generators.hpp"
#include "visagg/owa.hpp"
#include "visagg/panel.hpp"
#include "visagg/profiles.hpp"
#include "visagg/replication.hpp"
#include "visagg/visibility.hpp"

namespace {

using namespace visagg;

constexpr int kExitOk = 0;
constexpr int kExitToleranceFailure = 1;
constexpr int kExitInputError = 2;

// Shortest round-trip decimal form; keeps generated files byte-identical.
std::string format_full(double value) {
    char buffer[32];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, result.ptr);
}

std::string format_fixed(double value, int decimals) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(decimals) << value;
    return out.str();
}

std::vector<double> parse_inline_values(const std::string& text) {
    std::vector<double> values;
    std::stringstream in(text);
    std::string item;
    std::size_t position = 0;
    while (std::getline(in, item, ',')) {
        ++position;
        std::size_t consumed = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &consumed);
        } catch (const std::exception&) {
            consumed = 0;
        }
        // tolerate surrounding whitespace
        while (consumed < item.size() && std::isspace(static_cast<unsigned char>(item[consumed])))
            ++consumed;
        if (consumed != item.size() || item.empty())
            throw ingestion_error("cannot parse value " + std::to_string(position) + " ('" +
                                  item + "') in inline list");
        values.push_back(v);
    }
    if (values.empty()) throw ingestion_error("empty value list");
    return values;
}

std::vector<double> read_series_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ingestion_error("cannot open '" + path + "'");
    std::vector<double> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        if (line_no == 1 && line.find(',') != std::string::npos)
            throw ingestion_error(
                "'" + path + "' looks like a panel CSV; use the `panel` subcommand", 1, 1);
        std::size_t consumed = 0;
        double v = 0.0;
        try {
            v = std::stod(line, &consumed);
        } catch (const std::exception&) {
            consumed = 0;
        }
        if (consumed != line.size())
            throw ingestion_error("unparsable value '" + line + "'", line_no, 1);
        values.push_back(v);
    }
    if (values.empty()) throw ingestion_error("'" + path + "' contains no values");
    return values;
}

// Existing file wins; otherwise the argument is an inline comma list.
TimeSeries load_series(const std::string& input) {
    if (std::filesystem::exists(input)) return TimeSeries(read_series_file(input));
    return TimeSeries(parse_inline_values(input));
}

// Writes to the given path, or stdout when the path is empty.
void emit(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ingestion_error("cannot write '" + path + "'");
    out << content;
}

VisibilityGraph build_with_engine(const TimeSeries& series, const std::string& engine) {
    return engine == "oracle" ? build_graph_oracle(series) : build_graph_fast(series);
}

// ---- graph ----------------------------------------------------------------

int run_graph(const std::string& input, const std::string& engine, bool as_json,
              const std::string& out_path) {
    const TimeSeries series = load_series(input);
    const VisibilityGraph graph = build_with_engine(series, engine);
    const WeightVector weights =
        graph.vertex_count() > 0 ? vga_weights(graph) : WeightVector{};

    std::ostringstream out;
    if (as_json) {
        nlohmann::json j;
        j["engine"] = engine;
        j["n"] = graph.vertex_count();
        j["edges"] = nlohmann::json::array();
        for (const auto& [a, b] : graph.edges()) j["edges"].push_back({a, b});
        j["degrees"] = graph.degrees();
        j["weights"] = weights.values();
        out << j.dump(2) << '\n';
    } else {
        out << "n=" << graph.vertex_count() << " edges=" << graph.edge_count() << '\n';
        out << "# edges (i j)\n";
        write_edge_list(graph, out);
        out << "# vertex degree weight\n";
        for (std::size_t v = 0; v < graph.vertex_count(); ++v)
            out << v << ' ' << graph.degree(v) << ' ' << format_fixed(weights[v], 4) << '\n';
    }
    emit(out_path, out.str());
    return kExitOk;
}

// ---- aggregate ------------------------------------------------------------

int run_aggregate(const std::string& input, const std::string& method,
                  const std::vector<double>& alphas, const std::string& rounding,
                  bool as_json, const std::string& out_path) {
    const TimeSeries series = load_series(input);
    const WeightRounding mode =
        rounding == "4dp" ? WeightRounding::four_dp : WeightRounding::exact;

    struct Entry {
        AggregationResult result;
        std::optional<double> alpha;
    };
    std::vector<Entry> entries;

    if (method == "vga") {
        entries.push_back({vga_aggregate(series), std::nullopt});
    } else if (method == "mean") {
        const double mean = arithmetic_mean(series.values());
        WeightVector w(std::vector<double>(series.size(), 1.0 / series.size()));
        entries.push_back({{mean, std::move(w), Method::mean}, std::nullopt});
    } else {
        for (double alpha : alphas) {
            const OwaSpec spec{series.size(), alpha};
            entries.push_back({owa_aggregate(series.values(), spec, mode), alpha});
        }
    }

    std::ostringstream out;
    if (as_json) {
        nlohmann::json j = nlohmann::json::array();
        for (const Entry& e : entries) {
            nlohmann::json item;
            item["method"] = to_string(e.result.method);
            item["n"] = series.size();
            if (e.alpha) item["alpha"] = *e.alpha;
            if (method == "owa") item["rounding"] = rounding;
            item["value"] = e.result.value;
            item["weights"] = e.result.weights.values();
            j.push_back(std::move(item));
        }
        out << j.dump(2) << '\n';
    } else {
        for (const Entry& e : entries) {
            out << "method=" << to_string(e.result.method) << " n=" << series.size();
            if (e.alpha) out << " alpha=" << *e.alpha << " rounding=" << rounding;
            out << '\n';
            out << "value=" << format_fixed(e.result.value, 2) << '\n';
            out << "weights=";
            for (std::size_t i = 0; i < e.result.weights.size(); ++i)
                out << (i ? " " : "") << format_fixed(e.result.weights[i], 4);
            out << '\n';
        }
    }
    emit(out_path, out.str());
    return kExitOk;
}

// ---- generate ---------------------------------------------------------------

int run_generate(const GeneratorSpec& spec, const std::string& out_path) {
    const TimeSeries series = generate(spec);
    std::ostringstream out;
    for (const TimePoint& p : series.points()) out << format_full(p.y) << '\n';
    emit(out_path, out.str());
    return kExitOk;
}

// ---- panel ------------------------------------------------------------------

int run_panel(const std::string& path, const std::vector<double>& alphas,
              const std::string& rounding, const std::string& abscissa,
              const std::string& out_path, const std::string& weights_path,
              const std::string& json_path) {
    const PanelTable table = parse_panel_file(path);
    const PanelAggregation agg = aggregate_panel(
        table, alphas, rounding == "4dp" ? WeightRounding::four_dp : WeightRounding::exact,
        abscissa == "ordinal" ? PanelAbscissa::ordinal : PanelAbscissa::column_label);

    for (const std::string& label : agg.skipped_rows)
        std::cerr << "warning: row " << label << " has no values; skipped\n";

    std::ostringstream results;
    write_results_csv(agg, results);
    emit(out_path, results.str());

    if (!weights_path.empty()) {
        std::ostringstream weights;
        write_weights_csv(agg, table, weights);
        emit(weights_path, weights.str());
    }
    if (!json_path.empty()) emit(json_path, to_json(agg, table) + "\n");
    return kExitOk;
}

// ---- replicate --------------------------------------------------------------

int run_replicate(const std::string& data_path, std::string weights_path,
                  std::string aggregates_path, std::string owa_path,
                  const std::vector<double>& alphas) {
    namespace fs = std::filesystem;
    const fs::path dir = fs::path(data_path).parent_path();
    if (weights_path.empty()) weights_path = (dir / "expected_vga_weights.csv").string();
    if (aggregates_path.empty())
        aggregates_path = (dir / "expected_vga_aggregates.csv").string();
    if (owa_path.empty()) owa_path = (dir / "expected_owa_aggregates.csv").string();

    const PanelTable data = parse_panel_file(data_path);
    const PanelTable expected_weights = parse_panel_file(weights_path);
    const PanelTable expected_aggregates = parse_panel_file(aggregates_path);
    const PanelTable expected_owa = parse_panel_file(owa_path);

    const ReplicationReport report = replicate_panel_study(
        data, expected_weights, expected_aggregates, expected_owa, alphas);
    write_report(report, std::cout);
    return report.pass() ? kExitOk : kExitToleranceFailure;
}

// ---- selftest ---------------------------------------------------------------

int run_selftest() {
    int failures = 0;
    const auto check = [&failures](bool ok, const std::string& what) {
        std::cout << (ok ? "[ok]   " : "[FAIL] ") << what << '\n';
        if (!ok) ++failures;
    };

    const TimeSeries example{40, 45, 70, 50, 85, 55, 70, 75};
    const VisibilityGraph fast = build_graph_fast(example);
    check(fast.degrees() == std::vector<std::size_t>{2, 2, 4, 2, 5, 2, 3, 2},
          "worked-example degrees");
    check(fast == build_graph_oracle(example), "worked-example engines agree");
    check(std::abs(vga_aggregate(example).value - 65.68) < 0.01, "worked-example aggregate");
    check(!visible(TimeSeries{1, 2, 3}, 0, 2), "collinear point blocks");
    check(vga_aggregate(TimeSeries{42.0}).value == 42.0, "single value aggregates to itself");

    check(round_4dp(owa_solve_w1({8, 0.9})) == 0.5864, "first-weight solve n=8");
    check(round_4dp(owa_solve_w1({10, 0.6})) == 0.1569, "first-weight solve n=10");
    const WeightVector w9 = owa_weights({9, 0.9});
    check(round_4dp(w9[0]) == 0.5540 && round_4dp(w9[8]) == 0.0009, "weight chain n=9");

    bool orness_ok = true;
    for (std::size_t n = 3; n <= 12 && orness_ok; ++n)
        for (int k = 1; k <= 19; ++k)
            if (std::abs(orness(owa_weights({n, k / 20.0})) - k / 20.0) > 1e-6) {
                orness_ok = false;
                break;
            }
    check(orness_ok, "orness round trip on the weight grid");

    bool engines_agree = true;
    SplitMix64 lengths(0x5e1f7e57);
    for (int trial = 0; trial < 200 && engines_agree; ++trial) {
        GeneratorSpec spec;
        spec.kind = SeriesKind::uniform_random;
        spec.length = 1 + lengths.next_below(120);
        spec.seed = 900 + static_cast<std::uint64_t>(trial);
        const TimeSeries s = generate(spec);
        engines_agree = build_graph_fast(s) == build_graph_oracle(s);
    }
    check(engines_agree, "engines agree on 200 random series");

    const AggregationResult constant =
        vga_aggregate(TimeSeries(std::vector<double>(40, 3.25)));
    check(std::abs(constant.value - 3.25) < 1e-12, "idempotency");

    std::cout << (failures == 0 ? "selftest: PASS\n" : "selftest: FAIL\n");
    return failures == 0 ? kExitOk : kExitToleranceFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"visibility-graph construction and time-series aggregation"};
    app.require_subcommand(1);

    std::string input, out_path, weights_out, json_out;
    std::string engine = "fast", method = "vga", rounding = "exact", abscissa = "calendar";
    std::vector<double> alphas;
    bool as_json = false;

    auto* graph = app.add_subcommand("graph", "build the visibility graph of a series");
    graph->add_option("input", input, "series file (one value per line) or inline list a,b,c")
        ->required();
    graph->add_option("--engine", engine, "construction engine")
        ->check(CLI::IsMember({"fast", "oracle"}));
    graph->add_flag("--json", as_json, "emit full-precision JSON");
    graph->add_option("--out", out_path, "write output to a file instead of stdout");

    auto* aggregate = app.add_subcommand("aggregate", "aggregate a series into one value");
    aggregate
        ->add_option("input", input, "series file (one value per line) or inline list a,b,c")
        ->required();
    aggregate->add_option("--method", method, "aggregation operator")
        ->check(CLI::IsMember({"vga", "owa", "mean"}));
    aggregate->add_option("--alphas", alphas, "orness levels for --method owa")
        ->delimiter(',')
        ->check(CLI::Range(0.0, 1.0));
    aggregate->add_option("--rounding", rounding, "owa weight rounding")
        ->check(CLI::IsMember({"exact", "4dp"}));
    aggregate->add_flag("--json", as_json, "emit full-precision JSON");
    aggregate->add_option("--out", out_path, "write output to a file instead of stdout");

    GeneratorSpec gen_spec;
    std::string kind = "periodic";
    std::uint64_t seed = 0;
    bool seed_given = false;
    auto* generate_cmd = app.add_subcommand("generate", "emit a deterministic test series");
    generate_cmd->add_option("--kind", kind, "series family")
        ->check(CLI::IsMember({"periodic", "conway", "spiked-periodic", "uniform-random"}));
    generate_cmd->add_option("--length", gen_spec.length, "number of samples")->required();
    generate_cmd->add_option("--pattern", gen_spec.pattern, "repeating pattern values")
        ->delimiter(',');
    generate_cmd->add_option("--spike-position", gen_spec.spike_position,
                             "0-based index replaced by the spike");
    generate_cmd->add_option("--spike-height", gen_spec.spike_height, "spike value");
    generate_cmd->add_option("--seed", seed, "seed for uniform-random")
        ->each([&seed_given](const std::string&) { seed_given = true; });
    generate_cmd->add_option("--out", out_path, "write output to a file instead of stdout");

    auto* panel = app.add_subcommand("panel", "aggregate every row of a panel CSV");
    panel->add_option("input", input, "panel CSV path")->required();
    panel->add_option("--alphas", alphas, "orness levels to aggregate at")
        ->delimiter(',')
        ->check(CLI::Range(0.0, 1.0));
    panel->add_option("--rounding", rounding, "owa weight rounding")
        ->check(CLI::IsMember({"exact", "4dp"}));
    panel->add_option("--abscissa", abscissa, "row placement on the time axis")
        ->check(CLI::IsMember({"calendar", "ordinal"}));
    panel->add_option("--out", out_path, "results CSV path (default stdout)");
    panel->add_option("--weights-out", weights_out, "long-format weights CSV path");
    panel->add_option("--json-out", json_out, "full-precision JSON mirror path");

    std::string expected_weights, expected_aggregates, expected_owa;
    auto* replicate = app.add_subcommand(
        "replicate", "compare panel aggregation against the reference tables");
    replicate->add_option("input", input, "panel CSV path")->required();
    replicate->add_option("--expected-weights", expected_weights,
                          "reference weight table (default: sibling of input)");
    replicate->add_option("--expected-aggregates", expected_aggregates,
                          "reference aggregate table (default: sibling of input)");
    replicate->add_option("--expected-owa", expected_owa,
                          "reference ordered-average table (default: sibling of input)");
    replicate->add_option("--alphas", alphas, "restrict the ordered-average comparison")
        ->delimiter(',')
        ->check(CLI::Range(0.0, 1.0));

    app.add_subcommand("selftest", "run built-in correctness checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (app.got_subcommand("graph")) return run_graph(input, engine, as_json, out_path);
        if (app.got_subcommand("aggregate")) {
            if (method == "owa" && alphas.empty()) alphas = {0.5};
            return run_aggregate(input, method, alphas, rounding, as_json, out_path);
        }
        if (app.got_subcommand("generate")) {
            if (kind == "periodic") gen_spec.kind = SeriesKind::periodic;
            if (kind == "conway") gen_spec.kind = SeriesKind::conway;
            if (kind == "spiked-periodic") gen_spec.kind = SeriesKind::spiked_periodic;
            if (kind == "uniform-random") gen_spec.kind = SeriesKind::uniform_random;
            if (seed_given) gen_spec.seed = seed;
            return run_generate(gen_spec, out_path);
        }
        if (app.got_subcommand("panel")) {
            if (alphas.empty()) alphas = {0.1, 0.5, 0.6, 0.9};
            return run_panel(input, alphas, rounding, abscissa, out_path, weights_out,
                             json_out);
        }
        if (app.got_subcommand("replicate")) {
            if (alphas.empty()) alphas = {0.1, 0.5, 0.6, 0.9};
            return run_replicate(input, expected_weights, expected_aggregates, expected_owa,
                                 alphas);
        }
        if (app.got_subcommand("selftest")) return run_selftest();
    } catch (const ingestion_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const contract_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const solver_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitToleranceFailure;
    }
    return kExitOk;
}
