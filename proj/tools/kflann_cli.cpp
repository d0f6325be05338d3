#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bench.hpp"
#include "kflann/dataset.hpp"
#include "kflann/eval.hpp"
#include "kflann/kflann.hpp"
#include "kflann/preprocess.hpp"
#include "kflann/report.hpp"
#include "kflann/synth.hpp"
#include "kflann/tolerance.hpp"

namespace {

using namespace kflann;

constexpr const char* kManifestEnvVar = "KFLANN_MANIFEST";

double parse_vigilance(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            const double num = std::stod(text.substr(0, slash));
            const double den = std::stod(text.substr(slash + 1));
            if (den <= 0) throw std::invalid_argument("zero denominator");
            return num / den;
        }
        return std::stod(text);
    } catch (const std::exception&) {
        throw std::runtime_error("cannot parse vigilance '" + text +
                                 "' (use a decimal or a fraction like 18/34)");
    }
}

std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> grid;
    const auto first_colon = text.find(':');
    if (first_colon != std::string::npos) {
        const auto second_colon = text.find(':', first_colon + 1);
        if (second_colon == std::string::npos)
            throw std::runtime_error("grid must be start:step:stop or a comma list");
        const double start = std::stod(text.substr(0, first_colon));
        const double step = std::stod(text.substr(first_colon + 1, second_colon - first_colon - 1));
        const double stop = std::stod(text.substr(second_colon + 1));
        if (step <= 0) throw std::runtime_error("grid step must be positive");
        if (stop < start) throw std::runtime_error("grid stop must not be below start");
        const double span = (stop - start) / step;
        const long last = std::lround(std::floor(span + 1e-9));
        for (long i = 0; i <= last; ++i) grid.push_back(start + static_cast<double>(i) * step);
        // Land on the endpoint exactly when the step divides the span.
        if (std::abs(span - std::round(span)) < 1e-9) grid.back() = stop;
        return grid;
    }
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) grid.push_back(std::stod(cell));
    return grid;
}

std::vector<double> parse_values(const std::string& text) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) values.push_back(std::stod(cell));
    return values;
}

std::string resolve_manifest_path(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv(kManifestEnvVar); env && *env) return env;
    return "data/manifest.cfg";
}

std::vector<ManifestEntry> load_manifest_or_empty(const std::string& path) {
    if (!std::filesystem::exists(path)) return {};
    return load_manifest(path);
}

struct InputOptions {
    std::string data_path;
    std::string name;
    bool labeled = false;
    int label_column = -1;  // >= 0: explicit index
    std::string manifest;
    std::uint64_t seed = kDefaultSeed;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
    auto* data = cmd->add_option("--data", in.data_path, "CSV file to load");
    auto* name = cmd->add_option(
        "--name", in.name, "dataset name from the manifest, or synth1..synth6");
    cmd->add_flag("--labeled", in.labeled, "treat the last CSV column as the class label");
    cmd->add_option("--label-column", in.label_column, "0-based label column index");
    cmd->add_option("--manifest", in.manifest,
                    "manifest path (default: $KFLANN_MANIFEST or data/manifest.cfg)");
    cmd->add_option("--seed", in.seed, "generator seed for synthetic datasets");
    name->excludes(data);
}

Dataset load_input(const InputOptions& in) {
    if (!in.name.empty()) {
        if (in.name.rfind("synth", 0) == 0 && in.name.size() == 6)
            return generate(preset(in.name.back() - '0', in.seed));
        const std::string path = resolve_manifest_path(in.manifest);
        for (const ManifestEntry& e : load_manifest(path))
            if (e.name == in.name) return load_from_manifest(e);
        throw std::runtime_error("dataset '" + in.name + "' not found in " + path);
    }
    if (in.data_path.empty()) throw std::runtime_error("give either --data or --name");
    if (in.label_column >= 0)
        return load_csv(in.data_path, static_cast<std::size_t>(in.label_column));
    if (in.labeled) return load_csv_labeled(in.data_path);
    return load_csv(in.data_path);
}

struct PipelineOptions {
    std::string normalize = "none";
    double new_min = 0.0;
    double new_max = 1.0;
    std::string tolerance = "maxmin";
    std::string tolerance_values;
    int max_epochs = 100;
    int max_iters = 50;
};

void add_pipeline_options(CLI::App* cmd, PipelineOptions& pipe) {
    cmd->add_option("--normalize", pipe.normalize, "none|zscore|minmax")
        ->check(CLI::IsMember({"none", "zscore", "minmax"}));
    cmd->add_option("--new-min", pipe.new_min, "min-max target lower bound");
    cmd->add_option("--new-max", pipe.new_max, "min-max target upper bound");
    cmd->add_option("--tolerance", pipe.tolerance, "stddev|maxmin|manual")
        ->check(CLI::IsMember({"stddev", "maxmin", "manual"}));
    cmd->add_option("--tolerance-values", pipe.tolerance_values,
                    "comma-separated per-feature tolerances (manual method)");
    cmd->add_option("--max-epochs", pipe.max_epochs, "stability loop bound (default 100)");
    cmd->add_option("--max-iters", pipe.max_iters, "tuning iteration bound (default 50)");
}

ToleranceVector make_tolerance(const PipelineOptions& pipe, const FeatureStats& stats) {
    switch (tolerance_method_from_string(pipe.tolerance)) {
        case ToleranceMethod::stddev: return tolerance_stddev(stats);
        case ToleranceMethod::maxmin: return tolerance_maxmin(stats);
        case ToleranceMethod::manual: {
            if (pipe.tolerance_values.empty())
                throw std::runtime_error("--tolerance manual requires --tolerance-values");
            ToleranceVector t = tolerance_manual(parse_values(pipe.tolerance_values));
            if (t.size() != stats.feature_count())
                throw std::runtime_error("expected " + std::to_string(stats.feature_count()) +
                                         " tolerance values, got " + std::to_string(t.size()));
            return t;
        }
    }
    throw std::runtime_error("unreachable tolerance method");
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error(out_path + ": cannot open for writing");
    out << text;
    std::cerr << "wrote " << out_path << "\n";
}

void write_assignments(const KflannModel& model, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    out << "pattern,node\n";
    for (std::size_t i = 0; i < model.assignments.size(); ++i)
        out << i << ',' << model.assignments[i] << '\n';
    std::cerr << "wrote " << path << "\n";
}

int cmd_run(const InputOptions& in, const PipelineOptions& pipe, const std::string& vigilance,
            bool tune, int expected_clusters, const std::string& format,
            const std::string& out_path, const std::string& assignments_out) {
    Dataset raw = load_input(in);
    const double rho = parse_vigilance(vigilance);
    auto [ds, spec] =
        normalize(raw, norm_method_from_string(pipe.normalize), pipe.new_min, pipe.new_max);
    const FeatureStats stats = fit_stats(ds);  // tolerance from the data fed to the network
    KflannParams params{rho, make_tolerance(pipe, stats), pipe.max_epochs};

    RunReport report;
    report.dataset = ds.name();
    report.normalization = pipe.normalize;
    report.tolerance_method = pipe.tolerance;
    report.vigilance = rho;

    if (tune) {
        int expected = expected_clusters;
        if (expected <= 0 && ds.expected_clusters()) expected = *ds.expected_clusters();
        if (expected <= 0)
            throw std::runtime_error(
                "tuning needs --expected-clusters (or a manifest/synthetic dataset that "
                "declares one)");
        TuningResult tuned = tune_tolerance(ds, params, expected, pipe.max_iters);
        params.tolerance = tuned.delta;
        report.tuning = std::move(tuned);
    }

    KflannModel model = fit(ds, params);
    report.clusters = model.cluster_count();
    report.epochs = model.epochs_run;
    report.converged = model.converged;
    if (ds.labeled()) report.error_rate_percent = error_rate(model, ds).error_rate_percent;

    emit(render(report, report_format_from_string(format)), out_path);
    if (!assignments_out.empty()) write_assignments(model, assignments_out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"KFLANN clustering benchmark driver"};
    app.require_subcommand(1);

    // run / tune
    InputOptions run_in;
    PipelineOptions run_pipe;
    std::string run_vigilance = "1.0";
    bool run_tune = false;
    int run_expected = 0;
    std::string run_format = "json", run_out, run_assignments;
    auto add_run_like = [&](CLI::App* cmd, bool is_tune) {
        add_input_options(cmd, run_in);
        add_pipeline_options(cmd, run_pipe);
        cmd->add_option("--vigilance", run_vigilance, "vigilance in [0,1], decimal or fraction");
        if (!is_tune) cmd->add_flag("--tune", run_tune, "tune the tolerance before fitting");
        cmd->add_option("--expected-clusters", run_expected, "target cluster count for tuning");
        cmd->add_option("--format", run_format, "json|csv|md")
            ->check(CLI::IsMember({"json", "csv", "md"}));
        cmd->add_option("--out", run_out, "write the report here instead of stdout");
        cmd->add_option("--assignments-out", run_assignments,
                        "write pattern->node assignments as CSV");
    };
    CLI::App* run_cmd = app.add_subcommand("run", "one experiment: load, normalize, fit, score");
    add_run_like(run_cmd, false);
    CLI::App* tune_cmd =
        app.add_subcommand("tune", "tune the tolerance to a target cluster count, then fit");
    add_run_like(tune_cmd, true);

    // sweep
    InputOptions sweep_in;
    PipelineOptions sweep_pipe;
    std::string sweep_grid = "0:0.1:1";
    std::string sweep_out;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "cluster counts over a vigilance grid");
    add_input_options(sweep_cmd, sweep_in);
    add_pipeline_options(sweep_cmd, sweep_pipe);
    sweep_cmd->add_option("--grid", sweep_grid, "start:step:stop or comma list");
    sweep_cmd->add_option("--out", sweep_out, "write the CSV here instead of stdout");

    // bench
    std::string bench_table = "all";
    std::string bench_manifest, bench_format = "md", bench_out;
    std::uint64_t bench_seed = kDefaultSeed;
    CLI::App* bench_cmd =
        app.add_subcommand("bench", "reproduce the bundled reference tables (3..9)");
    bench_cmd->add_option("--table", bench_table, "table number 3..9, or 'all'");
    bench_cmd->add_option("--manifest", bench_manifest,
                          "manifest path (default: $KFLANN_MANIFEST or data/manifest.cfg)");
    bench_cmd->add_option("--format", bench_format, "json|csv|md")
        ->check(CLI::IsMember({"json", "csv", "md"}));
    bench_cmd->add_option("--out", bench_out, "write the table here instead of stdout");
    bench_cmd->add_option("--seed", bench_seed, "seed for the synthetic rows");

    // synth
    int synth_preset = 1;
    std::uint64_t synth_seed = kDefaultSeed;
    std::string synth_out;
    CLI::App* synth_cmd = app.add_subcommand("synth", "generate a synthetic dataset as CSV");
    synth_cmd->add_option("--preset", synth_preset, "preset id 1..6")->required();
    synth_cmd->add_option("--seed", synth_seed, "generator seed");
    synth_cmd->add_option("--out", synth_out, "output CSV path")->required();

    // describe
    InputOptions describe_in;
    std::string describe_format = "text";
    CLI::App* describe_cmd = app.add_subcommand("describe", "summarize a dataset");
    add_input_options(describe_cmd, describe_in);
    describe_cmd->add_option("--format", describe_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed())
            return cmd_run(run_in, run_pipe, run_vigilance, run_tune, run_expected, run_format,
                           run_out, run_assignments);
        if (tune_cmd->parsed())
            return cmd_run(run_in, run_pipe, run_vigilance, true, run_expected, run_format,
                           run_out, run_assignments);

        if (sweep_cmd->parsed()) {
            Dataset raw = load_input(sweep_in);
            auto [ds, spec] = normalize(raw, norm_method_from_string(sweep_pipe.normalize),
                                        sweep_pipe.new_min, sweep_pipe.new_max);
            const FeatureStats stats = fit_stats(ds);
            SweepResult sweep = vigilance_sweep(ds, make_tolerance(sweep_pipe, stats),
                                                parse_grid(sweep_grid), sweep_pipe.max_epochs);
            emit(sweep_to_csv(sweep), sweep_out);
            return 0;
        }

        if (bench_cmd->parsed()) {
            std::vector<int> tables;
            if (bench_table == "all")
                tables = {3, 4, 5, 6, 7, 8, 9};
            else
                tables = {std::stoi(bench_table)};
            for (int t : tables)
                if (t < 3 || t > 9) throw std::runtime_error("table must be 3..9 or 'all'");
            auto manifest =
                load_manifest_or_empty(resolve_manifest_path(bench_manifest));
            auto rows = bench::run_tables(tables, manifest, bench_seed);
            emit(bench::render(rows, report_format_from_string(bench_format)), bench_out);
            return 0;
        }

        if (synth_cmd->parsed()) {
            Dataset ds = generate(preset(synth_preset, synth_seed));
            save_csv(ds, synth_out);
            std::cerr << "wrote " << synth_out << " (" << ds.size() << " patterns)\n";
            return 0;
        }

        if (describe_cmd->parsed()) {
            Dataset ds = load_input(describe_in);
            DatasetSummary s = describe(ds);
            if (describe_format == "json") {
                nlohmann::ordered_json j;
                j["dataset"] = ds.name();
                j["patterns"] = s.pattern_count;
                j["features"] = s.feature_count;
                if (s.labeled) j["classes"] = s.class_histogram;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "dataset:  " << ds.name() << "\n"
                          << "patterns: " << s.pattern_count << "\n"
                          << "features: " << s.feature_count << "\n";
                if (s.labeled) {
                    std::cout << "classes: ";
                    for (const auto& [label, count] : s.class_histogram)
                        std::cout << ' ' << label << ':' << count;
                    std::cout << "\n";
                }
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
