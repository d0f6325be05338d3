#include "bench.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "kflann/eval.hpp"
#include "kflann/kflann.hpp"
#include "kflann/preprocess.hpp"
#include "kflann/synth.hpp"
#include "kflann/tolerance.hpp"

namespace kflann::bench {
namespace {

BenchRow run_reference_row(const RefRow& ref, const std::vector<ManifestEntry>& manifest,
                           std::uint64_t seed) {
    BenchRow row;
    row.ref = ref;
    const std::string name = ref.dataset;
    try {
        Dataset ds = [&] {
            if (name.rfind("synth", 0) == 0) return generate(preset(name.back() - '0', seed));
            auto it = std::find_if(manifest.begin(), manifest.end(),
                                   [&](const ManifestEntry& e) { return e.name == name; });
            if (it == manifest.end()) throw std::runtime_error("not listed in the manifest");
            if (!std::filesystem::exists(it->path))
                throw std::runtime_error("data file not present");
            return load_from_manifest(*it);
        }();

        auto [normalized, spec] =
            normalize(ds, norm_method_from_string(ref.normalization), 0.0, 1.0);
        const FeatureStats stats = fit_stats(normalized);  // on the data actually clustered
        ToleranceVector delta = std::string(ref.tolerance) == "stddev" ? tolerance_stddev(stats)
                                                                       : tolerance_maxmin(stats);
        KflannParams params{ref.vigilance, delta, 100};

        if (ref.table == 9) {
            TuningResult tuned = tune_tolerance(normalized, params, *ds.expected_clusters(), 50);
            params.tolerance = tuned.delta;
            row.tuned = true;
        }
        KflannModel model = fit(normalized, params);
        row.clusters = model.cluster_count();
        row.epochs = model.epochs_run;
        row.converged = model.converged;
        if (normalized.labeled()) row.error = error_rate(model, normalized).error_rate_percent;
    } catch (const std::exception& e) {
        row.status = std::string("skipped: ") + e.what();
    }
    return row;
}

}  // namespace

std::vector<BenchRow> run_tables(const std::vector<int>& tables,
                                 const std::vector<ManifestEntry>& manifest,
                                 std::uint64_t seed) {
    std::vector<BenchRow> rows;
    for (int table : tables)
        for (const RefRow& ref : kReferenceRows)
            if (ref.table == table) rows.push_back(run_reference_row(ref, manifest, seed));
    return rows;
}

std::string to_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "table,dataset,normalization,tolerance_method,vigilance,ref_clusters,clusters,"
           "ref_error_percent,error_rate_percent,error_delta,epochs,converged,status\n";
    for (const BenchRow& r : rows) {
        out << r.ref.table << ',' << r.ref.dataset << ',' << r.ref.normalization << ','
            << r.ref.tolerance << ',' << format_double(r.ref.vigilance) << ','
            << r.ref.ref_clusters << ',';
        if (r.status == "ok") {
            out << r.clusters << ',' << format_double(r.ref.ref_error) << ','
                << (r.error ? format_double(*r.error) : "") << ','
                << (r.error ? format_double(*r.error - r.ref.ref_error) : "") << ',' << r.epochs
                << ',' << (r.converged ? "true" : "false") << ",ok";
        } else {
            out << ',' << format_double(r.ref.ref_error) << ",,,,," << '"' << r.status << '"';
        }
        out << '\n';
    }
    return out.str();
}

std::string to_markdown(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "| table | dataset | norm | tolerance | rho | ref k | k | ref err % | err % | delta "
           "| status |\n";
    out << "|---|---|---|---|---|---|---|---|---|---|---|\n";
    for (const BenchRow& r : rows) {
        out << "| " << r.ref.table << " | " << r.ref.dataset << " | " << r.ref.normalization
            << " | " << r.ref.tolerance << " | " << format_double(r.ref.vigilance) << " | "
            << r.ref.ref_clusters << " | ";
        if (r.status == "ok") {
            out << r.clusters << " | " << format_double(r.ref.ref_error) << " | "
                << (r.error ? format_double(*r.error) : "-") << " | "
                << (r.error ? format_double(*r.error - r.ref.ref_error) : "-") << " | ok |\n";
        } else {
            out << "- | " << format_double(r.ref.ref_error) << " | - | - | " << r.status
                << " |\n";
        }
    }
    return out.str();
}

std::string to_json(const std::vector<BenchRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const BenchRow& r : rows) {
        nlohmann::ordered_json j;
        j["table"] = r.ref.table;
        j["dataset"] = r.ref.dataset;
        j["normalization"] = r.ref.normalization;
        j["tolerance_method"] = r.ref.tolerance;
        j["vigilance"] = r.ref.vigilance;
        j["ref_clusters"] = r.ref.ref_clusters;
        j["ref_error_percent"] = r.ref.ref_error;
        j["status"] = r.status;
        if (r.status == "ok") {
            j["clusters"] = r.clusters;
            if (r.error) {
                j["error_rate_percent"] = *r.error;
                j["error_delta"] = *r.error - r.ref.ref_error;
            }
            j["epochs"] = r.epochs;
            j["converged"] = r.converged;
            j["tuned"] = r.tuned;
        }
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::string render(const std::vector<BenchRow>& rows, ReportFormat format) {
    switch (format) {
        case ReportFormat::json: return to_json(rows);
        case ReportFormat::csv: return to_csv(rows);
        case ReportFormat::md: return to_markdown(rows);
    }
    return to_json(rows);
}

}  // namespace kflann::bench
