#pragma once

#include <optional>
#include <string>

#include "kflann/eval.hpp"
#include "kflann/kflann.hpp"

namespace kflann {

enum class ReportFormat { json, csv, md };

ReportFormat report_format_from_string(const std::string& s);

/// Everything one experiment produced. Serializes deterministically: the
/// same config and seed yield byte-identical output.
struct RunReport {
    std::string dataset;
    std::string normalization;      // none | zscore | minmax
    std::string tolerance_method;   // stddev | maxmin | manual
    double vigilance = 0.0;
    std::size_t clusters = 0;
    std::optional<double> error_rate_percent;
    int epochs = 0;
    bool converged = false;
    std::optional<TuningResult> tuning;
};

inline constexpr const char* kReportCsvHeader =
    "dataset,normalization,tolerance_method,vigilance,clusters,error_rate_percent,"
    "epochs,converged";

std::string to_json(const RunReport& report);
std::string to_csv_row(const RunReport& report);
std::string to_markdown(const RunReport& report);
std::string render(const RunReport& report, ReportFormat format);

/// Sweep rows as plot-ready CSV: rho,clusters,error_rate_percent.
std::string sweep_to_csv(const SweepResult& sweep);

/// Shortest decimal form of `v` that parses back to the same double.
std::string format_double(double v);

}  // namespace kflann
