#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kflann/dataset.hpp"
#include "kflann/report.hpp"
#include "reference_tables.hpp"

namespace kflann::bench {

struct BenchRow {
    RefRow ref;
    std::string status = "ok";  // "ok" or "skipped: <reason>"
    std::size_t clusters = 0;
    std::optional<double> error;
    int epochs = 0;
    bool converged = false;
    bool tuned = false;
};

/// Run every reference row belonging to the requested tables. Rows whose
/// dataset cannot be loaded are reported as skipped, never fatal. Synthetic
/// rows regenerate their dataset from `seed` and tune the tolerance to the
/// known cluster count before the final fit.
std::vector<BenchRow> run_tables(const std::vector<int>& tables,
                                 const std::vector<ManifestEntry>& manifest,
                                 std::uint64_t seed);

std::string to_csv(const std::vector<BenchRow>& rows);
std::string to_markdown(const std::vector<BenchRow>& rows);
std::string to_json(const std::vector<BenchRow>& rows);
std::string render(const std::vector<BenchRow>& rows, ReportFormat format);

}  // namespace kflann::bench
