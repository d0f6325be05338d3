#include "kflann/report.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace kflann {

ReportFormat report_format_from_string(const std::string& s) {
    if (s == "json") return ReportFormat::json;
    if (s == "csv") return ReportFormat::csv;
    if (s == "md") return ReportFormat::md;
    throw std::invalid_argument("unknown report format '" + s + "'");
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc()) throw std::runtime_error("number formatting failed");
    return std::string(buf, ptr);
}

namespace {

nlohmann::ordered_json tuning_json(const TuningResult& tuning) {
    nlohmann::ordered_json j;
    j["reached_expected"] = tuning.trace.reached_expected;
    j["final_delta"] = tuning.delta.delta;
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    for (const TuningStep& s : tuning.trace.steps) {
        nlohmann::ordered_json step;
        step["iteration"] = s.iteration;
        step["delta"] = s.delta;
        step["clusters"] = s.cluster_count;
        step["direction"] = to_string(s.direction);
        steps.push_back(std::move(step));
    }
    j["steps"] = std::move(steps);
    return j;
}

}  // namespace

std::string to_json(const RunReport& r) {
    nlohmann::ordered_json j;
    j["dataset"] = r.dataset;
    j["normalization"] = r.normalization;
    j["tolerance_method"] = r.tolerance_method;
    j["vigilance"] = r.vigilance;
    j["clusters"] = r.clusters;
    if (r.error_rate_percent)
        j["error_rate_percent"] = *r.error_rate_percent;
    else
        j["error_rate_percent"] = nullptr;
    j["epochs"] = r.epochs;
    j["converged"] = r.converged;
    if (r.tuning) j["tuning"] = tuning_json(*r.tuning);
    return j.dump(2) + "\n";
}

std::string to_csv_row(const RunReport& r) {
    std::ostringstream out;
    out << r.dataset << ',' << r.normalization << ',' << r.tolerance_method << ','
        << format_double(r.vigilance) << ',' << r.clusters << ','
        << (r.error_rate_percent ? format_double(*r.error_rate_percent) : "") << ',' << r.epochs
        << ',' << (r.converged ? "true" : "false");
    return out.str();
}

std::string to_markdown(const RunReport& r) {
    std::ostringstream out;
    out << "| dataset | normalization | tolerance | vigilance | clusters | error % | epochs | "
           "converged |\n";
    out << "|---|---|---|---|---|---|---|---|\n";
    out << "| " << r.dataset << " | " << r.normalization << " | " << r.tolerance_method << " | "
        << format_double(r.vigilance) << " | " << r.clusters << " | "
        << (r.error_rate_percent ? format_double(*r.error_rate_percent) : "-") << " | " << r.epochs
        << " | " << (r.converged ? "yes" : "no") << " |\n";
    return out.str();
}

std::string render(const RunReport& r, ReportFormat format) {
    switch (format) {
        case ReportFormat::json: return to_json(r);
        case ReportFormat::csv: return std::string(kReportCsvHeader) + "\n" + to_csv_row(r) + "\n";
        case ReportFormat::md: return to_markdown(r);
    }
    return to_json(r);
}

std::string sweep_to_csv(const SweepResult& sweep) {
    std::ostringstream out;
    out << "rho,clusters,error_rate_percent\n";
    for (const SweepPoint& p : sweep.points) {
        out << format_double(p.vigilance) << ',' << p.cluster_count << ','
            << (p.error_rate_percent ? format_double(*p.error_rate_percent) : "") << '\n';
    }
    return out.str();
}

}  // namespace kflann
