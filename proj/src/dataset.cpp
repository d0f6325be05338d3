#include "kflann/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace kflann {
namespace {

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') cells.push_back("");
    return cells;
}

bool parse_double(const std::string& cell, double& out) {
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last && !cell.empty();
}

}  // namespace

Dataset::Dataset(std::string name, std::size_t feature_count, std::vector<Pattern> patterns,
                 std::optional<int> expected_clusters)
    : name_(std::move(name)),
      feature_count_(feature_count),
      patterns_(std::move(patterns)),
      labeled_(false),
      expected_clusters_(expected_clusters) {
    if (patterns_.empty()) throw std::invalid_argument("dataset '" + name_ + "' is empty");
    if (expected_clusters_ && *expected_clusters_ < 1)
        throw std::invalid_argument("expected_clusters must be >= 1");
    labeled_ = patterns_.front().label.has_value();
    for (std::size_t i = 0; i < patterns_.size(); ++i) {
        const Pattern& p = patterns_[i];
        if (p.features.size() != feature_count_)
            throw std::invalid_argument("pattern " + std::to_string(i) + " has " +
                                        std::to_string(p.features.size()) + " features, expected " +
                                        std::to_string(feature_count_));
        if (p.label.has_value() != labeled_)
            throw std::invalid_argument("dataset '" + name_ +
                                        "' mixes labeled and unlabeled patterns");
        for (std::size_t d = 0; d < p.features.size(); ++d)
            if (!std::isfinite(p.features[d]))
                throw std::invalid_argument("pattern " + std::to_string(i) + ", feature " +
                                            std::to_string(d) + " is not finite");
    }
}

Dataset load_csv(const std::string& path, std::optional<std::size_t> label_column) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open file");

    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    if (in.bad()) throw std::runtime_error(path + ": read failure");

    std::vector<Pattern> patterns;
    std::size_t ncols = 0;
    bool first_data_row = true;
    for (std::size_t row = 0; row < lines.size(); ++row) {
        if (trim(lines[row]).empty()) continue;
        std::vector<std::string> cells = split_line(lines[row]);

        if (first_data_row) {
            ncols = cells.size();
            if (label_column && *label_column >= ncols)
                throw std::runtime_error(path + ": label column " + std::to_string(*label_column) +
                                         " out of range for " + std::to_string(ncols) + " columns");
            // Header heuristic: skip the first row iff no feature cell parses.
            bool any_numeric = false;
            double unused;
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (label_column && c == *label_column) continue;
                if (parse_double(cells[c], unused)) any_numeric = true;
            }
            first_data_row = false;
            if (!any_numeric) continue;
        }

        if (cells.size() != ncols)
            throw std::runtime_error(path + ": row " + std::to_string(row + 1) + " has " +
                                     std::to_string(cells.size()) + " columns, expected " +
                                     std::to_string(ncols));

        Pattern p;
        p.features.reserve(ncols - (label_column ? 1 : 0));
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (label_column && c == *label_column) {
                p.label = cells[c];
                continue;
            }
            double v;
            if (!parse_double(cells[c], v))
                throw std::runtime_error(path + ": row " + std::to_string(row + 1) + ", column " +
                                         std::to_string(c + 1) + ": cannot parse '" + cells[c] +
                                         "' as a number");
            if (!std::isfinite(v))
                throw std::runtime_error(path + ": row " + std::to_string(row + 1) + ", column " +
                                         std::to_string(c + 1) + ": non-finite value '" + cells[c] +
                                         "'");
            p.features.push_back(v);
        }
        patterns.push_back(std::move(p));
    }

    if (patterns.empty()) throw std::runtime_error(path + ": no data rows");
    return Dataset(std::filesystem::path(path).stem().string(),
                   ncols - (label_column ? 1 : 0), std::move(patterns));
}

Dataset load_csv_labeled(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open file");
    std::string line;
    std::size_t ncols = 0;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        ncols = split_line(line).size();
        break;
    }
    if (ncols < 2) throw std::runtime_error(path + ": need at least two columns for labeled data");
    return load_csv(path, ncols - 1);
}

void save_csv(const Dataset& ds, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open file for writing");
    char buf[64];
    for (const Pattern& p : ds.patterns()) {
        for (std::size_t d = 0; d < p.features.size(); ++d) {
            auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, p.features[d]);
            if (ec != std::errc()) throw std::runtime_error("number formatting failed");
            if (d) out << ',';
            out.write(buf, ptr - buf);
        }
        if (p.label) out << ',' << *p.label;
        out << '\n';
    }
    if (!out) throw std::runtime_error(path + ": write failure");
}

DatasetSummary describe(const Dataset& ds) {
    DatasetSummary s;
    s.pattern_count = ds.size();
    s.feature_count = ds.feature_count();
    s.labeled = ds.labeled();
    if (ds.labeled())
        for (const Pattern& p : ds.patterns()) ++s.class_histogram[*p.label];
    return s;
}

std::vector<ManifestEntry> load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open manifest");
    const auto base = std::filesystem::path(path).parent_path();

    std::vector<ManifestEntry> entries;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string text = trim(line);
        if (text.empty() || text[0] == '#') continue;
        auto fail = [&](const std::string& why) {
            throw std::runtime_error(path + ": line " + std::to_string(lineno) + ": " + why);
        };

        auto eq = text.find('=');
        if (eq == std::string::npos) fail("expected 'name = path, n, expected_clusters'");
        ManifestEntry e;
        e.name = trim(text.substr(0, eq));
        if (e.name.empty()) fail("empty dataset name");

        std::vector<std::string> fields = split_line(text.substr(eq + 1));
        if (fields.size() < 3 || fields.size() > 4) fail("expected 3 or 4 comma-separated fields");

        e.path = (base / fields[0]).lexically_normal().string();
        double n = 0, k = 0;
        if (!parse_double(fields[1], n) || n < 1 || n != std::floor(n))
            fail("feature count must be a positive integer");
        if (!parse_double(fields[2], k) || k < 1 || k != std::floor(k))
            fail("expected_clusters must be a positive integer");
        e.feature_count = static_cast<std::size_t>(n);
        e.expected_clusters = static_cast<int>(k);

        if (fields.size() == 4) {
            std::stringstream ss(fields[3]);
            std::string part;
            while (std::getline(ss, part, '/')) {
                double c = 0;
                if (!parse_double(trim(part), c) || c < 0 || c != std::floor(c))
                    fail("class counts must be non-negative integers");
                e.class_counts.push_back(static_cast<std::size_t>(c));
            }
        }
        for (const ManifestEntry& prev : entries)
            if (prev.name == e.name) fail("duplicate dataset name '" + e.name + "'");
        entries.push_back(std::move(e));
    }
    return entries;
}

Dataset load_from_manifest(const ManifestEntry& entry) {
    Dataset ds = load_csv_labeled(entry.path);
    if (ds.feature_count() != entry.feature_count)
        throw std::runtime_error(entry.name + ": manifest declares " +
                                 std::to_string(entry.feature_count) + " features, file has " +
                                 std::to_string(ds.feature_count()));
    if (!entry.class_counts.empty()) {
        std::size_t sum = std::accumulate(entry.class_counts.begin(), entry.class_counts.end(),
                                          std::size_t{0});
        if (sum != ds.size())
            throw std::runtime_error(entry.name + ": manifest class counts sum to " +
                                     std::to_string(sum) + ", file has " +
                                     std::to_string(ds.size()) + " patterns");
    }
    return Dataset(entry.name, ds.feature_count(), ds.patterns(), entry.expected_clusters);
}

}  // namespace kflann
