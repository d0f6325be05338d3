#include "kflann/synth.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace kflann {
namespace {

constexpr double kBlobRadius = 2.5;  // rejection-truncation radius, in sigmas

// Per-coordinate center offsets. 2-D blobs sit on the main diagonal; the
// "well" spacing keeps the inter-class gap above the tolerance midpoint on
// every coordinate, which is what makes preset 1 certifiably separable.
double diagonal_step(Separation s) {
    switch (s) {
        case Separation::well: return 20.0;
        case Separation::half: return 4.5;
        case Separation::none: return 3.0;
    }
    return 20.0;
}

// Block height for >=3-D lattices: class k raises its own coordinate block
// by this much.
double block_height(Separation s) {
    switch (s) {
        case Separation::well: return 18.0;
        case Separation::half: return 3.0;
        case Separation::none: return 0.5;
    }
    return 18.0;
}

std::vector<std::vector<double>> class_centers(const SynthSpec& spec) {
    const std::size_t classes = spec.class_counts.size();
    std::vector<std::vector<double>> centers(classes,
                                             std::vector<double>(spec.feature_count, 0.0));
    if (spec.feature_count == 2) {
        const double step = diagonal_step(spec.separation);
        for (std::size_t k = 0; k < classes; ++k) {
            centers[k][0] = static_cast<double>(k) * step;
            centers[k][1] = static_cast<double>(k) * step;
        }
        return centers;
    }
    const double height = block_height(spec.separation);
    const std::size_t block = spec.feature_count / (classes - 1);
    for (std::size_t k = 1; k < classes; ++k)
        for (std::size_t d = (k - 1) * block; d < k * block; ++d) centers[k][d] = height;
    return centers;
}

}  // namespace

SynthSpec preset(int id, std::uint64_t seed) {
    SynthSpec spec;
    spec.id = id;
    spec.seed = seed;
    switch (id) {
        case 1: spec = {1, 2, {500, 500}, Separation::well, seed}; break;
        case 2: spec = {2, 2, {500, 500}, Separation::half, seed}; break;
        case 3: spec = {3, 2, {500, 500}, Separation::none, seed}; break;
        case 4: spec = {4, 8, {250, 150, 100}, Separation::well, seed}; break;
        case 5: spec = {5, 8, {150, 150, 100}, Separation::well, seed}; break;
        case 6: spec = {6, 8, {100, 150, 100}, Separation::none, seed}; break;
        default: throw std::invalid_argument("synthetic preset must be 1..6");
    }
    return spec;
}

Dataset generate(const SynthSpec& spec) {
    const std::size_t classes = spec.class_counts.size();
    if (classes < 2) throw std::invalid_argument("need at least two classes");
    if (spec.feature_count < 2) throw std::invalid_argument("need at least two features");
    if (spec.feature_count != 2 && classes - 1 > spec.feature_count)
        throw std::invalid_argument("too many classes for the lattice layout");
    for (std::size_t count : spec.class_counts)
        if (count == 0) throw std::invalid_argument("class counts must be positive");

    const std::vector<std::vector<double>> centers = class_centers(spec);
    std::mt19937_64 rng(spec.seed);
    std::normal_distribution<double> unit(0.0, 1.0);

    std::vector<Pattern> patterns;
    for (std::size_t k = 0; k < classes; ++k) {
        const std::string label = std::to_string(k + 1);
        for (std::size_t i = 0; i < spec.class_counts[k]; ++i) {
            std::vector<double> offset(spec.feature_count);
            while (true) {
                double norm_sq = 0.0;
                for (double& v : offset) {
                    v = unit(rng);
                    norm_sq += v * v;
                }
                if (norm_sq <= kBlobRadius * kBlobRadius) break;
            }
            Pattern p;
            p.features.resize(spec.feature_count);
            for (std::size_t d = 0; d < spec.feature_count; ++d)
                p.features[d] = centers[k][d] + offset[d];
            p.label = label;
            patterns.push_back(std::move(p));
        }
    }

    const std::string name =
        spec.id >= 1 && spec.id <= 6 ? "synth" + std::to_string(spec.id) : "synth-custom";
    return Dataset(name, spec.feature_count, std::move(patterns),
                   static_cast<int>(classes));
}

}  // namespace kflann
