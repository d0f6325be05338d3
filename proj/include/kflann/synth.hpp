#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "kflann/dataset.hpp"

namespace kflann {

enum class Separation { well, half, none };

inline constexpr std::uint64_t kDefaultSeed = 42;

/// Shape of one synthetic benchmark set: unit-sigma Gaussian blobs (samples
/// rejection-truncated at radius 2.5) around class centers whose spacing is
/// set by the separation profile. 2-D centers sit on the main diagonal; for
/// higher dimensions each class after the first raises its own block of
/// coordinates, so every class pair differs strongly on some block.
struct SynthSpec {
    int id = 0;  // 1..6 for the built-in presets, 0 for custom shapes
    std::size_t feature_count = 2;
    std::vector<std::size_t> class_counts;
    Separation separation = Separation::well;
    std::uint64_t seed = kDefaultSeed;
};

/// The six built-in presets:
///   1: 1000x2, 500/500, well separated   4: 500x8, 250/150/100, separable
///   2: 1000x2, 500/500, half separated   5: 400x8, 150/150/100, separable
///   3: 1000x2, 500/500, not separated    6: 350x8, 100/150/100, overlapped
SynthSpec preset(int id, std::uint64_t seed = kDefaultSeed);

/// Deterministic for a fixed spec and seed. Patterns are emitted class by
/// class with labels "1", "2", ...
Dataset generate(const SynthSpec& spec);

}  // namespace kflann
