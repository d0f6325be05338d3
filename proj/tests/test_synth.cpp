#include <doctest.h>

#include <cmath>
#include <limits>

#include "kflann/synth.hpp"
#include "test_support.hpp"

using namespace kflann;

namespace {

std::vector<std::size_t> histogram(const Dataset& ds, std::size_t classes) {
    std::vector<std::size_t> counts(classes, 0);
    for (const Pattern& p : ds.patterns()) ++counts[std::stoul(*p.label) - 1];
    return counts;
}

}  // namespace

TEST_CASE("presets reproduce the documented shapes") {
    Dataset s1 = generate(preset(1));
    CHECK(s1.size() == 1000);
    CHECK(s1.feature_count() == 2);
    CHECK(histogram(s1, 2) == std::vector<std::size_t>{500, 500});
    CHECK(s1.expected_clusters() == 2);

    Dataset s4 = generate(preset(4));
    CHECK(s4.size() == 500);
    CHECK(s4.feature_count() == 8);
    CHECK(histogram(s4, 3) == std::vector<std::size_t>{250, 150, 100});

    Dataset s5 = generate(preset(5));
    CHECK(s5.size() == 400);
    CHECK(histogram(s5, 3) == std::vector<std::size_t>{150, 150, 100});

    Dataset s6 = generate(preset(6));
    CHECK(s6.size() == 350);
    CHECK(histogram(s6, 3) == std::vector<std::size_t>{100, 150, 100});
}

TEST_CASE("generation is deterministic for a fixed seed") {
    Dataset a = generate(preset(2, 123));
    Dataset b = generate(preset(2, 123));
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(a.pattern(i).features == b.pattern(i).features);

    Dataset c = generate(preset(2, 124));
    bool any_diff = false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.pattern(i).features != c.pattern(i).features) any_diff = true;
    CHECK(any_diff);
}

TEST_CASE("invalid specs are rejected") {
    CHECK_THROWS_AS(preset(0), std::invalid_argument);
    CHECK_THROWS_AS(preset(7), std::invalid_argument);
    SynthSpec zero{0, 2, {10, 0}, Separation::well, 1};
    CHECK_THROWS_AS(generate(zero), std::invalid_argument);
    SynthSpec lattice_overflow{0, 4, {5, 5, 5, 5, 5, 5}, Separation::well, 1};
    CHECK_THROWS_AS(generate(lattice_overflow), std::invalid_argument);
}

TEST_CASE("well separated presets are certifiably separable") {
    for (int id : {1, 4, 5}) {
        Dataset ds = generate(preset(id));
        double max_intra = 0.0;
        double min_inter = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < ds.size(); ++i)
            for (std::size_t j = i + 1; j < ds.size(); ++j) {
                double d = 0.0;
                for (std::size_t k = 0; k < ds.feature_count(); ++k) {
                    const double diff = ds.pattern(i).features[k] - ds.pattern(j).features[k];
                    d += diff * diff;
                }
                if (*ds.pattern(i).label == *ds.pattern(j).label)
                    max_intra = std::max(max_intra, d);
                else
                    min_inter = std::min(min_inter, d);
            }
        INFO("preset ", id);
        CHECK(min_inter > max_intra);
    }
}
