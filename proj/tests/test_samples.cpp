#include "doctest.h"

#include "cutlab/norms.hpp"
#include "cutlab/samples.hpp"

#include <cmath>

using namespace cutlab;

namespace {
const GridSpec kGrid(8, 128);
}

TEST_CASE("sample determinism") {
    SampleFamily fam;
    fam.kind = SampleKind::RoughRandom;
    fam.amplitude = 0.7;
    fam.roughness = 25.0;  // representable at amplitude 0.7 on this grid
    fam.seed = 1234;
    const GridFunction a = make_sample(fam, kGrid, 5);
    const GridFunction b = make_sample(fam, kGrid, 5);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a(i) == b(i));

    const GridFunction c = make_sample(fam, kGrid, 6);
    CHECK((a - c).max_abs() > 0.0);
}

TEST_CASE("declared scales are respected within 10%") {
    SUBCASE("smooth amplitude") {
        SampleFamily fam;
        fam.kind = SampleKind::SmoothRandom;
        fam.seed = 7;
        for (double amp : {0.1, 1.0, 20.0}) {
            fam.amplitude = amp;
            for (std::uint64_t i = 0; i < 5; ++i) {
                const GridFunction u = make_sample(fam, kGrid, i);
                CHECK(u.max_abs() == doctest::Approx(amp).epsilon(1e-9));
            }
        }
    }
    SUBCASE("rough amplitude and derivative envelope") {
        SampleFamily fam;
        fam.kind = SampleKind::RoughRandom;
        fam.seed = 8;
        const double combos[][2] = {{0.4, 10.0}, {2.0, 40.0}, {10.0, 300.0}, {40.0, 1000.0}};
        for (const auto& combo : combos) {
            fam.amplitude = combo[0];
            fam.roughness = combo[1];
            for (std::uint64_t i = 0; i < 3; ++i) {
                const GridFunction u = make_sample(fam, kGrid, i);
                const double da = derivative(u).max_abs();
                CHECK(da >= 0.9 * combo[1]);
                CHECK(da <= 1.1 * combo[1]);
                CHECK(u.max_abs() >= 0.9 * combo[0]);
                CHECK(u.max_abs() <= 1.1 * combo[0]);
            }
        }
    }
    SUBCASE("unrepresentable roughness is rejected") {
        SampleFamily fam;
        fam.kind = SampleKind::RoughRandom;
        fam.seed = 8;
        fam.amplitude = 0.4;
        fam.roughness = 1000.0;  // needs sup |u| >~ 1000 h
        CHECK_THROWS_AS(make_sample(fam, kGrid, 0), ConfigError);
        fam.roughness = 1.0;  // below 4x amplitude
        CHECK_THROWS_AS(make_sample(fam, kGrid, 0), ConfigError);
    }
}

TEST_CASE("random samples are confined to the interior window") {
    SampleFamily fam;
    fam.kind = SampleKind::RoughRandom;
    fam.amplitude = 1.0;
    fam.roughness = 50.0;
    fam.seed = 9;
    const GridFunction u = make_sample(fam, kGrid, 0);
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double x = kGrid.x(i);
        if (x <= -kGrid.half_length + 4.0 || x >= kGrid.half_length - 4.0) CHECK(u(i) == 0.0);
    }
}

TEST_CASE("small-ball normalization") {
    SampleFamily fam;
    fam.kind = SampleKind::SmallBall;
    fam.amplitude = 0.075;
    fam.seed = 10;
    const GridFunction u = make_sample(fam, kGrid, 4);
    CHECK(uniform_norm(u) == doctest::Approx(0.075).epsilon(1e-12));
}

TEST_CASE("exponential growth sample") {
    SampleFamily fam;
    fam.kind = SampleKind::ExponentialGrowth;
    fam.amplitude = 0.25;
    fam.roughness = 0.5;  // growth rate
    const GridFunction u = make_sample(fam, kGrid, 0);
    CHECK(u(kGrid.index_of(0.0)) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(u(kGrid.index_of(8.0)) == doctest::Approx(0.25 * std::exp(0.5 * 4.0)).epsilon(1e-12));
}

TEST_CASE("normalization helpers reject zero") {
    CHECK_THROWS_AS(normalize_uniform(GridFunction::zeros(kGrid), 1.0), ConfigError);
    CHECK_THROWS_AS(normalize_weighted(GridFunction::zeros(kGrid), 0.5, 1.0), ConfigError);
}
