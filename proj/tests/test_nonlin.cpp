#include "doctest.h"

#include "cutlab/nonlin.hpp"
#include "cutlab/samples.hpp"

#include <cmath>

using namespace cutlab;

namespace {

const GridSpec kGrid(8, 128);

GridFunction smooth(double amplitude, std::uint64_t idx) {
    SampleFamily fam;
    fam.kind = SampleKind::SmoothRandom;
    fam.amplitude = amplitude;
    fam.seed = 99;
    return make_sample(fam, kGrid, idx);
}

}  // namespace

TEST_CASE("quadratic") {
    CHECK(quadratic(GridFunction::zeros(kGrid)).max_abs() == 0.0);
    const GridFunction c = GridFunction::sample(kGrid, [](double) { return -3.0; });
    const GridFunction c2 = quadratic(c);
    for (std::size_t i = 0; i < c2.size(); ++i) CHECK(c2(i) == 9.0);

    SUBCASE("square of growing function leaves the weighted space") {
        const double eta = 0.5;
        double prev = 0.0;
        for (int L : {8, 16}) {
            const GridSpec g(L, 64);
            const GridFunction e = GridFunction::sample(
                g, [&](double x) { return std::exp(eta * std::abs(x) / 2.0); });
            const double n = weighted_norm(quadratic(e), WeightedNormSpec(eta));
            if (prev > 0.0) CHECK(n > 1.3 * prev);  // ~ sqrt(2L) growth
            prev = n;
        }
    }
}

TEST_CASE("f_eps") {
    CutoffConfig cc;
    SUBCASE("vanishes at zero") {
        CHECK(f_eps(GridFunction::zeros(kGrid), cc).max_abs() == 0.0);
    }
    SUBCASE("small ball: exactly the square") {
        cc.epsilon = 0.25;
        const GridFunction u = normalize_uniform(smooth(1.0, 1), 0.3 * cc.epsilon);
        const GridFunction fu = f_eps(u, cc);
        CHECK((fu - quadratic(u)).max_abs() <= 1e-13);
    }
    SUBCASE("output scale is eps^2") {
        for (double eps : {0.25, 0.125, 0.0625}) {
            CutoffConfig ce;
            ce.epsilon = eps;
            double worst = 0.0;
            for (std::uint64_t i = 0; i < 6; ++i) {
                const GridFunction u = normalize_uniform(smooth(1.0, 10 + i), eps * (0.2 + 0.6 * i));
                worst = std::max(worst, weighted_norm(f_eps(u, ce), WeightedNormSpec(0.5)));
            }
            CHECK(worst <= 100.0 * eps * eps);
            CHECK(worst > 0.0);
        }
    }
}

TEST_CASE("pointwise cutoff g") {
    const PointwiseCutoffSpec spec = PointwiseCutoffSpec::standard(0.1);
    SUBCASE("below the threshold it is the square") {
        const GridFunction u = smooth(0.09, 2);
        CHECK((pointwise_cutoff_g(u, spec) - quadratic(u)).max_abs() == 0.0);
    }
    SUBCASE("far above the threshold it vanishes") {
        const GridFunction u = GridFunction::sample(kGrid, [](double x) {
            return std::abs(x) < 7.0 ? 0.5 : 0.0;  // 0.5 > 2 delta everywhere inside
        });
        const GridFunction gu = pointwise_cutoff_g(u, spec);
        CHECK(gu(kGrid.index_of(0.0)) == 0.0);
    }
    SUBCASE("zero") {
        CHECK(pointwise_cutoff_g(GridFunction::zeros(kGrid), spec).max_abs() == 0.0);
    }
}

TEST_CASE("sawtooth construction") {
    const double eps_saw = 1.0 / 16;
    const double delta = 0.1;
    const double dprime = 0.02;
    const double h = delta * eps_saw / 32.0;
    const GridSpec grid = GridSpec::from_spacing(4, h);
    const SawtoothPair st = sawtooth(SawtoothSpec(eps_saw, delta, dprime), grid);

    SUBCASE("amplitude and slopes") {
        CHECK(st.u.max_abs() == doctest::Approx(delta / 2).epsilon(1e-12));
        const GridFunction du = derivative(st.u);
        std::size_t slope_hits = 0;
        for (std::size_t i = grid.index_of(0.0) + 1; i < grid.index_of(1.0); ++i) {
            if (std::abs(du(i)) > 1.0)
                CHECK(std::abs(du(i)) == doctest::Approx(1.0 / eps_saw).epsilon(1e-10));
            if (std::abs(du(i)) > 1.0) ++slope_hits;
        }
        CHECK(slope_hits > 1000);
    }
    SUBCASE("difference norm on the interior window is delta' sqrt(1-4h)") {
        const Window w{2.0 * h, 1.0 - 2.0 * h};
        const double n = h1_norm_window(st.u - st.v, w);
        CHECK(n == doctest::Approx(dprime * std::sqrt(1.0 - 4.0 * h)).epsilon(1e-10));
    }
    SUBCASE("lower bound of the g difference") {
        const PointwiseCutoffSpec gs = PointwiseCutoffSpec::standard(delta);
        const Window w{2.0 * h, 1.0 - 2.0 * h};
        const GridFunction diff = pointwise_cutoff_g(st.u, gs) - pointwise_cutoff_g(st.v, gs);
        const GridFunction du = derivative(st.u);
        const auto [i0, i1] = w.indices(grid);
        double l2 = 0.0;
        for (std::size_t i = i0; i <= i1; ++i) {
            const double gi = du(i) * du(i);
            l2 += (i == i0 || i == i1) ? 0.5 * gi : gi;
        }
        l2 = std::sqrt(l2 * h);
        CHECK(h1_norm_window(diff, w) >= 2.0 * dprime * l2 * (1.0 - 1e-12));
    }
    SUBCASE("unresolvable teeth") {
        CHECK_THROWS_AS(sawtooth(SawtoothSpec(eps_saw, delta, dprime), GridSpec(4, 128)),
                        ConfigError);
    }
    SUBCASE("invalid spec") {
        CHECK_THROWS_AS(SawtoothSpec(1.0 / 16, 0.1, 0.06), ConfigError);  // delta' >= delta/2
        CHECK_THROWS_AS(SawtoothSpec(0.013, 0.1, 0.02), ConfigError);     // tooth count not integer
    }
}

TEST_CASE("lipschitz ratio") {
    auto identity = [](const GridFunction& q) { return q; };
    const GridFunction u = smooth(1.0, 3);
    const GridFunction v = smooth(1.0, 4);
    CHECK(lipschitz_ratio(identity, u, v, 0.5) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK_THROWS_AS(lipschitz_ratio(identity, u, u, 0.5), std::invalid_argument);

    SUBCASE("sawtooth blow-up for g at eps_saw = 1/16") {
        const double eps_saw = 1.0 / 16;
        const double h = 0.1 * eps_saw / 32.0;
        const GridSpec grid = GridSpec::from_spacing(4, h);
        const SawtoothPair st = sawtooth(SawtoothSpec(eps_saw, 0.1, 0.02), grid);
        const PointwiseCutoffSpec gs = PointwiseCutoffSpec::standard(0.1);
        auto g_op = [&](const GridFunction& q) { return pointwise_cutoff_g(q, gs); };
        const double r =
            lipschitz_ratio_window(g_op, st.u, st.v, Window{2.0 * h, 1.0 - 2.0 * h});
        CHECK(r >= 1.9 / eps_saw);
        CHECK(r <= 2.2 / eps_saw);
    }
}
