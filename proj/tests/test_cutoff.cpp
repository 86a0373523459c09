#include "doctest.h"

#include "cutlab/cutoff.hpp"
#include "cutlab/nonlin.hpp"
#include "cutlab/norms.hpp"
#include "cutlab/samples.hpp"

#include <cmath>

using namespace cutlab;

namespace {

const GridSpec kGrid(8, 128);

GridFunction sample_of(SampleKind kind, double amplitude, double roughness, std::uint64_t idx) {
    SampleFamily fam;
    fam.kind = kind;
    fam.amplitude = amplitude;
    fam.roughness = roughness;
    fam.seed = 4242;
    return make_sample(fam, kGrid, idx);
}

// trapezoid quadrature of a closed-form function, independent of the grid
// machinery (oracle for |theta|_{H1})
double h1_of_theta_oracle() {
    const PartitionPair p = PartitionPair::standard();
    const int n = 300000;
    const double a = -0.25;
    const double b = 1.25;
    const double dx = (b - a) / n;
    double s = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double x = a + i * dx;
        const double g = p.theta(x) * p.theta(x) + p.theta_prime(x) * p.theta_prime(x);
        s += (i == 0 || i == n) ? 0.5 * g : g;
    }
    return std::sqrt(s * dx);
}

}  // namespace

TEST_CASE("config validation") {
    CutoffConfig cc;
    cc.epsilon = 0.0;
    CHECK_THROWS_AS(cc.resolved_y_spacing(kGrid), ConfigError);
    cc.epsilon = 1.0;
    cc.y_spacing = 0.5;  // does not resolve supp theta
    CHECK_THROWS_AS(cc.resolved_y_spacing(kGrid), ConfigError);
    cc.y_spacing = 1.0 / 96;  // not a multiple of h = 1/128
    CHECK_THROWS_AS(cc.resolved_y_spacing(kGrid), ConfigError);
    cc.y_spacing = 0.0;
    CHECK(cc.resolved_y_spacing(kGrid) == kGrid.spacing());
    cc.y_spacing = 1.0 / 32;
    CHECK(cc.resolved_y_spacing(kGrid) == 1.0 / 32);
    CHECK_THROWS_AS(cc.resolved_y_spacing(GridSpec(4, 6)), ConfigError);  // 1/h not mult of 4
}

TEST_CASE("rho field") {
    const CutoffConfig cc;
    SUBCASE("zero function") {
        const RhoField r = rho_field(GridFunction::zeros(kGrid), cc);
        CHECK(r.max() == 0.0);
        CHECK(r.size() == static_cast<std::size_t>(2 * (8 + 2) * 128 + 1));
    }
    SUBCASE("constant: translation invariance and |theta|_H1 oracle") {
        const GridFunction one = GridFunction::sample(kGrid, [](double) { return 1.0; });
        const RhoField r = rho_field(one, cc);
        const double oracle = h1_of_theta_oracle();
        // interior y values all equal |theta|_{H1}
        const std::size_t j0 = r.size() / 4;
        const std::size_t j1 = 3 * r.size() / 4;
        for (std::size_t j = j0; j <= j1; j += 64) {
            CHECK(r.values[j] == doctest::Approx(oracle).epsilon(1e-4));
            CHECK(r.values[j] == doctest::Approx(r.values[j0]).epsilon(1e-12));
        }
    }
    SUBCASE("vanishes where u vanishes on the window") {
        const GridFunction bump = GridFunction::sample(kGrid, [](double x) {
            return (x > 0.0 && x < 1.0) ? x * x * (1.0 - x) * (1.0 - x) : 0.0;
        });
        const RhoField r = rho_field(bump, cc);
        // y = -2: window (-2.25, -0.75) misses supp u = [0,1]
        const std::size_t j = static_cast<std::size_t>(std::round((-2.0 - r.y0) / r.y_spacing));
        CHECK(r.values[j] == 0.0);
        CHECK(r.max() > 0.0);
    }
    SUBCASE("bounded by 3 |u|_{H1_u}") {
        for (std::uint64_t i = 0; i < 8; ++i) {
            const GridFunction u = i % 2 == 0 ? sample_of(SampleKind::SmoothRandom, 1.5, 0.0, i)
                                              : sample_of(SampleKind::RoughRandom, 1.0, 40.0, i);
            CHECK(rho_field(u, cc).max() <= 3.0 * uniform_norm(u));
        }
    }
}

TEST_CASE("multiplier") {
    const CutoffConfig cc;
    SUBCASE("zero input gives the exact partition integral 1") {
        const GridFunction w = multiplier(GridFunction::zeros(kGrid), cc);
        for (std::size_t i = 0; i < w.size(); ++i)
            CHECK(w(i) == doctest::Approx(1.0).epsilon(1e-13));
    }
    SUBCASE("range [0,1] and cut region") {
        const GridFunction big = sample_of(SampleKind::SmoothRandom, 60.0, 0.0, 3);
        const GridFunction w = multiplier(big, cc);
        for (std::size_t i = 0; i < w.size(); ++i) {
            CHECK(w(i) >= 0.0);
            CHECK(w(i) <= 1.0 + 1e-13);
        }
        // where every contributing rho_y >= 2 the multiplier vanishes exactly
        CHECK(w(kGrid.index_of(0.0)) == 0.0);
    }
    SUBCASE("coarser y-quadrature stays close") {
        const GridFunction u = sample_of(SampleKind::SmoothRandom, 1.2, 0.0, 9);
        CutoffConfig coarse;
        coarse.y_spacing = 1.0 / 32;
        const GridFunction w1 = multiplier(u, cc);
        const GridFunction w2 = multiplier(u, coarse);
        CHECK((w1 - w2).max_abs() < 5e-4);
    }
}

TEST_CASE("apply_cutoff") {
    const CutoffConfig cc;
    SUBCASE("zero maps to zero") {
        CHECK(apply_cutoff(GridFunction::zeros(kGrid), cc).max_abs() == 0.0);
    }
    SUBCASE("identity on the small ball, exact") {
        for (double eps : {1.0, 0.25}) {
            CutoffConfig ce;
            ce.epsilon = eps;
            const GridFunction u =
                normalize_uniform(sample_of(SampleKind::SmoothRandom, 1.0, 0.0, 5), 0.3 * eps);
            const GridFunction cu = apply_cutoff(u, ce);
            CHECK((cu - u).max_abs() <= 1e-12 * std::max(1.0, u.max_abs()));
        }
    }
    SUBCASE("uniform bound 8 eps") {
        for (double eps : {1.0, 0.0625}) {
            CutoffConfig ce;
            ce.epsilon = eps;
            for (std::uint64_t i = 0; i < 6; ++i) {
                const double amp = eps * std::pow(100.0, i / 5.0);
                const GridFunction u = i % 2 == 0
                                           ? sample_of(SampleKind::SmoothRandom, amp, 0.0, 20 + i)
                                           : sample_of(SampleKind::RoughRandom, amp, 30.0 * amp, 20 + i);
                CHECK(uniform_norm(apply_cutoff(u, ce)) <= 8.0 * eps);
            }
        }
    }
    SUBCASE("power-of-two scaling is exact: chi_eps(eps u) = eps chi(u)") {
        const GridFunction u = sample_of(SampleKind::SmoothRandom, 2.0, 0.0, 7);
        CutoffConfig ce;
        ce.epsilon = 0.125;
        const GridFunction a = apply_cutoff(0.125 * u, ce);
        const GridFunction b = 0.125 * apply_cutoff(u, cc);
        CHECK((a - b).max_abs() == 0.0);
    }
    SUBCASE("translation equivariance") {
        GridFunction u = sample_of(SampleKind::SmoothRandom, 1.0, 0.0, 11);
        const GridFunction cu = apply_cutoff(u, cc);
        for (long k : {1L, 17L, 128L}) {
            const GridFunction a = translate(cu, k);
            const GridFunction b = apply_cutoff(translate(u, k), cc);
            const WeightedNormSpec w(0.5);
            CHECK(weighted_norm(a - b, w) <= 1e-8 * weighted_norm(a, w));
        }
    }
    SUBCASE("vector-valued input: scalar multiplier acts on all components") {
        const GridFunction u = sample_of(SampleKind::SmoothRandom, 1.1, 0.0, 13);
        const GridFunction u2 = GridFunction::sample(
            kGrid, 2, [&](double x, int c) { return c == 0 ? u(kGrid.index_of(x)) : 0.0; });
        const GridFunction cu = apply_cutoff(u, cc);
        const GridFunction cu2 = apply_cutoff(u2, cc);
        for (std::size_t i = 0; i < u.size(); ++i) {
            CHECK(cu2(i, 0) == doctest::Approx(cu(i, 0)).epsilon(1e-13));
            CHECK(cu2(i, 1) == 0.0);
        }
    }
    SUBCASE("rho sums over components") {
        // splitting u evenly over two components leaves the rho field, hence
        // the multiplier, unchanged
        const GridFunction u = sample_of(SampleKind::SmoothRandom, 1.6, 0.0, 14);
        const double r = std::sqrt(0.5);
        const GridFunction usplit = GridFunction::sample(
            kGrid, 2, [&](double x, int) { return r * u(kGrid.index_of(x)); });
        const RhoField ra = rho_field(u, cc);
        const RhoField rb = rho_field(usplit, cc);
        for (std::size_t j = 0; j < ra.size(); ++j)
            CHECK(rb.values[j] == doctest::Approx(ra.values[j]).epsilon(1e-13));
        const GridFunction cu = apply_cutoff(u, cc);
        const GridFunction cu2 = apply_cutoff(usplit, cc);
        for (std::size_t i = 0; i < u.size(); ++i)
            CHECK(cu2(i, 1) == doctest::Approx(r * cu(i, 0)).epsilon(1e-12));
    }
}

TEST_CASE("chi_one") {
    const CutoffConfig cc;
    const GridFunction v = sample_of(SampleKind::SmoothRandom, 1.0, 0.0, 31);
    SUBCASE("at zero the kernel is the identity") {
        const GridFunction out = chi_one(GridFunction::zeros(kGrid), v, cc);
        CHECK((out - v).max_abs() <= 1e-12);
    }
    SUBCASE("small base point: still the identity") {
        const GridFunction u = normalize_uniform(sample_of(SampleKind::SmoothRandom, 1.0, 0.0, 32), 0.25);
        const GridFunction out = chi_one(u, v, cc);
        CHECK((out - v).max_abs() <= 1e-12);
    }
    SUBCASE("requires eps = 1 and matching grids") {
        CutoffConfig ce;
        ce.epsilon = 0.5;
        CHECK_THROWS_AS(chi_one(v, v, ce), ConfigError);
        CHECK_THROWS_AS(chi_one(v, GridFunction::zeros(GridSpec(8, 64)), cc), MismatchError);
    }
}

TEST_CASE("derivative candidate L") {
    const CutoffConfig cc;
    const WeightedNormSpec weta(0.5);
    SUBCASE("L(0) = 0 exactly") {
        const GridFunction v = sample_of(SampleKind::SmoothRandom, 1.0, 0.0, 41);
        const GridFunction out = derivative_candidate_L(GridFunction::zeros(kGrid), v, cc);
        CHECK(out.max_abs() == 0.0);
    }
    SUBCASE("inactive cutoff: L(u) v = 2 u v") {
        const GridFunction u = normalize_uniform(sample_of(SampleKind::SmoothRandom, 1.0, 0.0, 42), 0.3);
        const GridFunction v = sample_of(SampleKind::SmoothRandom, 1.0, 0.0, 43);
        const GridFunction out = derivative_candidate_L(u, v, cc);
        const GridFunction expect = 2.0 * pointwise_multiply(v, u);
        CHECK((out - expect).max_abs() <= 1e-12);
    }
    SUBCASE("finite-difference consistency through the active region") {
        const GridFunction u = normalize_uniform(sample_of(SampleKind::SmoothRandom, 1.0, 0.0, 44), 1.2);
        const GridFunction v = sample_of(SampleKind::SmoothRandom, 0.8, 0.0, 45);
        const GridFunction Lv = derivative_candidate_L(u, v, cc);
        auto F = [&](const GridFunction& q) { return quadratic(apply_cutoff(q, cc)); };
        const GridFunction Fu = F(u);
        double prev = 1e300;
        for (double tau : {1e-1, 1e-2, 1e-3}) {
            const GridFunction rem = F(u + tau * v) - Fu - tau * Lv;
            const double q = weighted_norm(rem, weta) / tau;
            CHECK(q < prev);
            prev = q;
        }
        CHECK(prev < 1e-2);  // r(tau)/tau shrinks linearly
    }
}
