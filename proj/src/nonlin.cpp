#include "cutlab/nonlin.hpp"

#include <cmath>
#include <stdexcept>

namespace cutlab {

GridFunction quadratic(const GridFunction& u) {
    std::vector<double> out(u.samples().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = u.samples()[i] * u.samples()[i];
    return GridFunction(u.spec(), u.components(), std::move(out));
}

GridFunction f_eps(const GridFunction& u, const CutoffConfig& cfg) {
    return quadratic(apply_cutoff(u, cfg));
}

PointwiseCutoffSpec PointwiseCutoffSpec::standard(double delta) {
    if (!(delta > 0.0)) throw ConfigError("pointwise cutoff threshold delta must be positive");
    PointwiseCutoffSpec spec;
    spec.delta = delta;
    spec.transition = [](double s) {
        if (s <= 1.0) return 1.0;
        if (s >= 2.0) return 0.0;
        return 1.0 - smoothstep5(s - 1.0);
    };
    return spec;
}

GridFunction pointwise_cutoff_g(const GridFunction& u, const PointwiseCutoffSpec& spec) {
    const int nc = u.components();
    std::vector<double> out(u.samples().size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (int c = 0; c < nc; ++c) {
            const double val = u(i, c);
            out[i * nc + c] = val * val * spec.transition(std::abs(val) / spec.delta);
        }
    }
    return GridFunction(u.spec(), nc, std::move(out));
}

SawtoothSpec::SawtoothSpec(double e, double d, double dp)
    : eps_saw(e), delta(d), delta_prime(dp) {
    if (!(eps_saw > 0.0) || !(delta > 0.0)) throw ConfigError("sawtooth scales must be positive");
    if (!(delta_prime > 0.0) || !(delta_prime < delta / 2.0))
        throw ConfigError("sawtooth shift requires 0 < delta' < delta/2");
    const double teeth = 1.0 / (delta * eps_saw);
    if (std::abs(teeth - std::round(teeth)) > 1e-9 * teeth || teeth < 1.0)
        throw ConfigError("1/(delta * eps_saw) must be a positive integer (tooth count)");
}

SawtoothPair sawtooth(const SawtoothSpec& spec, const GridSpec& grid) {
    const double h = grid.spacing();
    const double period = spec.delta * spec.eps_saw;
    if (h > period / 8.0 + 1e-15)
        throw ConfigError("grid too coarse to resolve sawtooth teeth (need h <= delta*eps/8)");
    const double per_period = period / h;
    if (std::abs(per_period - std::round(per_period)) > 1e-9)
        throw ConfigError("sawtooth period must be a multiple of the grid spacing");

    const std::size_t i0 = grid.index_of(0.0);
    const std::size_t i1 = grid.index_of(1.0);
    const long ppp = static_cast<long>(std::round(per_period));

    std::vector<double> us(grid.point_count(), 0.0);
    for (std::size_t i = i0; i <= i1; ++i) {
        const long k = static_cast<long>(i - i0) % ppp;  // position within the tooth
        const double s = static_cast<double>(k) / static_cast<double>(ppp);
        const double tri = s <= 0.5 ? 2.0 * s : 2.0 * (1.0 - s);
        us[i] = 0.5 * spec.delta * tri;
    }
    GridFunction u(grid, 1, std::move(us));

    // C1 plateau: 1 on [2h, 1-2h], smoothstep ramps of width 2h, zero outside [0,1]
    std::vector<double> vs(u.samples());
    for (std::size_t i = i0; i <= i1; ++i) {
        const double x = grid.x(i);
        const double p = std::min(smoothstep5(x / (2.0 * h)), smoothstep5((1.0 - x) / (2.0 * h)));
        vs[i] += spec.delta_prime * p;
    }
    return SawtoothPair{std::move(u), GridFunction(grid, 1, std::move(vs))};
}

namespace {

double check_distinct(const GridFunction& u, const GridFunction& v) {
    require_same_grid(u, v);
    double m = 0.0;
    for (std::size_t i = 0; i < u.samples().size(); ++i)
        m = std::max(m, std::abs(u.samples()[i] - v.samples()[i]));
    if (m == 0.0) throw std::invalid_argument("lipschitz_ratio requires u != v");
    return m;
}

}  // namespace

double lipschitz_ratio(const std::function<GridFunction(const GridFunction&)>& F,
                       const GridFunction& u, const GridFunction& v, double eta) {
    check_distinct(u, v);
    const WeightedNormSpec spec(eta);
    return weighted_norm(F(u) - F(v), spec) / weighted_norm(u - v, spec);
}

double lipschitz_ratio_window(const std::function<GridFunction(const GridFunction&)>& F,
                              const GridFunction& u, const GridFunction& v, const Window& w) {
    check_distinct(u, v);
    return h1_norm_window(F(u) - F(v), w) / h1_norm_window(u - v, w);
}

}  // namespace cutlab
