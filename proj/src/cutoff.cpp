#include "cutlab/cutoff.hpp"

#include <algorithm>
#include <cmath>

namespace cutlab {
namespace {

// theta and theta' tabulated on the x-lattice offsets covering
// supp theta = (-1/4, 5/4); entry k corresponds to t = -1/4 + k h.
struct ThetaStencil {
    std::vector<double> th;
    std::vector<double> thp;

    ThetaStencil(const PartitionPair& pair, const GridSpec& spec) {
        const int m = spec.per_unit;
        const std::size_t count = static_cast<std::size_t>(3 * m / 2) + 1;
        th.resize(count);
        thp.resize(count);
        for (std::size_t k = 0; k < count; ++k) {
            const double t = -0.25 + static_cast<double>(k) * spec.spacing();
            th[k] = pair.theta(t);
            thp[k] = pair.theta_prime(t);
        }
    }
};

struct YGrid {
    double y0;
    double hy;
    int q;          // hy / h
    std::size_t n;  // number of y nodes over [-L-2, L+2]
};

YGrid make_y_grid(const GridSpec& spec, const CutoffConfig& cfg) {
    const double hy = cfg.resolved_y_spacing(spec);
    const int q = static_cast<int>(std::round(hy * spec.per_unit));
    const std::size_t n =
        static_cast<std::size_t>(2 * (spec.half_length + 2) * spec.per_unit / q) + 1;
    return YGrid{-(spec.half_length + 2.0), hy, q, n};
}

}  // namespace

double CutoffConfig::resolved_y_spacing(const GridSpec& spec) const {
    if (!(epsilon > 0.0)) throw ConfigError("cut-off scale epsilon must be positive");
    if (spec.per_unit % 4 != 0)
        throw ConfigError("cut-off quadrature needs 1/h divisible by 4 (to align supp theta)");
    const double hy = y_spacing == 0.0 ? spec.spacing() : y_spacing;
    if (!(hy <= 0.25)) throw ConfigError("y-quadrature step must satisfy h_y <= 1/4");
    const double q = hy * spec.per_unit;
    if (std::abs(q - std::round(q)) > 1e-9 || std::round(q) < 1.0)
        throw ConfigError("y-quadrature step must be an integer multiple of the grid spacing");
    const double inv = 1.0 / hy;
    if (std::abs(inv - std::round(inv)) > 1e-6)
        throw ConfigError("1/h_y must be an integer");
    return hy;
}

double RhoField::max() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, v);
    return m;
}

RhoField rho_field(const GridFunction& u, const CutoffConfig& cfg) {
    const GridSpec& sp = u.spec();
    const YGrid yg = make_y_grid(sp, cfg);
    const ThetaStencil st(cfg.pair, sp);
    const GridFunction du = derivative(u);
    const double h = sp.spacing();
    const int nc = u.components();
    const long n = static_cast<long>(sp.point_count());
    const long m = sp.per_unit;
    const long stencil_last = 3 * m / 2;

    RhoField rho;
    rho.y0 = yg.y0;
    rho.y_spacing = yg.hy;
    rho.values.assign(yg.n, 0.0);

    for (std::size_t j = 0; j < yg.n; ++j) {
        // x-window (y - 1/4, y + 5/4) in grid indices, clipped to the domain
        const long ax = static_cast<long>(j) * yg.q - 2 * m - m / 4;  // index of y - 1/4
        const long lo = std::max(ax, 0L);
        const long hi = std::min(ax + stencil_last, n - 1);
        if (lo > hi) continue;
        double acc = 0.0;
        double first = 0.0;
        double last = 0.0;
        for (long i = lo; i <= hi; ++i) {
            const double t = st.th[static_cast<std::size_t>(i - ax)];
            const double tp = st.thp[static_cast<std::size_t>(i - ax)];
            double g = 0.0;
            for (int c = 0; c < nc; ++c) {
                const double p = t * u(static_cast<std::size_t>(i), c);
                const double dp = tp * u(static_cast<std::size_t>(i), c) +
                                  t * du(static_cast<std::size_t>(i), c);
                g += p * p + dp * dp;
            }
            acc += g;
            if (i == lo) first = g;
            if (i == hi) last = g;
        }
        rho.values[j] = std::sqrt(h * (acc - 0.5 * first - 0.5 * last));
    }
    return rho;
}

GridFunction multiplier_field(const GridSpec& spec, const RhoField& rho,
                              const CutoffConfig& cfg) {
    const YGrid yg = make_y_grid(spec, cfg);
    if (rho.size() != yg.n || rho.y_spacing != yg.hy)
        throw MismatchError("rho field was computed with a different configuration");
    const ThetaStencil st(cfg.pair, spec);
    const long m = spec.per_unit;
    const long n = static_cast<long>(spec.point_count());
    const long q = yg.q;

    std::vector<double> cb(rho.size());
    for (std::size_t j = 0; j < rho.size(); ++j) cb[j] = cfg.pair.chi_bar(rho.values[j]);

    std::vector<double> w(static_cast<std::size_t>(n));
    // w(x_i) = h_y sum_j cb_j theta(x_i - y_j); lattice offsets satisfy
    // x_i - y_j = (i - j q) h + 2, nonzero for j q in (i + 3m/4, i + 9m/4)
    for (long i = 0; i < n; ++i) {
        const long jq_lo = i + (3 * m) / 4;
        const long jq_hi = i + (9 * m) / 4;
        long j = (jq_lo + q - 1) / q;  // first j with j q >= jq_lo
        double acc = 0.0;
        for (; j * q <= jq_hi; ++j) {
            const long k = i - j * q + (9 * m) / 4;  // stencil index of x_i - y_j
            acc += cb[static_cast<std::size_t>(j)] * st.th[static_cast<std::size_t>(k)];
        }
        w[static_cast<std::size_t>(i)] = acc * yg.hy;
    }
    return GridFunction(spec, 1, std::move(w));
}

GridFunction multiplier(const GridFunction& u, const CutoffConfig& cfg) {
    return multiplier_field(u.spec(), rho_field(u, cfg), cfg);
}

GridFunction apply_cutoff(const GridFunction& u, const CutoffConfig& cfg) {
    const double eps = cfg.epsilon;
    const GridFunction scaled = (1.0 / eps) * u;
    const GridFunction w = multiplier(scaled, cfg);
    return eps * pointwise_multiply(scaled, w);
}

GridFunction chi_one(const GridFunction& u, const GridFunction& v, const CutoffConfig& cfg) {
    require_same_grid(u, v);
    if (cfg.epsilon != 1.0)
        throw ConfigError("chi_one is defined for epsilon = 1 (scaling handled by callers)");
    const GridSpec& sp = u.spec();
    const YGrid yg = make_y_grid(sp, cfg);
    const ThetaStencil st(cfg.pair, sp);
    const GridFunction du = derivative(u);
    const GridFunction dv = derivative(v);
    const double h = sp.spacing();
    const int nc = u.components();
    const long n = static_cast<long>(sp.point_count());
    const long m = sp.per_unit;
    const long stencil_last = 3 * m / 2;

    const RhoField rho = rho_field(u, cfg);

    // Per-node coefficients: cb_j for the v-term, and
    // chi_bar'(rho_j) * D_u rho_j(u) v for the u-term (0 wherever chi_bar' = 0).
    std::vector<double> cb(rho.size());
    std::vector<double> cd(rho.size(), 0.0);
    for (std::size_t j = 0; j < rho.size(); ++j) {
        cb[j] = cfg.pair.chi_bar(rho.values[j]);
        const double cbp = cfg.pair.chi_bar_prime(rho.values[j]);
        if (cbp == 0.0) continue;
        const long ax = static_cast<long>(j) * yg.q - 2 * m - m / 4;
        const long lo = std::max(ax, 0L);
        const long hi = std::min(ax + stencil_last, n - 1);
        if (lo > hi) continue;
        double acc = 0.0;
        double first = 0.0;
        double last = 0.0;
        for (long i = lo; i <= hi; ++i) {
            const double t = st.th[static_cast<std::size_t>(i - ax)];
            const double tp = st.thp[static_cast<std::size_t>(i - ax)];
            double g = 0.0;
            for (int c = 0; c < nc; ++c) {
                const std::size_t iu = static_cast<std::size_t>(i);
                const double pu = t * u(iu, c);
                const double dpu = tp * u(iu, c) + t * du(iu, c);
                const double pv = t * v(iu, c);
                const double dpv = tp * v(iu, c) + t * dv(iu, c);
                g += pu * pv + dpu * dpv;
            }
            acc += g;
            if (i == lo) first = g;
            if (i == hi) last = g;
        }
        const double inner = h * (acc - 0.5 * first - 0.5 * last);
        cd[j] = cbp * inner / rho.values[j];
    }

    // Two scalar fields by the same quadrature as the multiplier.
    std::vector<double> aw(static_cast<std::size_t>(n) * 2, 0.0);
    for (long i = 0; i < n; ++i) {
        const long jq_lo = i + (3 * m) / 4;
        const long jq_hi = i + (9 * m) / 4;
        long j = (jq_lo + yg.q - 1) / yg.q;
        double acc_a = 0.0;
        double acc_w = 0.0;
        for (; j * yg.q <= jq_hi; ++j) {
            const long k = i - j * yg.q + (9 * m) / 4;
            const double t = st.th[static_cast<std::size_t>(k)];
            acc_a += cd[static_cast<std::size_t>(j)] * t;
            acc_w += cb[static_cast<std::size_t>(j)] * t;
        }
        aw[static_cast<std::size_t>(i) * 2] = acc_a * yg.hy;
        aw[static_cast<std::size_t>(i) * 2 + 1] = acc_w * yg.hy;
    }

    std::vector<double> out(u.samples().size());
    for (long i = 0; i < n; ++i) {
        const std::size_t iu = static_cast<std::size_t>(i);
        const double a = aw[iu * 2];
        const double w = aw[iu * 2 + 1];
        for (int c = 0; c < nc; ++c) out[iu * nc + c] = a * u(iu, c) + w * v(iu, c);
    }
    return GridFunction(sp, nc, std::move(out));
}

GridFunction derivative_candidate_L(const GridFunction& u, const GridFunction& v,
                                    const CutoffConfig& cfg) {
    require_same_grid(u, v);
    if (cfg.epsilon != 1.0)
        throw ConfigError("derivative_candidate_L is defined for epsilon = 1");
    const GridFunction cu = apply_cutoff(u, cfg);
    const GridFunction c1 = chi_one(u, v, cfg);
    const int nc = u.components();
    std::vector<double> out(u.samples().size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (int c = 0; c < nc; ++c) out[i * nc + c] = 2.0 * cu(i, c) * c1(i, c);
    return GridFunction(u.spec(), nc, std::move(out));
}

}  // namespace cutlab
