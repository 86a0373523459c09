#include "cutlab/samples.hpp"

#include "cutlab/norms.hpp"
#include "cutlab/partition.hpp"

#include <cmath>
#include <random>

namespace cutlab {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

// C2 window equal to 1 on [-L+6, L-6], supported in [-L+4, L-4].
double support_window(double x, int L) {
    const double lo = -L + 4.0;
    const double hi = L - 4.0;
    if (x <= lo || x >= hi) return 0.0;
    return std::min(smoothstep5((x - lo) / 2.0), smoothstep5((hi - x) / 2.0));
}

struct Modes {
    std::vector<double> amp;
    std::vector<double> freq;
    std::vector<double> phase;

    double eval(double x) const {
        double s = 0.0;
        for (std::size_t k = 0; k < amp.size(); ++k) s += amp[k] * std::cos(freq[k] * x + phase[k]);
        return s;
    }
    double eval_prime(double x) const {
        double s = 0.0;
        for (std::size_t k = 0; k < amp.size(); ++k)
            s -= amp[k] * freq[k] * std::sin(freq[k] * x + phase[k]);
        return s;
    }
};

Modes draw_modes(std::mt19937_64& rng, int count, double freq_lo, double freq_hi) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> uf(freq_lo, freq_hi);
    std::uniform_real_distribution<double> up(0.0, 2.0 * 3.14159265358979324);
    Modes m;
    m.amp.resize(count);
    m.freq.resize(count);
    m.phase.resize(count);
    for (int k = 0; k < count; ++k) {
        m.amp[k] = gauss(rng);
        m.freq[k] = uf(rng);
        m.phase[k] = up(rng);
    }
    return m;
}

GridFunction sample_windowed(const GridSpec& spec, const Modes& m) {
    const int L = spec.half_length;
    return GridFunction::sample(
        spec, [&](double x) { return support_window(x, L) * m.eval(x); });
}

double max_abs_derivative(const GridFunction& u) {
    return derivative(u).max_abs();
}

GridFunction smooth_random_sample(const GridSpec& spec, std::mt19937_64& rng, double amplitude) {
    const Modes m = draw_modes(rng, 10, 0.2, 2.0);
    GridFunction u = sample_windowed(spec, m);
    const double peak = u.max_abs();
    if (peak == 0.0) throw ConfigError("degenerate random sample");
    return (amplitude / peak) * u;
}

GridFunction rough_random_sample(const GridSpec& spec, std::mt19937_64& rng, double amplitude,
                                 double roughness) {
    if (!(roughness > 0.0))
        throw ConfigError("rough-random samples need a positive roughness scale");
    if (roughness < 4.0 * amplitude)
        throw ConfigError("roughness below 4x amplitude: use a smooth-random sample instead");
    const double nyquist = 3.14159265358979324 / spec.spacing();
    const double omega_cap = 0.4 * nyquist;
    // a wiggle of sup s at frequency w carries |u'| ~ 0.7 s w on the grid,
    // and the wiggle may use most of the amplitude budget
    if (roughness > 0.6 * amplitude * 0.7 * omega_cap)
        throw ConfigError("roughness envelope not representable at this amplitude and grid");
    const Modes base = draw_modes(rng, 10, 0.2, 2.0);
    const double omega = std::min(std::max(roughness / (0.3 * amplitude), 8.0), omega_cap);
    const Modes wig = draw_modes(rng, 12, 0.6 * omega, omega);

    GridFunction ub = sample_windowed(spec, base);     // shape, rescaled below
    const GridFunction uw = sample_windowed(spec, wig);
    const double dw = max_abs_derivative(uw);
    const double pb = ub.max_abs();
    if (dw == 0.0 || pb == 0.0) throw ConfigError("degenerate rough sample");

    // two-scalar fixed point on u = a*base + w*wiggle with targets
    // max|u| = amplitude, max|u'| = roughness
    double a = 0.5 * amplitude / pb;
    double w = roughness / dw;
    GridFunction u = a * ub + w * uw;
    for (int pass = 0; pass < 6; ++pass) {
        const double d = max_abs_derivative(u);
        const double s = u.max_abs();
        if (d > 0.0) w *= roughness / d;
        if (s > 0.0) a = std::max(a * amplitude / s, 0.0);
        u = a * ub + w * uw;
    }
    return u;
}

GridFunction sawtooth_sample(const GridSpec& spec, double amplitude, double slope) {
    // teeth on [0,1] with amplitude ~ max|u| and |u'| ~ slope
    const double delta = 2.0 * amplitude;
    long teeth = static_cast<long>(std::round(slope / delta));
    if (teeth < 1) teeth = 1;
    const double period = 1.0 / static_cast<double>(teeth);
    const double per_h = period / spec.spacing();
    if (per_h < 8.0) throw ConfigError("grid too coarse for sawtooth sample");
    return GridFunction::sample(spec, [&](double x) {
        if (x < 0.0 || x > 1.0) return 0.0;
        const double s = x / period - std::floor(x / period);
        const double tri = s <= 0.5 ? 2.0 * s : 2.0 * (1.0 - s);
        return 0.5 * delta * tri;
    });
}

}  // namespace

GridFunction make_sample(const SampleFamily& family, const GridSpec& spec, std::uint64_t index) {
    std::mt19937_64 rng(mix_seed(family.seed, index));
    switch (family.kind) {
        case SampleKind::SmoothRandom:
            return smooth_random_sample(spec, rng, family.amplitude);
        case SampleKind::RoughRandom:
            return rough_random_sample(spec, rng, family.amplitude, family.roughness);
        case SampleKind::Sawtooth:
            return sawtooth_sample(spec, family.amplitude, family.roughness);
        case SampleKind::ExponentialGrowth: {
            const double rate = family.roughness;
            const double amp = family.amplitude;
            return GridFunction::sample(
                spec, [&](double x) { return amp * std::exp(rate * std::abs(x) / 2.0); });
        }
        case SampleKind::SmallBall: {
            GridFunction u = smooth_random_sample(spec, rng, 1.0);
            return normalize_uniform(u, family.amplitude);
        }
    }
    throw ConfigError("unknown sample kind");
}

GridFunction normalize_uniform(const GridFunction& u, double target) {
    const double n = uniform_norm(u);
    if (n == 0.0) throw ConfigError("cannot normalize the zero function");
    return (target / n) * u;
}

GridFunction normalize_weighted(const GridFunction& u, double eta, double target) {
    const double n = weighted_norm(u, WeightedNormSpec(eta));
    if (n == 0.0) throw ConfigError("cannot normalize the zero function");
    return (target / n) * u;
}

}  // namespace cutlab
