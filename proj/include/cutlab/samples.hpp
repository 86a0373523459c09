#pragma once

#include "cutlab/grid.hpp"

#include <cstdint>

namespace cutlab {

/// Seeded sample generators that instantiate the "for all u" quantifiers of
/// the verification suites. All samples are scalar (n = 1).
enum class SampleKind {
    SmoothRandom,       // band-limited low-frequency noise
    RoughRandom,        // smooth base plus a high-frequency part with a
                        // prescribed derivative envelope
    Sawtooth,           // triangular wave on [0,1]
    ExponentialGrowth,  // amplitude * e^{rate |x| / 2}; not windowed
    SmallBall,          // smooth noise normalized to uniform_norm = amplitude
};

struct SampleFamily {
    SampleKind kind = SampleKind::SmoothRandom;
    double amplitude = 1.0;  // target max |u| (uniform_norm for SmallBall)
    double roughness = 0.0;  // target max |u'| (RoughRandom); growth rate
                             // (ExponentialGrowth); slope (Sawtooth)
    std::uint64_t seed = 0;
};

/// Deterministic: the result depends only on (family, spec, index).
/// Random kinds are smoothly windowed into [-L+4, L-4]; generated samples
/// respect the declared scales within 10%.
GridFunction make_sample(const SampleFamily& family, const GridSpec& spec, std::uint64_t index);

/// Rescale so uniform_norm(u) == target (u must be nonzero).
GridFunction normalize_uniform(const GridFunction& u, double target);

/// Rescale so weighted_norm(u, eta) == target (u must be nonzero).
GridFunction normalize_weighted(const GridFunction& u, double eta, double target);

/// SplitMix64 stream mixer used to derive per-case RNG seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace cutlab
