#pragma once

#include "cutlab/cutoff.hpp"
#include "cutlab/grid.hpp"
#include "cutlab/norms.hpp"

#include <functional>
#include <utility>

namespace cutlab {

/// The superposition square u -> u^2, componentwise.
GridFunction quadratic(const GridFunction& u);

/// The corrected nonlinearity F_eps(u) = chi_eps(u)^2.
GridFunction f_eps(const GridFunction& u, const CutoffConfig& cfg);

/// Pointwise cutoff of the square: g(u) = u^2 * transition(|u| / delta),
/// with a C1 transition equal to 1 on [0,1] and 0 on [2,inf).
struct PointwiseCutoffSpec {
    double delta = 0.1;
    std::function<double(double)> transition;  // default: quintic smoothstep profile

    static PointwiseCutoffSpec standard(double delta);
};

GridFunction pointwise_cutoff_g(const GridFunction& u, const PointwiseCutoffSpec& spec);

/// Sawtooth data for the Lipschitz blow-up counterexample: a triangular wave
/// on [0,1] with slopes +-1/eps_saw and amplitude delta/2, plus the shifted
/// partner v = u + delta' * plateau (C1 plateau, ramps of width 2h).
struct SawtoothSpec {
    double eps_saw;
    double delta;
    double delta_prime;

    SawtoothSpec(double e, double d, double dp);
};

struct SawtoothPair {
    GridFunction u;
    GridFunction v;
};

SawtoothPair sawtooth(const SawtoothSpec& spec, const GridSpec& grid);

/// weighted_norm(F(u) - F(v), eta) / weighted_norm(u - v, eta).
/// Throws std::invalid_argument when u == v.
double lipschitz_ratio(const std::function<GridFunction(const GridFunction&)>& F,
                       const GridFunction& u, const GridFunction& v, double eta);

/// Same ratio with both norms restricted to a window (used by the sawtooth
/// contrast, whose lower bound lives on the interior of the tooth support).
double lipschitz_ratio_window(const std::function<GridFunction(const GridFunction&)>& F,
                              const GridFunction& u, const GridFunction& v, const Window& w);

}  // namespace cutlab
