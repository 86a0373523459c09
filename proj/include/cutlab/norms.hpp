#pragma once

#include "cutlab/grid.hpp"

namespace cutlab {

/// Decay-tolerance exponent eta of the weighted norm. Functions may grow
/// like e^{eta |x|} and still have finite norm.
struct WeightedNormSpec {
    double eta = 0.5;
    double eta_max = 1.0;

    WeightedNormSpec() = default;
    explicit WeightedNormSpec(double e, double e_max = 1.0) : eta(e), eta_max(e_max) {
        if (!(eta >= 0.0) || !(eta < eta_max))
            throw ConfigError("weighted norm requires 0 <= eta < eta_max");
    }
};

/// H1 norm of the restriction of u to a grid-aligned window:
/// sqrt( int_w |u|^2 + |u'|^2 ), trapezoid quadrature, derivative by central
/// differences inside the window and one-sided at the window endpoints.
double h1_norm_window(const GridFunction& u, const Window& w);

/// H1 inner product over a window, same derivative convention;
/// h1_inner(u, u, w) == h1_norm_window(u, w)^2.
double h1_inner(const GridFunction& u, const GridFunction& v, const Window& w);

/// Weighted norm: sqrt( sum_{j=-L}^{L-1} e^{-2 eta |j|} |u|_{H1([j,j+1])}^2 ).
double weighted_norm(const GridFunction& u, const WeightedNormSpec& spec);

/// Uniformly-local norm: max over all grid-aligned offsets y of
/// |u|_{H1([y, y+1])}, y in {-L, -L+h, ..., L-1}.
double uniform_norm(const GridFunction& u);

}  // namespace cutlab
