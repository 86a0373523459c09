#pragma once

#include "cutlab/grid.hpp"
#include "cutlab/partition.hpp"

#include <vector>

namespace cutlab {

/// Cut-off scale and quadrature settings. epsilon = 1 gives the unscaled
/// operator; the scaled version is chi_eps(u) = eps * chi(u / eps).
struct CutoffConfig {
    PartitionPair pair = PartitionPair::standard();
    double epsilon = 1.0;
    double y_spacing = 0.0;  // 0 = use the grid spacing

    /// Resolved y-quadrature step for a given grid; throws ConfigError when
    /// the step does not resolve supp theta (h_y <= 1/4), is not an integer
    /// multiple of the grid spacing, or 1/h_y is not an integer (the
    /// partition quadrature identity needs an integer lattice refinement).
    double resolved_y_spacing(const GridSpec& spec) const;
};

/// The windowed-norm field rho_y(u) = |theta(.-y) u|_{H1} on a uniform
/// y-grid covering [-L-2, L+2].
struct RhoField {
    double y0 = 0.0;
    double y_spacing = 0.0;
    std::vector<double> values;

    double y(std::size_t j) const { return y0 + y_spacing * static_cast<double>(j); }
    std::size_t size() const { return values.size(); }
    double max() const;
};

/// rho_y(u / epsilon is NOT applied here; this is the plain field for u).
/// The product derivative uses the closed-form theta' and the finite
/// difference derivative of u.
RhoField rho_field(const GridFunction& u, const CutoffConfig& cfg);

/// Scalar field w(x) = int chi_bar(rho_y(u)) theta(x-y) dy, values in [0,1].
GridFunction multiplier(const GridFunction& u, const CutoffConfig& cfg);

/// Same, reusing an already computed rho field (must match cfg and grid).
GridFunction multiplier_field(const GridSpec& spec, const RhoField& rho,
                              const CutoffConfig& cfg);

/// chi_eps(u) = eps * ( multiplier(u/eps) .* (u/eps) ).
GridFunction apply_cutoff(const GridFunction& u, const CutoffConfig& cfg);

/// The linearization kernel chi^1(u) . v (requires epsilon = 1):
/// first term integrates chi_bar'(rho_y) D_u rho_y(u) v against theta(x-y)
/// times u(x); second integrates chi_bar(rho_y) theta(x-y) times v(x).
/// The first integrand is defined as 0 wherever chi_bar'(rho_y) = 0.
GridFunction chi_one(const GridFunction& u, const GridFunction& v, const CutoffConfig& cfg);

/// Candidate derivative of the cut-off square: L(u).v = 2 chi(u) (chi^1(u).v),
/// componentwise (requires epsilon = 1).
GridFunction derivative_candidate_L(const GridFunction& u, const GridFunction& v,
                                    const CutoffConfig& cfg);

}  // namespace cutlab
