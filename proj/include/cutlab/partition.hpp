#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace cutlab {

/// A certification invariant failed; the message names the violated bound.
struct CertifyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Quintic smoothstep: S(0)=0, S(1)=1, S'(0)=S'(1)=S''(0)=S''(1)=0,
/// max |S'| = 15/8 at t = 1/2. Clamped outside [0,1].
double smoothstep5(double t);
double smoothstep5_prime(double t);

/// The cut bump chi_bar and the partition-of-unity generator theta, with
/// their certified constants.
///
/// chi_bar: 1 on |x| <= 1, 0 on |x| >= 2, quintic transition in between,
/// |chi_bar'| <= 15/8 everywhere.
/// theta: ramp difference R(x) - R(x-1) with R the smoothstep ramp over
/// (-1/4, 1/4); integer translates of theta sum to 1 exactly.
struct PartitionPair {
    std::function<double(double)> chi_bar;
    std::function<double(double)> chi_bar_prime;
    std::function<double(double)> theta;
    std::function<double(double)> theta_prime;
    double chi_bar_slope_max = 0.0;
    double theta_support_lo = 0.0;
    double theta_support_hi = 0.0;

    static PartitionPair standard();
};

struct CertificationRecord {
    double slope_max = 0.0;          // max |chi_bar'|
    double partition_defect = 0.0;   // max |sum_j theta(x-j) - 1|
    double theta_min_on_unit = 0.0;  // min theta over [0,1]
    double theta_max_on_unit = 0.0;  // max theta over [0,1]

    std::string to_json() const;
};

/// Dense-samples every PartitionPair invariant at resolution h_cert
/// (h_cert <= 1e-4 required) and fails hard on any violation.
CertificationRecord certify(const PartitionPair& pair, double h_cert = 1e-4);

}  // namespace cutlab
