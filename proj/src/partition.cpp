#include "cutlab/partition.hpp"

#include <cmath>
#include <cstdio>

namespace cutlab {

double smoothstep5(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    return t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
}

double smoothstep5_prime(double t) {
    if (t <= 0.0 || t >= 1.0) return 0.0;
    const double a = t * (1.0 - t);
    return 30.0 * a * a;
}

namespace {

double ramp(double x) { return smoothstep5((x + 0.25) * 2.0); }
double ramp_prime(double x) { return 2.0 * smoothstep5_prime((x + 0.25) * 2.0); }

double chi_bar_fn(double x) {
    const double a = std::abs(x);
    if (a <= 1.0) return 1.0;
    if (a >= 2.0) return 0.0;
    return 1.0 - smoothstep5(a - 1.0);
}

double chi_bar_prime_fn(double x) {
    const double a = std::abs(x);
    if (a <= 1.0 || a >= 2.0) return 0.0;
    const double d = -smoothstep5_prime(a - 1.0);
    return x > 0.0 ? d : -d;
}

double theta_fn(double x) { return ramp(x) - ramp(x - 1.0); }
double theta_prime_fn(double x) { return ramp_prime(x) - ramp_prime(x - 1.0); }

}  // namespace

PartitionPair PartitionPair::standard() {
    PartitionPair p;
    p.chi_bar = chi_bar_fn;
    p.chi_bar_prime = chi_bar_prime_fn;
    p.theta = theta_fn;
    p.theta_prime = theta_prime_fn;
    p.chi_bar_slope_max = 15.0 / 8.0;  // max of S'(t) = 30 t^2 (1-t)^2 at t = 1/2
    p.theta_support_lo = -0.25;
    p.theta_support_hi = 1.25;
    return p;
}

std::string CertificationRecord::to_json() const {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "{\"slope_max\": %.17g, \"partition_defect\": %.17g, "
                  "\"theta_min_on_unit\": %.17g, \"theta_max_on_unit\": %.17g}",
                  slope_max, partition_defect, theta_min_on_unit, theta_max_on_unit);
    return std::string(buf);
}

CertificationRecord certify(const PartitionPair& pair, double h_cert) {
    if (!(h_cert > 0.0) || h_cert > 1e-4)
        throw CertifyError("certification resolution must satisfy 0 < h_cert <= 1e-4");

    CertificationRecord rec;
    rec.theta_min_on_unit = 1e300;
    rec.theta_max_on_unit = -1e300;

    const double span = 3.5;  // covers supp chi_bar and supp theta with margin
    const long steps = static_cast<long>(std::ceil(2.0 * span / h_cert));
    double fd_slope_max = 0.0;
    for (long i = 0; i <= steps; ++i) {
        const double x = -span + 2.0 * span * static_cast<double>(i) / steps;

        const double cb = pair.chi_bar(x);
        if (std::abs(x) < 1.0 && std::abs(cb - 1.0) > 1e-12)
            throw CertifyError("chi_bar must equal 1 on |x| < 1");
        if (std::abs(x) > 2.0 && std::abs(cb) > 1e-12)
            throw CertifyError("chi_bar must vanish on |x| > 2");
        if (cb < -1e-12 || cb > 1.0 + 1e-12)
            throw CertifyError("chi_bar must take values in [0, 1]");

        const double cbp = pair.chi_bar_prime(x);
        if (std::abs(cbp) > 2.0) throw CertifyError("|chi_bar'| must be bounded by 2");
        if (std::abs(cbp) > rec.slope_max) rec.slope_max = std::abs(cbp);

        // cross-check the provided derivative against a finite difference;
        // this is what catches a jump discontinuity (unbounded slope)
        const double fd = (pair.chi_bar(x + h_cert) - pair.chi_bar(x - h_cert)) / (2.0 * h_cert);
        if (std::abs(fd) > 2.0 + 1e-6)
            throw CertifyError("|chi_bar'| must be bounded by 2");
        if (std::abs(fd) > fd_slope_max) fd_slope_max = std::abs(fd);

        const double th = pair.theta(x);
        if (th < -1e-12) throw CertifyError("theta must be nonnegative");
        if ((x <= pair.theta_support_lo || x >= pair.theta_support_hi) && std::abs(th) > 1e-12)
            throw CertifyError("theta must vanish outside its declared support");
        if (x >= 0.0 && x <= 1.0) {
            if (th < rec.theta_min_on_unit) rec.theta_min_on_unit = th;
            if (th > rec.theta_max_on_unit) rec.theta_max_on_unit = th;
        }

        // partition-of-unity defect on a full period (theta spans ~3 translates)
        if (x >= -0.5 && x <= 1.5) {
            double s = 0.0;
            for (int j = -3; j <= 3; ++j) s += pair.theta(x - j);
            const double defect = std::abs(s - 1.0);
            if (defect > rec.partition_defect) rec.partition_defect = defect;
        }
    }

    if (std::abs(fd_slope_max - rec.slope_max) > 1e-3)
        throw CertifyError("chi_bar_prime is inconsistent with chi_bar");
    if (rec.partition_defect > 1e-12)
        throw CertifyError("partition-of-unity defect exceeds 1e-12");
    if (rec.theta_min_on_unit < 0.5 - 1e-12 || rec.theta_max_on_unit > 1.0 + 1e-12)
        throw CertifyError("theta must map [0,1] into [1/2, 1]");
    return rec;
}

}  // namespace cutlab
