#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace cutlab {

using json = nlohmann::ordered_json;

/// One verified bound: measured value, target, direction, and where the
/// target comes from ("analytic", "identity", "certified", "measured-baseline").
struct CaseResult {
    std::string id;
    std::string digest;     // stable hash of the defining inputs
    double measured = 0.0;
    double target = 0.0;
    std::string cmp;        // "le" or "ge"
    std::string origin;
    bool pass = false;
    std::string note;

    static CaseResult le(const std::string& id, double measured, double target,
                         const std::string& origin, const std::string& note = "");
    static CaseResult ge(const std::string& id, double measured, double target,
                         const std::string& origin, const std::string& note = "");
};

struct FitResult {
    double exponent = 0.0;
    double r_squared = 0.0;
    double log_intercept = 0.0;
};

/// Least-squares fit of log y against log x; all inputs must be positive.
FitResult fit_loglog(const std::vector<double>& xs, const std::vector<double>& ys);

struct ExperimentReport {
    std::string suite_name;
    std::uint64_t seed = 0;
    std::vector<CaseResult> cases;
    std::map<std::string, FitResult> fitted_slopes;
    double runtime_seconds = 0.0;
    json meta;  // suite-specific tables (plot data, measured constants)

    bool all_pass() const;
    std::vector<std::string> failing_digests() const;

    json to_json() const;
    std::string to_csv() const;  // one row per case
};

std::uint64_t fnv1a64(const std::string& s);
std::string digest_of(const std::string& s);
std::string fmt17(double v);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace cutlab
