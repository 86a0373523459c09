#pragma once

#include "cutlab/cutoff.hpp"
#include "cutlab/grid.hpp"
#include "cutlab/report.hpp"

#include <set>
#include <string>
#include <vector>

namespace cutlab {

/// One configuration drives every suite (JSON file + CLI overrides).
struct LabConfig {
    int L = 16;
    int per_unit = 256;  // 1/h
    double eta = 0.5;
    double zeta = 0.2;
    std::vector<double> epsilon_list = {0.25,     0.125,     0.0625,
                                        0.03125,  0.015625,  0.0078125};
    std::uint64_t seed = 42;
    std::string out_dir = "reports";
    std::set<std::string> suites = {"certify", "lemma", "h2", "sawtooth", "derivative"};

    // sample census (the "families" block of the config file)
    int smallball_samples = 50;
    int equivariance_samples = 20;
    int uniform_bound_samples = 100;
    int h2_samples = 200;
    int lipschitz_pairs = 50;
    int derivative_pairs = 20;
    int product_pairs = 100;

    // sawtooth contrast
    std::vector<double> eps_saw_list = {1.0 / 16, 1.0 / 64, 1.0 / 256};
    double sawtooth_delta = 0.1;
    double sawtooth_delta_prime = 0.02;
    double sawtooth_y_spacing = 1.0 / 1024;

    GridSpec grid() const { return GridSpec(L, per_unit); }
    void validate() const;

    static LabConfig from_json(const json& j);
    json to_json() const;
};

ExperimentReport suite_certify(const LabConfig& cfg);
ExperimentReport suite_lemma_properties(const LabConfig& cfg);
ExperimentReport suite_h2_scaling(const LabConfig& cfg);
ExperimentReport suite_sawtooth_contrast(const LabConfig& cfg);
ExperimentReport suite_derivative(const LabConfig& cfg);

/// Runs the configured suites in canonical order and writes per-suite JSON,
/// CSV, and SVG plots into cfg.out_dir. Returns the reports.
std::vector<ExperimentReport> run_suites(const LabConfig& cfg);

}  // namespace cutlab
