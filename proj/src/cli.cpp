#include "cutlab/cli.hpp"

#include "cutlab/suites.hpp"

#include <cmath>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

namespace cutlab {
namespace {

// accepts "1/16" style fractions as well as plain decimals
double parse_fraction(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return std::stod(s);
    const double num = std::stod(s.substr(0, slash));
    const double den = std::stod(s.substr(slash + 1));
    if (den == 0.0) throw ConfigError("zero denominator in '" + s + "'");
    return num / den;
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(parse_fraction(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(parse_fraction(cur));
    return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"cutlab: verification suites for the partition-of-unity cutoff operator"};
    app.require_subcommand(0, 1);
    app.fallthrough();
    app.set_help_flag("--help", "print help");  // frees -h/--h for the spacing override

    std::string config_path;
    std::string out_dir;
    std::string eps_list_str;
    std::string eps_saw_str;
    std::uint64_t seed = 0;
    int L = 0;
    double h = 0.0;
    double eta = -1.0;
    double zeta = -1.0;
    int h2_samples = 0;

    app.add_option("--config", config_path, "JSON config file");
    auto* seed_opt = app.add_option("--seed", seed, "RNG seed override");
    auto* out_opt = app.add_option("--out", out_dir, "output directory override");
    app.add_option("--L", L, "domain half-length");
    app.add_option("--h", h, "grid spacing (1/h integer)");
    app.add_option("--eta", eta, "weighted-norm exponent");
    app.add_option("--zeta", zeta, "base-space exponent for derivative checks");
    app.add_option("--epsilon-list", eps_list_str, "comma-separated cut-off scales");
    app.add_option("--eps-saw", eps_saw_str, "comma-separated sawtooth slopes (fractions ok)");
    app.add_option("--h2-samples", h2_samples, "samples per epsilon in the scaling suite");

    const char* names[] = {"certify", "lemma", "h2", "sawtooth", "derivative", "all"};
    const char* descs[] = {"partition certification", "cut-off property suite",
                           "scaling-law suite", "sawtooth contrast suite",
                           "derivative check suite", "every suite"};
    for (int i = 0; i < 6; ++i) app.add_subcommand(names[i], descs[i]);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream dummy;
        if (e.get_exit_code() == 0) {  // --help
            std::cout << app.help();
            return 0;
        }
        std::cerr << "argument error: " << e.what() << "\n";
        return 2;
    }

    LabConfig cfg;
    try {
        if (!config_path.empty()) {
            std::ifstream f(config_path);
            if (!f) {
                std::cerr << "config error: cannot open " << config_path << "\n";
                return 2;
            }
            json j;
            f >> j;
            cfg = LabConfig::from_json(j);
        }
        for (int i = 0; i < 5; ++i) {
            if (app.get_subcommand(names[i])->parsed()) cfg.suites = {names[i]};
        }
        if (app.get_subcommand("all")->parsed())
            cfg.suites = {"certify", "lemma", "h2", "sawtooth", "derivative"};
        if (seed_opt->count() > 0) cfg.seed = seed;
        if (out_opt->count() > 0) cfg.out_dir = out_dir;
        if (L > 0) cfg.L = L;
        if (h > 0.0) cfg.per_unit = GridSpec::from_spacing(1, h).per_unit;
        if (eta >= 0.0) cfg.eta = eta;
        if (zeta >= 0.0) cfg.zeta = zeta;
        if (!eps_list_str.empty()) cfg.epsilon_list = parse_list(eps_list_str);
        if (!eps_saw_str.empty()) cfg.eps_saw_list = parse_list(eps_saw_str);
        if (h2_samples > 0) cfg.h2_samples = h2_samples;
        cfg.validate();
    } catch (const json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }

    try {
        const auto reports = run_suites(cfg);
        bool ok = true;
        for (const auto& rep : reports) {
            const bool suite_ok = rep.all_pass();
            std::cout << (suite_ok ? "[PASS] " : "[FAIL] ") << rep.suite_name << " ("
                      << rep.cases.size() << " cases, " << fmt17(rep.runtime_seconds)
                      << " s)\n";
            if (!suite_ok) {
                ok = false;
                for (const auto& d : rep.failing_digests())
                    std::cerr << "  failing case " << d << "\n";
            }
        }
        return ok ? 0 : 1;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args);
}

}  // namespace cutlab
