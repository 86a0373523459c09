#include "cutlab/report.hpp"

#include "cutlab/grid.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace cutlab {

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string digest_of(const std::string& s) {
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(s)));
    return std::string(buf);
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
}

CaseResult CaseResult::le(const std::string& id, double measured, double target,
                          const std::string& origin, const std::string& note) {
    CaseResult c;
    c.id = id;
    c.digest = digest_of(id + "|" + fmt17(measured) + "|" + fmt17(target));
    c.measured = measured;
    c.target = target;
    c.cmp = "le";
    c.origin = origin;
    c.pass = measured <= target;
    c.note = note;
    return c;
}

CaseResult CaseResult::ge(const std::string& id, double measured, double target,
                          const std::string& origin, const std::string& note) {
    CaseResult c = le(id, measured, target, origin, note);
    c.cmp = "ge";
    c.pass = measured >= target;
    return c;
}

FitResult fit_loglog(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw ConfigError("fit needs matching samples, at least two points");
    const std::size_t n = xs.size();
    double sx = 0.0;
    double sy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(xs[i] > 0.0) || !(ys[i] > 0.0))
            throw ConfigError("log-log fit needs positive data");
        sx += std::log(xs[i]);
        sy += std::log(ys[i]);
    }
    const double mx = sx / static_cast<double>(n);
    const double my = sy / static_cast<double>(n);
    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = std::log(xs[i]) - mx;
        const double dy = std::log(ys[i]) - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    FitResult f;
    f.exponent = sxy / sxx;
    f.log_intercept = my - f.exponent * mx;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double pred = f.log_intercept + f.exponent * std::log(xs[i]);
        const double r = std::log(ys[i]) - pred;
        ss_res += r * r;
    }
    f.r_squared = syy == 0.0 ? 1.0 : 1.0 - ss_res / syy;
    return f;
}

bool ExperimentReport::all_pass() const {
    for (const auto& c : cases)
        if (!c.pass) return false;
    return true;
}

std::vector<std::string> ExperimentReport::failing_digests() const {
    std::vector<std::string> out;
    for (const auto& c : cases)
        if (!c.pass) out.push_back(c.digest + " (" + c.id + ")");
    return out;
}

json ExperimentReport::to_json() const {
    json j;
    j["suite_name"] = suite_name;
    j["seed"] = seed;
    j["cases"] = json::array();
    for (const auto& c : cases) {
        json cj;
        cj["id"] = c.id;
        cj["digest"] = c.digest;
        cj["measured"] = c.measured;
        cj["target"] = c.target;
        cj["cmp"] = c.cmp;
        cj["origin"] = c.origin;
        cj["pass"] = c.pass;
        if (!c.note.empty()) cj["note"] = c.note;
        j["cases"].push_back(cj);
    }
    if (!fitted_slopes.empty()) {
        json fj;
        for (const auto& [name, fit] : fitted_slopes) {
            fj[name] = {{"exponent", fit.exponent},
                        {"r_squared", fit.r_squared},
                        {"log_intercept", fit.log_intercept}};
        }
        j["fitted_slopes"] = fj;
    }
    if (!meta.is_null()) j["meta"] = meta;
    j["runtime_seconds"] = runtime_seconds;
    return j;
}

std::string ExperimentReport::to_csv() const {
    std::ostringstream out;
    out << "id,digest,measured,cmp,target,origin,pass,note\n";
    for (const auto& c : cases) {
        out << c.id << "," << c.digest << "," << fmt17(c.measured) << "," << c.cmp << ","
            << fmt17(c.target) << "," << c.origin << "," << (c.pass ? "1" : "0") << "," << c.note
            << "\n";
    }
    return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open for writing: " + path);
    f << content;
}

}  // namespace cutlab
