#include "cutlab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace cutlab {

GridSpec::GridSpec(int L, int m) : half_length(L), per_unit(m) {
    if (L <= 0) throw ConfigError("grid half-length L must be a positive integer");
    if (m <= 0) throw ConfigError("grid resolution 1/h must be a positive integer");
}

GridSpec GridSpec::from_spacing(int L, double h) {
    if (!(h > 0.0)) throw ConfigError("grid spacing h must be positive");
    const double m_real = 1.0 / h;
    const double m_round = std::round(m_real);
    if (std::abs(m_real - m_round) > 1e-9 * m_real)
        throw ConfigError("1/h must be an integer, got h = " + std::to_string(h));
    return GridSpec(L, static_cast<int>(m_round));
}

std::size_t GridSpec::index_of(double xq) const {
    const double idx = (xq + half_length) * per_unit;
    const double r = std::round(idx);
    if (std::abs(idx - r) > 1e-6 || r < 0 || r >= static_cast<double>(point_count()))
        throw ConfigError("point is not on the grid: x = " + std::to_string(xq));
    return static_cast<std::size_t>(r);
}

GridFunction::GridFunction(GridSpec spec, int components, std::vector<double> samples)
    : spec_(spec), components_(components), samples_(std::move(samples)) {
    if (components_ < 1) throw ConfigError("codomain dimension n must be >= 1");
    if (samples_.size() != spec_.point_count() * static_cast<std::size_t>(components_))
        throw ConfigError("sample array size does not match grid");
    for (double s : samples_)
        if (!std::isfinite(s)) throw ConfigError("samples must be finite");
}

GridFunction GridFunction::zeros(GridSpec spec, int components) {
    return GridFunction(spec, components,
                        std::vector<double>(spec.point_count() * components, 0.0));
}

GridFunction GridFunction::sample(GridSpec spec, const std::function<double(double)>& f) {
    std::vector<double> s(spec.point_count());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = f(spec.x(i));
    return GridFunction(spec, 1, std::move(s));
}

GridFunction GridFunction::sample(GridSpec spec, int components,
                                  const std::function<double(double, int)>& f) {
    std::vector<double> s(spec.point_count() * components);
    for (std::size_t i = 0; i < spec.point_count(); ++i)
        for (int c = 0; c < components; ++c) s[i * components + c] = f(spec.x(i), c);
    return GridFunction(spec, components, std::move(s));
}

double GridFunction::max_abs() const {
    double m = 0.0;
    for (double s : samples_) m = std::max(m, std::abs(s));
    return m;
}

Window::IndexRange Window::indices(const GridSpec& spec) const {
    if (!(a < b)) throw ConfigError("window requires a < b");
    const std::size_t i0 = spec.index_of(a);
    const std::size_t i1 = spec.index_of(b);
    return IndexRange{i0, i1};
}

void require_same_grid(const GridFunction& u, const GridFunction& v) {
    if (!(u.spec() == v.spec()) || u.components() != v.components())
        throw MismatchError("grid functions live on different grids");
}

GridFunction translate(const GridFunction& u, long k) {
    const auto& sp = u.spec();
    const long n = static_cast<long>(sp.point_count());
    if (std::abs(k) >= n - 1)
        throw ConfigError("translation shift leaves the domain");
    const int nc = u.components();
    std::vector<double> out(u.samples().size(), 0.0);
    for (long i = 0; i < n; ++i) {
        const long src = i - k;  // result(x) = u(x - k h)
        if (src < 0 || src >= n) continue;
        for (int c = 0; c < nc; ++c)
            out[static_cast<std::size_t>(i) * nc + c] = u(static_cast<std::size_t>(src), c);
    }
    return GridFunction(sp, nc, std::move(out));
}

GridFunction derivative(const GridFunction& u) {
    const auto& sp = u.spec();
    const std::size_t n = sp.point_count();
    const int nc = u.components();
    const double h = sp.spacing();
    std::vector<double> out(u.samples().size());
    for (int c = 0; c < nc; ++c) {
        out[0 * nc + c] = (u(1, c) - u(0, c)) / h;
        for (std::size_t i = 1; i + 1 < n; ++i)
            out[i * nc + c] = (u(i + 1, c) - u(i - 1, c)) / (2.0 * h);
        out[(n - 1) * nc + c] = (u(n - 1, c) - u(n - 2, c)) / h;
    }
    return GridFunction(sp, nc, std::move(out));
}

GridFunction pointwise_multiply(const GridFunction& u, const GridFunction& w) {
    if (!(u.spec() == w.spec())) throw MismatchError("multiplier grid mismatch");
    if (w.components() != 1) throw MismatchError("multiplier must be scalar (n = 1)");
    const int nc = u.components();
    std::vector<double> out(u.samples().size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (int c = 0; c < nc; ++c) out[i * nc + c] = u(i, c) * w(i, 0);
    return GridFunction(u.spec(), nc, std::move(out));
}

GridFunction operator+(const GridFunction& u, const GridFunction& v) {
    require_same_grid(u, v);
    std::vector<double> out(u.samples().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = u.samples()[i] + v.samples()[i];
    return GridFunction(u.spec(), u.components(), std::move(out));
}

GridFunction operator-(const GridFunction& u, const GridFunction& v) {
    require_same_grid(u, v);
    std::vector<double> out(u.samples().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = u.samples()[i] - v.samples()[i];
    return GridFunction(u.spec(), u.components(), std::move(out));
}

GridFunction operator*(double a, const GridFunction& u) {
    std::vector<double> out(u.samples().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a * u.samples()[i];
    return GridFunction(u.spec(), u.components(), std::move(out));
}

void write_csv(const GridFunction& u, std::ostream& out) {
    out << "x";
    for (int c = 1; c <= u.components(); ++c) out << ",u" << c;
    out << "\n";
    char buf[64];
    for (std::size_t i = 0; i < u.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", u.x(i));
        out << buf;
        for (int c = 0; c < u.components(); ++c) {
            std::snprintf(buf, sizeof buf, "%.17g", u(i, c));
            out << "," << buf;
        }
        out << "\n";
    }
}

void write_csv(const GridFunction& u, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw ConfigError("cannot open for writing: " + path);
    write_csv(u, f);
}

GridFunction read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("empty CSV");
    int nc = 0;
    for (char ch : line)
        if (ch == ',') ++nc;
    if (nc < 1) throw ConfigError("CSV header must be x,u1,...,un");
    std::vector<double> xs;
    std::vector<double> vals;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        int col = 0;
        while (std::getline(ss, cell, ',')) {
            const double v = std::stod(cell);
            if (col == 0)
                xs.push_back(v);
            else
                vals.push_back(v);
            ++col;
        }
        if (col != nc + 1) throw ConfigError("ragged CSV row");
    }
    if (xs.size() < 3) throw ConfigError("CSV grid too small");
    const double h = xs[1] - xs[0];
    const double L = -xs.front();
    if (std::abs(L - std::round(L)) > 1e-9 || std::abs(xs.back() - L) > 1e-9)
        throw ConfigError("CSV grid is not a symmetric integer domain");
    GridSpec spec = GridSpec::from_spacing(static_cast<int>(std::round(L)), h);
    if (spec.point_count() != xs.size()) throw ConfigError("CSV row count does not match grid");
    return GridFunction(spec, nc, std::move(vals));
}

GridFunction read_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open: " + path);
    return read_csv(f);
}

}  // namespace cutlab
